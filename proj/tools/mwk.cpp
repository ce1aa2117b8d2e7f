// Copyright 2026 The mwk Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// mwk: groups, evaluation and verification suites from the command line.
// Exit codes: 0 success, 1 a check or oracle comparison failed, 2 usage or
// input error.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "mwk/error.hpp"
#include "mwk/json_io.hpp"
#include "mwk/operations.hpp"
#include "mwk/parse.hpp"
#include "mwk/snf.hpp"
#include "mwk/suites.hpp"

namespace {

using namespace mwk;

struct Output {
  bool text = false;
  void emit(const Json& j, const std::string& text_form) const {
    if (text) std::cout << text_form;
    else std::cout << j.dump(2) << "\n";
  }
};

int cmd_group(int64_t q, int n, int d_max, const Output& out) {
  const FiniteField& F = FiniteField::of_order(q);
  std::vector<BigInt> model = to_big(group_structure_model(F, n));
  SnfOracleResult snf = snf_oracle(F, n, d_max);
  int stable = snf.first_stable_bound();
  bool agree = model == snf.final_group();
  Json bounds = Json::array();
  std::string per_bound;
  for (size_t d = 0; d < snf.groups.size(); ++d) {
    bounds.push_back({{"d_max", d},
                      {"generators", snf.generators[d]},
                      {"relations", snf.relations[d]},
                      {"factors", group_to_json(snf.groups[d])}});
    per_bound += "  d<=" + std::to_string(d) + ": " + group_to_string(snf.groups[d]) + "  (" +
                 std::to_string(snf.generators[d]) + " generators, " + std::to_string(snf.relations[d]) +
                 " relations)\n";
  }
  Json j = {{"field", F.name()},
            {"degree", n},
            {"model", group_to_json(model)},
            {"presentation", bounds},
            {"stable_from", stable},
            {"stabilized", snf.stabilized},
            {"agree", agree}};
  out.emit(j, "K^MW_" + std::to_string(n) + "(" + F.name() + ")\n  model: " + group_to_string(model) +
                  "\n  presentation by eta bound:\n" + per_bound + "  stable from d_max=" + std::to_string(stable) +
                  "\n  " + (agree ? "oracles agree" : "ORACLES DISAGREE") + "\n");
  if (!agree) std::cerr << "mwk: model and presentation oracles disagree\n";
  else if (!snf.stabilized) std::cerr << "mwk: presentation has not stabilized by d_max=" << d_max << "\n";
  return agree ? 0 : 1;
}

template <class U>
Presentation<U> presentation_of(const SymExpr<U>& x, int n) {
  Presentation<U> p{x.field(), n, {}};
  for (auto& [m, c] : x.terms()) {
    if (m.d != 0) fail(ErrorCode::InvalidArgument, "operations take sums of pure symbols; found an eta term");
    for (int64_t k = 0; k < (c < 0 ? -c : c); ++k) p.add(c < 0 ? -1 : 1, m.units);
  }
  return p;
}

Json value_json(const ThElem& v) { return to_json(v); }
Json value_json(const CanonicalForm& v) { return to_json(v); }
bool value_zero(const ThElem& v) { return v.is_zero(); }
bool value_zero(const CanonicalForm& v) { return v.is_zero(); }

template <class U>
int eval_on(const FieldSpec& f, const std::string& text, int degree, const std::string& op_file, Theory source,
            const Output& out) {
  SymExpr<U> x(*f.base);
  if constexpr (std::is_same_v<U, FFUnit>) x = parse_ff_expr(*f.base, text);
  else x = parse_rat_expr(*f.base, text);
  Json j = {{"field", f.to_string()}, {"input", expr_to_string(x)}};
  if (op_file.empty()) {
    int n = x.homogeneous_degree(degree);
    if constexpr (std::is_same_v<U, FFUnit>) {
      ModelElem v = eval_model(x, n);
      j["value"] = to_json(v);
      j["zero"] = v.is_zero();
      out.emit(j, (v.is_zero() ? "0" : v.to_string()) + "\n");
    } else {
      CanonicalForm v = canonical_form(x, n);
      j["value"] = to_json(v);
      j["zero"] = v.is_zero();
      out.emit(j, (v.is_zero() ? "0" : v.to_string()) + "\n");
    }
    return 0;
  }
  std::ifstream in(op_file);
  if (!in) fail(ErrorCode::InvalidArgument, "cannot read '" + op_file + "'");
  Json sj;
  try {
    sj = Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::ParseError, op_file + ": " + e.what());
  }
  OpSequence seq = sequence_from_json(sj);
  annotate(seq, source);
  auto v = op_apply<U>(seq, presentation_of(x, seq.n), source);
  j["operation"] = to_json(seq);
  j["source_theory"] = theory_name(source);
  j["value"] = value_json(v);
  j["zero"] = value_zero(v);
  out.emit(j, (value_zero(v) ? "0" : v.to_string()) + "\n");
  return 0;
}

std::string report_text(const Report& r) {
  std::string s = r.suite_id + " [" + r.anchor + "] over " + r.field + ", seed " + std::to_string(r.seed) + "\n";
  s += "  trials " + std::to_string(r.trials) + ", checks " + std::to_string(r.checks) + ", failures " +
       std::to_string(r.failure_count) + "\n";
  for (auto& f : r.failures) s += "  FAIL " + f + "\n";
  for (auto& [k, v] : r.notes) s += "  " + k + ": " + v + "\n";
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Milnor-Witt K-theory over finite fields and F_q(t)"};
  app.require_subcommand(1);
  Output out;
  bool json_flag = false;
  auto* fmt = app.add_flag("--text", out.text, "human-readable output");
  app.add_flag("--json", json_flag, "JSON output (default)")->excludes(fmt);

  int64_t q = 3;
  int n = 1, d_max = 2, group_d_max = 3, degree = 0, trunc = 8;
  int64_t trials = 200;
  uint64_t seed = 1;
  std::string field = "3", suite, expr, op_file, source = "MW";
  std::optional<int> only_n;

  auto* group = app.add_subcommand("group", "K^MW_n(F_q) from the model and from the truncated presentation");
  group->add_option("--q", q, "field order (odd prime power)")->required();
  group->add_option("--n", n, "degree, n >= 0")->check(CLI::NonNegativeNumber);
  group->add_option("--d-max", group_d_max, "eta bound of the presentation")->check(CLI::Range(1, 6));

  auto* eval = app.add_subcommand("eval", "canonical form of an expression, or of an operation applied to it");
  eval->add_option("expr", expr, "expression, e.g. \"[t,t] - [t,-1]\"")->required();
  eval->add_option("--field", field, "\"q\" or \"q(t)\"");
  eval->add_option("--degree", degree, "degree used when the expression is empty");
  eval->add_option("--op", op_file, "operation sequence (JSON) to apply to the expression");
  eval->add_option("--source", source, "source theory of the operation: MW, M or W");

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", suite, "suite id (see 'mwk suites')")->required();
  verify->add_option("--field", field, "\"q\" or \"q(t)\"");
  verify->add_option("--n", only_n, "restrict to one source degree")->check(CLI::PositiveNumber);
  verify->add_option("--trials", trials, "sampled trials")->check(CLI::NonNegativeNumber);
  verify->add_option("--seed", seed, "random seed");
  verify->add_option("--trunc", trunc, "truncation L of operation sequences")->check(CLI::Range(0, 16));
  verify->add_option("--d-max", d_max, "eta depth of sampled expressions")->check(CLI::Range(0, 6));

  auto* list = app.add_subcommand("suites", "list suite ids");

  CLI11_PARSE(app, argc, argv);
  try {
    if (*group) return cmd_group(q, n, group_d_max, out);
    if (*eval) {
      FieldSpec f = parse_field(field);
      Theory src = parse_theory(source);
      return f.rational ? eval_on<RatUnit>(f, expr, degree, op_file, src, out)
                        : eval_on<FFUnit>(f, expr, degree, op_file, src, out);
    }
    if (*verify) {
      SuiteConfig cfg;
      cfg.suite = suite;
      cfg.field = parse_field(field);
      if (only_n) cfg.n_min = cfg.n_max = *only_n;
      cfg.trials = trials;
      cfg.seed = seed;
      cfg.trunc = trunc;
      cfg.d_max = d_max;
      Report r = run_suite(cfg);
      out.emit(to_json(r), report_text(r));
      return r.ok() ? 0 : 1;
    }
    if (*list) {
      Json j = Json::array();
      std::string s;
      for (const SuiteInfo& i : suite_registry()) {
        j.push_back({{"id", i.id}, {"anchor", i.anchor}});
        s += std::string(i.id) + "  " + i.anchor + "\n";
      }
      out.emit(j, s);
    }
  } catch (const Error& e) {
    std::cerr << "mwk: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
