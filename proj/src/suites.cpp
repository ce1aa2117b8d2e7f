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

#include "mwk/suites.hpp"

#include <limits>

#include "suite_util.hpp"

namespace mwk {

uint64_t Rng::below(uint64_t k) {
  if (k == 0) fail(ErrorCode::InvalidArgument, "empty range");
  const uint64_t max = std::numeric_limits<uint64_t>::max();
  const uint64_t limit = max - max % k;
  for (;;) {
    uint64_t v = g_();
    if (v < limit) return v % k;
  }
}

int64_t Rng::range(int64_t lo, int64_t hi) {
  if (hi < lo) fail(ErrorCode::InvalidArgument, "empty range");
  return lo + static_cast<int64_t>(below(static_cast<uint64_t>(hi - lo) + 1));
}

void Report::check(bool pass, const std::function<std::string()>& describe) {
  ++checks;
  if (!pass) fail_with(describe());
}

void Report::fail_with(const std::string& what) {
  ++failure_count;
  if (failures.size() < kMaxStoredFailures) failures.push_back(what);
}

std::string Report::note_value(const std::string& key) const {
  for (auto& [k, v] : notes)
    if (k == key) return v;
  return "";
}

const std::vector<SuiteInfo>& suite_registry() {
  static const std::vector<SuiteInfo> reg = {
      {"lemma32", "defining relations and the basic relation list of K^MW"},
      {"relations34", "standard presentation of K^MW_n for n >= 1"},
      {"lambda-wd", "well-definedness of the Lambda generating series"},
      {"prop64", "divided powers of sums and elementary symmetric evaluation"},
      {"shift73", "defining identity of the shifts and shifts of lambda and sigma"},
      {"lemma75", "commutation and torsion properties of iterated shifts"},
      {"prop83", "vanishing of sigma_l beyond twice the presentation size"},
      {"thm84", "coefficient sequences versus operations, g o f = id"},
      {"seq37", "Milnor's split exact sequence for F_q(t)"},
      {"prop36", "residue and specialization under units and uniformizer change"},
      {"lemma91", "adding h-multiples, and the lambda/f conversion"},
      {"lemma93", "adding eta-multiples for cycle-module targets"},
      {"table1", "operations between Milnor, Witt and Milnor-Witt K-theory"},
  };
  return reg;
}

const SuiteInfo& suite_info(const std::string& id) {
  for (const SuiteInfo& s : suite_registry())
    if (id == s.id) return s;
  fail(ErrorCode::UnknownSuite, "unknown suite '" + id + "'");
}

Report run_suite(const SuiteConfig& config) {
  const SuiteInfo& info = suite_info(config.suite);
  if (!config.field.base) fail(ErrorCode::InvalidArgument, "suite needs a field");
  if (config.trials < 0 || config.trunc < 0 || config.d_max < 0 || config.n_min < 1 || config.n_max < config.n_min)
    fail(ErrorCode::InvalidArgument, "invalid suite bounds");
  using Fn = Report (*)(const SuiteConfig&);
  static const std::vector<std::pair<std::string, Fn>> table = {
      {"lemma32", suites::lemma32},   {"relations34", suites::relations34}, {"lambda-wd", suites::lambda_wd},
      {"prop64", suites::prop64},     {"shift73", suites::shift73},         {"lemma75", suites::lemma75},
      {"prop83", suites::prop83},     {"thm84", suites::thm84},             {"seq37", suites::seq37},
      {"prop36", suites::prop36},     {"lemma91", suites::lemma91},         {"lemma93", suites::lemma93},
      {"table1", suites::table1},
  };
  Report r;
  for (auto& [id, fn] : table)
    if (id == config.suite) r = fn(config);
  r.suite_id = info.id;
  r.anchor = info.anchor;
  r.field = config.field.to_string();
  r.seed = config.seed;
  return r;
}

namespace suites {

std::vector<Poly> place_pool(const FiniteField& F) {
  std::vector<Poly> pool = monic_irreducibles(F, 1);
  auto add = [&](int deg, size_t count) {
    std::vector<Poly> v = monic_irreducibles(F, deg);
    for (size_t i = 0; i < v.size() && i < count; ++i) pool.push_back(v[i]);
  };
  add(2, 3);
  add(3, 2);
  return pool;
}

ThElem random_element(const FiniteField& F, Theory th, int degree, Constraint c, int n, Rng& rng) {
  std::vector<ThElem> ok;
  for (const ThElem& a : enumerate_group(F, th, degree, 2))
    if (satisfies(a, c, n)) ok.push_back(a);
  return ok[rng.below(ok.size())];
}

OpSequence random_admissible(const FiniteField& F, Theory source, Theory target, int n, int m, int L, Rng& rng) {
  OpSequence s = OpSequence::zero(F, n, target, m, L);
  const TableRow& row = table_row(source, target);
  for (int l = 0; l <= L; ++l) {
    Constraint c = l <= row.free_upto ? Constraint::Free : row.rest;
    s.coeffs[static_cast<size_t>(l)] = random_element(F, target, m - n * l, c, n, rng);
  }
  annotate(s, source);
  return s;
}

}  // namespace suites
}  // namespace mwk
