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


#include "mwk/json_io.hpp"

#include "mwk/error.hpp"
#include "mwk/parse.hpp"

namespace mwk {
namespace {

const FiniteField& field_of(const Json& j) {
  FieldSpec f = parse_field(j.at("field").get<std::string>());
  if (f.rational) fail(ErrorCode::ParseError, "coefficient fields are finite");
  return *f.base;
}

template <class T>
T get(const Json& j, const char* key) {
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::ParseError, std::string("bad or missing '") + key + "': " + e.what());
  }
}

}  // namespace

Json to_json(const ModelElem& x) {
  return {{"field", x.field ? x.field->name() : ""},
          {"degree", x.degree},
          {"milnor", x.milnor},
          {"witt", {{"rank", x.witt.rank}, {"disc", x.witt.disc}}}};
}

Json to_json(const ThElem& x) {
  Json j = to_json(x.v);
  j["theory"] = theory_name(x.theory);
  return j;
}

Json to_json(const CanonicalForm& x) {
  Json res = Json::array();
  for (auto& [p, v] : x.residues) res.push_back({{"place", p.to_string()}, {"value", to_json(v)}});
  return {{"theory", theory_name(x.theory)},
          {"field", x.field ? x.field->name() + "(t)" : ""},
          {"degree", x.degree},
          {"zero", x.is_zero()},
          {"base", to_json(x.base)},
          {"residues", res}};
}

Json to_json(const OpSequence& s) {
  Json coeffs = Json::array();
  for (const ThElem& a : s.coeffs) coeffs.push_back(to_json(a));
  Json flags = Json::array();
  for (bool b : s.torsion_flags) flags.push_back(b);
  return {{"field", s.field ? s.field->name() : ""},
          {"source_degree", s.n},
          {"target_theory", theory_name(s.target)},
          {"target_degree", s.m},
          {"coefficients", coeffs},
          {"torsion_flags", flags}};
}

Json to_json(const Report& r) {
  Json notes = Json::object();
  for (auto& [k, v] : r.notes) notes[k] = v;
  return {{"suite_id", r.suite_id}, {"anchor", r.anchor},
          {"field", r.field},       {"seed", r.seed},
          {"trials", r.trials},     {"checks", r.checks},
          {"failure_count", r.failure_count}, {"failures", r.failures},
          {"notes", notes},         {"ok", r.ok()}};
}

Json group_to_json(const std::vector<BigInt>& g) {
  Json j = Json::array();
  for (const BigInt& x : g) j.push_back(x.str());
  return j;
}

ModelElem model_from_json(const Json& j) {
  const FiniteField& F = field_of(j);
  const Json& w = j.at("witt");
  ModelElem x = ModelElem::make(F, get<int>(j, "degree"), get<int64_t>(j, "milnor"),
                                WElem{get<int>(w, "rank"), get<int>(w, "disc")});
  if (x.milnor != get<int64_t>(j, "milnor") || !(x.witt == WElem{get<int>(w, "rank"), get<int>(w, "disc")}))
    fail(ErrorCode::ParseError, "model element is not in canonical form: " + j.dump());
  return x;
}

ThElem th_from_json(const Json& j) {
  Theory th = parse_theory(get<std::string>(j, "theory"));
  ThElem a = ThElem::of(th, model_from_json(j));
  if (!(a.v == model_from_json(j))) fail(ErrorCode::ParseError, "element is not reduced for its theory: " + j.dump());
  return a;
}

OpSequence sequence_from_json(const Json& j) {
  const FiniteField& F = field_of(j);
  const Json& cs = j.at("coefficients");
  if (!cs.is_array() || cs.empty()) fail(ErrorCode::ParseError, "coefficients must be a nonempty array");
  OpSequence s = OpSequence::zero(F, get<int>(j, "source_degree"), parse_theory(get<std::string>(j, "target_theory")),
                                  get<int>(j, "target_degree"), static_cast<int>(cs.size()) - 1);
  for (size_t l = 0; l < cs.size(); ++l) {
    ThElem a = th_from_json(cs[l]);
    if (a.theory != s.target || a.v.field != &F || a.degree() != s.coeff_degree(static_cast<int>(l)))
      fail(ErrorCode::ParseError, "coefficient " + std::to_string(l) + " has the wrong theory, field or degree");
    s.coeffs[l] = a;
  }
  return s;
}

}  // namespace mwk
