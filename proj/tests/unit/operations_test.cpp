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


#include "mwk/operations.hpp"

#include "mwk/parse.hpp"
#include "test_util.hpp"

namespace mwk {
namespace {

using testing::error_of;
using X = RatExpr;

const FiniteField& F3() { return FiniteField::of_order(3); }
RatUnit u(const char* s) { return parse_rat_unit(F3(), s); }
X rat(const char* s) { return parse_rat_expr(F3(), s); }

Presentation<RatUnit> two_symbols() {
  Presentation<RatUnit> p{&F3(), 1, {}};
  p.add(1, {u("t")});
  p.add(1, {u("t + 1")});
  return p;
}

// eta^k as an h-torsion coefficient.
ThElem eta_power(int k) {
  ModelElem e = ModelElem::integer(F3(), 1);
  for (int i = 0; i < k; ++i) e = e * ModelElem::eta(F3());
  return {Theory::MW, e};
}

TEST(Lambda, LowCoefficients) {
  Presentation<RatUnit> x = two_symbols();
  ThElem y = eta_power(1);
  EXPECT_EQ(lambda_eval(F3(), 1, 0, y, x), canonical_form(rat("eta")));
  EXPECT_EQ(lambda_eval(F3(), 1, 1, y, x), canonical_form(rat("([t] + [t+1]) * eta")));
  // Elementary symmetric: lambda_2([a] + [b]) = [a][b].
  EXPECT_EQ(lambda_eval(F3(), 1, 2, y, x), canonical_form(rat("[t, t+1] * eta")));
  EXPECT_TRUE(lambda_eval(F3(), 1, 3, y, x).is_zero());
}

TEST(Lambda, OddDegreeNeedsHTorsion) {
  Presentation<RatUnit> x = two_symbols();
  ThElem one{Theory::MW, ModelElem::integer(F3(), 1)};
  EXPECT_EQ(error_of([&] { lambda_eval(F3(), 1, 1, one, x); }), ErrorCode::TorsionViolation);
  SeriesOptions unchecked;
  unchecked.unchecked = true;
  EXPECT_EQ(lambda_eval(F3(), 1, 1, one, x, unchecked), canonical_form(rat("[t] + [t+1]")));
}

TEST(Lambda, InverseSymbolsExpandAsGeometricSeries) {
  // A negative entry contributes (1 + [a] t)^{-1}.
  TermList<RatUnit> x = {{Monomial<RatUnit>{0, {u("t")}}, -1}};
  SeriesOptions o;
  o.trunc = 3;
  o.prune = false;
  auto S = lambda_series<RatUnit>(F3(), 1, x, o);
  EXPECT_EQ(S[1], rat("-[t]"));
  EXPECT_EQ(S[2], rat("[t, t]"));
  EXPECT_EQ(S[3], rat("-[t, t, t]"));
}

TEST(Sigma, FirstTermsInTermsOfLambda) {
  Presentation<RatUnit> p{&F3(), 1, {}};
  for (const char* s : {"t", "t + 1", "t + 2", "t^2 + 1"}) p.add(1, {u(s)});
  SeriesOptions o;
  o.trunc = 4;
  o.prune = false;
  auto L = lambda_series<RatUnit>(F3(), 1, terms_of(p), o);
  auto S = sigma_from_lambda<RatUnit>(F3(), 1, L);
  X m1 = X::bracket(RatUnit::minus_one(F3()));
  EXPECT_EQ(S[1], L[1]);
  EXPECT_EQ(S[2], L[2]);
  EXPECT_EQ(S[3], L[3] + m1 * L[2]);
  EXPECT_EQ(S[4], L[4] + m1 * L[3]);
}

TEST(FConversion, DirectSeriesMatchesTheConversion) {
  Presentation<RatUnit> x = two_symbols();
  for (int l = 0; l <= 3; ++l)
    for (int k : {1, 2}) {
      ThElem y = eta_power(k);
      EXPECT_EQ(divided_eval<RatUnit>(Divided::F, F3(), 1, l, y, terms_of(x)),
                divided_eval<RatUnit>(Divided::FDirect, F3(), 1, l, y, terms_of(x)))
          << "l=" << l << " k=" << k;
    }
}

TEST(FConversion, IsAnInvolution) {
  SeriesOptions o;
  o.trunc = 4;
  o.prune = false;
  auto L = lambda_series<RatUnit>(F3(), 1, terms_of(two_symbols()), o);
  auto back = convert_lambda_f<RatUnit>(F3(), 1, convert_lambda_f<RatUnit>(F3(), 1, L));
  for (int l = 0; l <= 4; ++l)
    EXPECT_EQ(Evaluator<RatUnit>::eval(back[static_cast<size_t>(l)], l, eta_power(2)),
              Evaluator<RatUnit>::eval(L[static_cast<size_t>(l)], l, eta_power(2)));
}

OpSequence sample_sequence() {
  // n = 1 into MW_1: a_0 in MW_1, a_1 in MW_0, a_2 and a_3 h-torsion.
  const FiniteField& F = F3();
  OpSequence s = OpSequence::zero(F, 1, Theory::MW, 1, 3);
  s.coeffs[0] = {Theory::MW, ModelElem::bracket(FFUnit::minus_one(F))};
  s.coeffs[1] = {Theory::MW, ModelElem::angle(FFUnit::minus_one(F))};
  s.coeffs[2] = eta_power(1);
  s.coeffs[3] = eta_power(2);
  return s;
}

TEST(Sequences, ShiftFormulas) {
  OpSequence s = sample_sequence();
  OpSequence p = shift(s, ShiftSign::Plus), m = shift(s, ShiftSign::Minus);
  EXPECT_EQ(p.m, 0);
  EXPECT_EQ(p.coeff(0), s.coeff(1));
  EXPECT_EQ(p.coeff(1), s.coeff(2) + tau_action(s.coeff(3), 1));
  EXPECT_EQ(m.coeff(0), s.coeff(1) + tau_action(s.coeff(2), 1));
  EXPECT_EQ(m.coeff(1), s.coeff(2));
  EXPECT_TRUE(shift(OpSequence::zero(F3(), 1, Theory::MW, 1, 3), ShiftSign::Plus).is_zero());
}

TEST(Sequences, ShiftOfSingleSigma) {
  const FiniteField& F = F3();
  // n = 2 into MW_4: a_2 sits in MW_0, a_3 in MW_{-2}.
  ThElem a2 = {Theory::MW, ModelElem::angle(FFUnit::minus_one(F))};
  ThElem a3 = eta_power(2);

  OpSequence c = OpSequence::zero(F, 2, Theory::MW, 0, 0);
  c.coeffs[0] = a2;
  EXPECT_TRUE(shift(c, ShiftSign::Plus).is_zero());
  EXPECT_TRUE(shift(c, ShiftSign::Minus).is_zero());

  OpSequence s = OpSequence::zero(F, 2, Theory::MW, 4, 2);
  s.coeffs[2] = a2;
  OpSequence m = shift(s, ShiftSign::Minus), p = shift(s, ShiftSign::Plus);
  EXPECT_EQ(m.coeff(0), tau_action(a2, 2));  // sigma_1 a_2 + [-1]^n sigma_0 a_2
  EXPECT_EQ(m.coeff(1), a2);
  EXPECT_TRUE(p.coeff(0).is_zero());
  EXPECT_EQ(p.coeff(1), a2);

  OpSequence u = OpSequence::zero(F, 2, Theory::MW, 4, 3);
  u.coeffs[3] = a3;
  OpSequence um = shift(u, ShiftSign::Minus);
  EXPECT_TRUE(um.coeff(0).is_zero());
  EXPECT_TRUE(um.coeff(1).is_zero());
  EXPECT_EQ(um.coeff(2), a3);
}

TEST(Sequences, RoundTripAndFiltration) {
  OpSequence s = sample_sequence();
  EXPECT_TRUE(roundtrip(s));
  EXPECT_EQ(g_map(s).size(), 4u);
  EXPECT_EQ(filtration_degree(s), kFiltrationNone);  // a_2, a_3 sit in negative degrees
  OpSequence t = OpSequence::zero(F3(), 1, Theory::MW, 1, 1);
  EXPECT_EQ(filtration_degree(t), kFiltrationTop);
  t.coeffs[1] = s.coeffs[1];
  EXPECT_EQ(filtration_degree(t), 1);
}

TEST(Operations, ApplyChecksItsInputs) {
  OpSequence s = sample_sequence();
  Presentation<RatUnit> x = two_symbols();
  CanonicalForm v = op_apply(s, x);
  EXPECT_EQ(v, op_value<RatUnit>(s, F3(), terms_of(x)));
  EXPECT_EQ(v.degree, 1);
  Presentation<RatUnit> bad{&F3(), 2, {}};
  bad.add(1, {u("t"), u("t + 1")});
  EXPECT_EQ(error_of([&] { op_apply(s, bad); }), ErrorCode::DegreeMismatch);
  OpSequence rejected = OpSequence::zero(F3(), 1, Theory::MW, 2, 2);
  rejected.coeffs[2] = {Theory::MW, ModelElem::integer(F3(), 1)};  // 1 is not h-torsion
  EXPECT_EQ(error_of([&] { op_apply(rejected, x); }), ErrorCode::NotAdmissible);
}

TEST(Operations, ConstantAndIdentity) {
  // a_0 alone is the constant operation, a_1 = 1 is the identity.
  const FiniteField& F = F3();
  Presentation<RatUnit> p{&F, 2, {}};
  p.add(1, {u("t"), u("t + 1")});
  p.add(-1, {u("t^2 + 1"), u("t")});
  OpSequence id = OpSequence::zero(F, 2, Theory::MW, 2, 1);
  id.coeffs[1] = {Theory::MW, ModelElem::integer(F, 1)};
  EXPECT_EQ(op_apply(id, p), canonical_form(p.to_expr()));
  OpSequence c = OpSequence::zero(F, 2, Theory::MW, 1, 0);
  c.coeffs[0] = {Theory::MW, ModelElem::bracket(FFUnit::minus_one(F))};
  EXPECT_EQ(op_apply(c, p), canonical_form(rat("[-1]")));
}

}  // namespace
}  // namespace mwk
