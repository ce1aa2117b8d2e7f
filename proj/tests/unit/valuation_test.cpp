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


#include "mwk/valuation.hpp"

#include "mwk/parse.hpp"
#include "test_util.hpp"

namespace mwk {
namespace {

using testing::error_of;
using X = RatExpr;

const FiniteField& F3() { return FiniteField::of_order(3); }
X rat(const char* s) { return parse_rat_expr(F3(), s); }
Place place(const char* p) { return Place::finite(parse_poly(F3(), p)); }

TEST(PlaceContext, SplitsOffTheUniformizer) {
  PlaceContext at_t(F3(), place("t"));
  auto [e, u] = at_t.split(parse_rat_unit(F3(), "2*t^3*(t+1)"));
  EXPECT_EQ(e, 3);
  EXPECT_EQ(u, FFUnit::minus_one(F3()));
  PlaceContext at_inf(F3(), Place::infinity());
  EXPECT_EQ(at_inf.split(parse_rat_unit(F3(), "t^2 + 1")).first, -2);
  EXPECT_EQ(error_of([] { PlaceContext(F3(), place("t"), parse_rat_unit(F3(), "t^2")); }),
            ErrorCode::NotAUniformizer);
}

TEST(LocalParts, ResidueOfAUniformizer) {
  PlaceContext at_t(F3(), place("t"));
  LocalParts p = local_parts(rat("[t]"), at_t, 1);
  EXPECT_EQ(p.residue, ModelElem::integer(F3(), 1));
  EXPECT_TRUE(p.special.is_zero());
  // [u] for a unit: no residue, specializes to [u(0)].
  LocalParts q = local_parts(rat("[t + 2]"), at_t, 1);
  EXPECT_TRUE(q.residue.is_zero());
  EXPECT_EQ(q.special, ModelElem::bracket(FFUnit::minus_one(F3())));
}

TEST(LocalParts, ResidueAtADegreeTwoPlace) {
  Place p = place("t^2 + 1");
  PlaceContext ctx(F3(), p);
  EXPECT_EQ(ctx.kappa().q(), 9);
  LocalParts lp = local_parts(rat("[t^2 + 1, t]"), ctx, 2);
  // d([pi][t]) = [t mod pi], a nonzero class in K^MW_1(F_9).
  EXPECT_EQ(lp.residue.degree, 1);
  EXPECT_FALSE(lp.residue.is_zero());
  EXPECT_EQ(eval_model(residue(rat("[t^2 + 1, t]"), ctx), 1), lp.residue);
}

TEST(CanonicalForm, KnownZeros) {
  EXPECT_TRUE(is_zero(rat("[t, t] - [t, -1]"), 2));
  EXPECT_TRUE(is_zero(rat("[t, 1 - t]"), 2));
  EXPECT_TRUE(is_zero(rat("[t^2] - h*[t]"), 1));
  EXPECT_TRUE(is_zero(rat("eta*h"), -1));
  EXPECT_TRUE(is_zero(rat("[t, t+1, t+2]"), 3));
  EXPECT_FALSE(is_zero(rat("[t]"), 1));
  EXPECT_FALSE(is_zero(rat("[t, t + 1]"), 2));
  EXPECT_TRUE(equal(rat("<t>*[t+1]"), rat("[t*(t+1)] - [t]")));
}

TEST(CanonicalForm, GroupOperations) {
  CanonicalForm a = canonical_form(rat("[t, t+1] + [2, t]"));
  CanonicalForm b = canonical_form(rat("[t+1, t^2+1]"));
  EXPECT_EQ(a + b, canonical_form(rat("[t, t+1] + [2, t] + [t+1, t^2+1]")));
  EXPECT_TRUE((a - a).is_zero());
  EXPECT_EQ(a.degree, 2);
  EXPECT_TRUE(canonical_form(rat("[t, t+1]"), 0, Theory::Witt).projected(Theory::Witt) ==
              canonical_form(rat("[t, t+1]")).projected(Theory::Witt));
  EXPECT_EQ(error_of([] { canonical_form(rat("[t] + 1")); }), ErrorCode::Inhomogeneous);
}

TEST(CanonicalForm, ConstantMultiplication) {
  const FiniteField& F = F3();
  CanonicalForm x = canonical_form(rat("[t]"));
  ModelElem m1 = ModelElem::bracket(FFUnit::minus_one(F));
  EXPECT_EQ(x.rmul(m1), canonical_form(rat("[t, -1]")));
  EXPECT_EQ(x.rmul(ModelElem::h(F)), canonical_form(rat("[t] * h")));
}

TEST(CanonicalForm, PlaceAtInfinity) {
  PlaceContext inf(F3(), Place::infinity());
  LocalParts p = local_parts(rat("[t]"), inf, 1);
  // t = pi^{-1}, so the residue is a rank-one form.
  EXPECT_EQ(p.residue.degree, 0);
  EXPECT_EQ(p.residue.milnor * p.residue.milnor, 1);
}

}  // namespace
}  // namespace mwk
