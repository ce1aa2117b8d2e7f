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


#include "mwk/poly.hpp"

#include <random>

#include "test_util.hpp"

namespace mwk {
namespace {

Poly random_poly(const FiniteField& F, std::mt19937& g, int deg) {
  std::vector<Elem> c;
  for (int i = 0; i <= deg; ++i) c.push_back(static_cast<Elem>(g() % F.q()));
  return Poly(F, c);
}

TEST(Poly, TrimsLeadingZeros) {
  const FiniteField& F = FiniteField::of_order(5);
  Poly p(F, {1, 2, 0, 0});
  EXPECT_EQ(p.degree(), 1);
  EXPECT_TRUE(Poly(F, {0, 0}).is_zero());
  EXPECT_EQ(Poly::t(F) - Poly::t(F), Poly(F, {}));
}

TEST(Poly, DivisionWithRemainder) {
  const FiniteField& F = FiniteField::of_order(9);
  std::mt19937 g(7);
  for (int i = 0; i < 200; ++i) {
    Poly a = random_poly(F, g, static_cast<int>(g() % 7));
    Poly b = random_poly(F, g, static_cast<int>(g() % 4));
    if (b.is_zero()) continue;
    auto [quo, rem] = a.divmod(b);
    EXPECT_EQ(quo * b + rem, a);
    EXPECT_LT(rem.degree(), b.degree());
  }
}

TEST(Poly, FactorizationReconstructs) {
  const FiniteField& F = FiniteField::of_order(3);
  std::mt19937 g(11);
  for (int i = 0; i < 100; ++i) {
    Poly a = random_poly(F, g, 1 + static_cast<int>(g() % 8));
    if (a.is_zero()) continue;
    Factorization fz = poly_factor(a);
    Poly prod = Poly::constant(F, fz.lead.elem());
    for (auto& [f, e] : fz.factors) {
      EXPECT_TRUE(f.is_monic());
      EXPECT_TRUE(is_irreducible(f)) << f.to_string();
      prod = prod * f.pow(e);
    }
    EXPECT_EQ(prod, a);
  }
}

TEST(Poly, IrreducibleCounts) {
  // Necklace counts: (q^2 - q) / 2 and (q^3 - q) / 3.
  EXPECT_EQ(monic_irreducibles(FiniteField::of_order(3), 2).size(), 3u);
  EXPECT_EQ(monic_irreducibles(FiniteField::of_order(3), 3).size(), 8u);
  EXPECT_EQ(monic_irreducibles(FiniteField::of_order(5), 2).size(), 10u);
  EXPECT_EQ(monic_polys(FiniteField::of_order(3), 2).size(), 9u);
}

TEST(Poly, IrreducibilityDependsOnTheField) {
  // t^2 + 1 splits iff -1 is a square.
  EXPECT_TRUE(is_irreducible(Poly(FiniteField::of_order(3), {1, 0, 1})));
  EXPECT_FALSE(is_irreducible(Poly(FiniteField::of_order(5), {1, 0, 1})));
}

TEST(Poly, EvaluatesInExtensions) {
  const FiniteField& F = FiniteField::of_order(3);
  const FiniteField& K = FiniteField::of_order(9);
  Poly p(F, {1, 0, 1});
  int roots = 0;
  for (Elem x = 0; x < K.q(); ++x) roots += p.eval_in(K, x) == K.zero() ? 1 : 0;
  EXPECT_EQ(roots, 2);
}

}  // namespace
}  // namespace mwk
