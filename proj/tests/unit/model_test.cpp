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


#include "mwk/model.hpp"

#include "test_util.hpp"

namespace mwk {
namespace {

class ModelOverF : public ::testing::TestWithParam<int64_t> {
 protected:
  const FiniteField& F = FiniteField::of_order(GetParam());
};

TEST_P(ModelOverF, UnitsOfTheRing) {
  ModelElem one = ModelElem::integer(F, 1);
  ModelElem eps = ModelElem::eps(F);
  ModelElem eta = ModelElem::eta(F);
  EXPECT_EQ(eps * eps, one);
  EXPECT_TRUE((eta * ModelElem::h(F)).is_zero());
  EXPECT_EQ(ModelElem::h(F), ModelElem::angle(FFUnit::one(F)) + ModelElem::angle(FFUnit::minus_one(F)));
  for (const FFUnit& a : all_units(F)) {
    ModelElem ang = ModelElem::angle(a);
    EXPECT_EQ(ang * ang, one);
    EXPECT_EQ(ang, one + eta * ModelElem::bracket(a));
    EXPECT_EQ(ang.to_gw(), (GWElem{1, a.is_square() ? 0 : 1}));
  }
}

TEST_P(ModelOverF, DegreeOneIsTheUnitGroup) {
  // [a] + [b] + eta[a][b] = [ab], so K^MW_1 = F^x with [g] of order q - 1.
  FFUnit g = FFUnit::gen(F);
  ModelElem x = ModelElem::bracket(g);
  ModelElem acc = x;
  int64_t order = 1;
  while (!acc.is_zero()) {
    acc = acc + x;
    ++order;
  }
  EXPECT_EQ(order, F.q() - 1);
  for (const FFUnit& a : all_units(F))
    for (const FFUnit& b : all_units(F))
      EXPECT_EQ(ModelElem::bracket(a * b),
                ModelElem::bracket(a) + ModelElem::bracket(b) + ModelElem::eta(F) * ModelElem::bracket(a) *
                                                                    ModelElem::bracket(b));
}

TEST_P(ModelOverF, DegreeTwoVanishes) {
  for (const FFUnit& a : all_units(F))
    for (const FFUnit& b : all_units(F)) EXPECT_TRUE((ModelElem::bracket(a) * ModelElem::bracket(b)).is_zero());
}

TEST_P(ModelOverF, WittRingStructure) {
  // W(F_q) has order 4: Z/4 when q = 3 mod 4, Z/2 x Z/2 otherwise.
  bool q3 = F.q() % 4 == 3;
  std::vector<ThElem> W = enumerate_group(F, Theory::Witt, -1);
  EXPECT_EQ(W.size(), 4u);
  ThElem unit = ThElem::of(Theory::Witt, ModelElem::eta(F));
  EXPECT_EQ(unit.times(2).is_zero(), !q3);
  EXPECT_TRUE(unit.times(4).is_zero());
}

TEST_P(ModelOverF, GroupStructures) {
  EXPECT_EQ(group_structure_model(F, 0), (std::vector<int64_t>{2, 0}));
  EXPECT_EQ(group_structure_model(F, 1), (std::vector<int64_t>{F.q() - 1}));
  EXPECT_TRUE(group_structure_model(F, 2).empty());
  EXPECT_TRUE(group_structure_model(F, 3).empty());
}

TEST_P(ModelOverF, ProjectionsKillTheRightIdeals) {
  ModelElem eta = ModelElem::eta(F), h = ModelElem::h(F);
  ModelElem x = ModelElem::bracket(FFUnit::gen(F));
  EXPECT_TRUE(project(Theory::Milnor, eta * x).is_zero());
  EXPECT_TRUE(project(Theory::Witt, h * x).is_zero());
  EXPECT_FALSE(project(Theory::Witt, eta * x).is_zero());
  EXPECT_TRUE(project(Theory::Mod2Milnor, x.times(2)).is_zero());
  EXPECT_FALSE(project(Theory::Milnor, x).is_zero());
}

TEST_P(ModelOverF, TorsionTests) {
  ModelElem m1 = ModelElem::bracket(FFUnit::minus_one(F));
  ThElem half{Theory::MW, m1};
  EXPECT_TRUE(torsion_test(half, TorsionKind::Two));
  EXPECT_TRUE(torsion_test(half, TorsionKind::H));
  ThElem gen{Theory::MW, ModelElem::bracket(FFUnit::gen(F))};
  // Over F_3 the generator is -1 itself.
  EXPECT_EQ(torsion_test(gen, TorsionKind::Two), F.q() == 3);
  // tau_1 is the identity; tau_2 = [-1] kills all of degree 1.
  EXPECT_FALSE(torsion_test(gen, TorsionKind::Tau, 1));
  EXPECT_TRUE(torsion_test(gen, TorsionKind::Tau, 2));
  ThElem one{Theory::MW, ModelElem::integer(F, 1)};
  EXPECT_FALSE(torsion_test(one, TorsionKind::H));
}

TEST_P(ModelOverF, EnumerationIsClosedAndDistinct) {
  for (Theory th : {Theory::MW, Theory::Milnor, Theory::Witt, Theory::Mod2Milnor})
    for (int deg : {-2, -1, 1, 2}) {
      std::vector<ThElem> G = enumerate_group(F, th, deg);
      for (size_t i = 0; i < G.size(); ++i) {
        for (size_t j = i + 1; j < G.size(); ++j) EXPECT_FALSE(G[i] == G[j]);
        EXPECT_EQ(G[i].degree(), deg);
      }
      for (const ThElem& a : G)
        for (const ThElem& b : G) EXPECT_NE(std::find(G.begin(), G.end(), a + b), G.end());
    }
}

INSTANTIATE_TEST_SUITE_P(Fields, ModelOverF, ::testing::Values(3, 5, 7, 9, 25));

TEST(Model, BaseChangeToAnExtension) {
  const FiniteField& F = FiniteField::of_order(3);
  const FiniteField& K = FiniteField::of_order(9);
  // -1 becomes a square in F_9, so <-1> = 1 there.
  ModelElem a = ModelElem::angle(FFUnit::minus_one(F));
  EXPECT_NE(a, ModelElem::integer(F, 1));
  EXPECT_EQ(a.base_change(K), ModelElem::integer(K, 1));
}

TEST(Model, EvaluatesExpressions) {
  const FiniteField& F = FiniteField::of_order(3);
  FFExpr mw4 = FFExpr::eta(F) * (FFExpr::integer(F, 2) + FFExpr::eta(F) * FFExpr::bracket(FFUnit::minus_one(F)));
  EXPECT_TRUE(eval_model(mw4, -1).is_zero());
  EXPECT_EQ(eval_model(FFExpr(F), 3), ModelElem::zero(F, 3));
}

}  // namespace
}  // namespace mwk
