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


#include "mwk/symbolic.hpp"

#include "mwk/model.hpp"
#include "test_util.hpp"

namespace mwk {
namespace {

using testing::error_of;
using X = FFExpr;

TEST(SymExpr, FreeAlgebraArithmetic) {
  const FiniteField& F = FiniteField::of_order(5);
  FFUnit a = FFUnit::from_elem(F, 2), b = FFUnit::from_elem(F, 3);
  X x = X::bracket(a) + X::eta(F);
  EXPECT_TRUE((x - x).empty());
  EXPECT_EQ(x.scaled(3), x + x + x);
  // Concatenation, not commutative at the free level.
  EXPECT_EQ(X::bracket(a) * X::bracket(b), X::symbol(F, {a, b}));
  EXPECT_NE(X::bracket(a) * X::bracket(b), X::bracket(b) * X::bracket(a));
  EXPECT_EQ(x.pow(2), x * x);
  EXPECT_EQ(error_of([&] { x.pow(-1); }), ErrorCode::InvalidArgument);
}

TEST(SymExpr, Degrees) {
  const FiniteField& F = FiniteField::of_order(3);
  FFUnit m1 = FFUnit::minus_one(F);
  EXPECT_EQ(X::monomial(F, 2, {m1, m1, m1}).degree(), 1);
  EXPECT_EQ(X::h_elem(F).degree(), 0);
  EXPECT_EQ((X::bracket(m1) + X::one(F)).degree(), std::nullopt);
  EXPECT_EQ(error_of([&] { (X::bracket(m1) + X::one(F)).homogeneous_degree(0); }), ErrorCode::Inhomogeneous);
  EXPECT_EQ(X(F).homogeneous_degree(4), 4);
}

TEST(SymExpr, MixingFieldsFails) {
  X a = X::bracket(FFUnit::minus_one(FiniteField::of_order(3)));
  X b = X::bracket(FFUnit::minus_one(FiniteField::of_order(5)));
  EXPECT_EQ(error_of([&] { (void)(a + b); }), ErrorCode::FieldMismatch);
  EXPECT_EQ(error_of([&] { (void)(a * b); }), ErrorCode::FieldMismatch);
}

TEST(SymExpr, CoefficientOverflowIsReported) {
  const FiniteField& F = FiniteField::of_order(3);
  X big = X::integer(F, INT64_MAX / 2 + 1);
  EXPECT_EQ(error_of([&] { (void)(big + big); }), ErrorCode::Overflow);
}

TEST(Rewrites, AgreeInTheModel) {
  const FiniteField& F = FiniteField::of_order(7);
  for (const FFUnit& a : all_units(F))
    for (const FFUnit& b : all_units(F)) {
      EXPECT_EQ(eval_model(X::bracket(a * b), 1), eval_model(rewrite_mw2(a, b), 1));
      EXPECT_EQ(eval_model(X::angle(a) * X::bracket(b), 1), eval_model(angle_bracket_rewrite(a, b), 1));
    }
  FFUnit g = FFUnit::gen(F);
  for (int e = -4; e <= 4; ++e) EXPECT_EQ(eval_model(X::bracket(g.pow(e)), 1), eval_model(power_symbol(g, e), 1));
}

TEST(RelationGenerators, ExhaustiveStreamVanishesInTheModel) {
  const FiniteField& F = FiniteField::of_order(3);
  for (int n = 0; n <= 2; ++n) {
    int64_t count = 0;
    for_each_relation_generator(F, n, 2, [&](RelationKind, const FFExpr& x) {
      ++count;
      EXPECT_TRUE(eval_model(x, n).is_zero()) << n;
    });
    EXPECT_GT(count, 0);
  }
  EXPECT_EQ(error_of([&] { for_each_relation_generator(F, 1, 3, [](RelationKind, const FFExpr&) {}, 10); }),
            ErrorCode::DegreeBound);
}

TEST(RelationGenerators, LiftToTheRationalFunctionField) {
  const FiniteField& F = FiniteField::of_order(5);
  X x = X::symbol(F, {FFUnit::from_elem(F, 2), FFUnit::from_elem(F, 4)}) + X::eta(F);
  RatExpr y = to_rational(x);
  EXPECT_EQ(y.size(), x.size());
  EXPECT_EQ(y.field(), &F);
}

}  // namespace
}  // namespace mwk
