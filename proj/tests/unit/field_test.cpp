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


#include "mwk/field.hpp"

#include "test_util.hpp"

namespace mwk {
namespace {

using testing::error_of;

TEST(FiniteField, InternedByCharacteristicAndDegree) {
  const FiniteField& a = FiniteField::get(3, 2);
  EXPECT_EQ(&a, &FiniteField::of_order(9));
  EXPECT_EQ(a.p(), 3);
  EXPECT_EQ(a.d(), 2);
  EXPECT_EQ(a.q(), 9);
  EXPECT_EQ(a.name(), "F_9");
}

TEST(FiniteField, RejectsBadOrders) {
  EXPECT_EQ(error_of([] { FiniteField::of_order(8); }), ErrorCode::EvenCharacteristic);
  EXPECT_EQ(error_of([] { FiniteField::of_order(15); }), ErrorCode::NotPrime);
  EXPECT_EQ(error_of([] { FiniteField::of_order(10007); }), ErrorCode::SizeBound);
}

class FieldAxioms : public ::testing::TestWithParam<int64_t> {};

TEST_P(FieldAxioms, UnitsFormACyclicGroup) {
  const FiniteField& F = FiniteField::of_order(GetParam());
  std::vector<bool> seen(static_cast<size_t>(F.q()), false);
  for (int64_t e = 0; e < F.order_units(); ++e) {
    Elem a = F.exp(e);
    ASSERT_NE(a, F.zero());
    ASSERT_FALSE(seen[a]) << "generator has order < q - 1";
    seen[a] = true;
    EXPECT_EQ(F.log(a), e);
    EXPECT_EQ(F.mul(a, F.inv(a)), F.one());
  }
}

TEST_P(FieldAxioms, RingLaws) {
  const FiniteField& F = FiniteField::of_order(GetParam());
  for (Elem a = 0; a < F.q(); ++a)
    for (Elem b = 0; b < F.q(); ++b) {
      EXPECT_EQ(F.add(a, b), F.add(b, a));
      EXPECT_EQ(F.sub(F.add(a, b), b), a);
      EXPECT_EQ(F.mul(a, b), F.mul(b, a));
      EXPECT_EQ(F.mul(a, F.add(b, F.one())), F.add(F.mul(a, b), a));
    }
}

TEST_P(FieldAxioms, MinusOneIsASquareIffQIsOneModFour) {
  const FiniteField& F = FiniteField::of_order(GetParam());
  bool square = false;
  for (Elem x = 1; x < F.q(); ++x) square = square || F.mul(x, x) == F.minus_one();
  EXPECT_EQ(square, F.minus_one_is_square());
  EXPECT_EQ(FFUnit::minus_one(F).is_square(), square);
  EXPECT_EQ(FFUnit::minus_one(F).elem(), F.minus_one());
}

INSTANTIATE_TEST_SUITE_P(SmallFields, FieldAxioms, ::testing::Values(3, 5, 7, 9, 25, 27));

TEST(FFUnit, Arithmetic) {
  const FiniteField& F = FiniteField::of_order(7);
  FFUnit g = FFUnit::gen(F);
  EXPECT_TRUE(g.pow(6).is_one());
  EXPECT_EQ(g * g.inverse(), FFUnit::one(F));
  EXPECT_EQ(g.pow(-2), g.inverse() * g.inverse());
  FFUnit two = FFUnit::from_elem(F, 2);
  EXPECT_EQ(two.one_minus(), FFUnit::minus_one(F));
  EXPECT_EQ(error_of([&] { FFUnit::one(F).one_minus(); }), ErrorCode::NotAUnit);
}

TEST(FFUnit, EmbeddingIsMultiplicative) {
  const FiniteField& small = FiniteField::of_order(3);
  const FiniteField& big = FiniteField::of_order(9);
  for (const FFUnit& a : all_units(small))
    for (const FFUnit& b : all_units(small)) EXPECT_EQ((a * b).embed(big), a.embed(big) * b.embed(big));
  EXPECT_EQ(FFUnit::minus_one(small).embed(big), FFUnit::minus_one(big));
  EXPECT_EQ(error_of([&] { embedding(FiniteField::of_order(5), big); }), ErrorCode::FieldMismatch);
}

}  // namespace
}  // namespace mwk
