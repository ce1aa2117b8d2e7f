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


#include "mwk/parse.hpp"

#include "test_util.hpp"

namespace mwk {
namespace {

using testing::error_of;

TEST(ParseField, FiniteAndRational) {
  FieldSpec a = parse_field("9");
  EXPECT_EQ(a.base->q(), 9);
  EXPECT_FALSE(a.rational);
  FieldSpec b = parse_field("F_5(t)");
  EXPECT_EQ(b.base->q(), 5);
  EXPECT_TRUE(b.rational);
  EXPECT_EQ(b.to_string(), "5(t)");
  EXPECT_EQ(error_of([] { parse_field("x"); }), ErrorCode::ParseError);
  EXPECT_EQ(error_of([] { parse_field("4"); }), ErrorCode::EvenCharacteristic);
}

TEST(ParseUnit, RationalFunctions) {
  const FiniteField& F = FiniteField::of_order(3);
  RatUnit u = parse_rat_unit(F, "(t^2 - 1)/(t - 1)");
  EXPECT_EQ(u, parse_rat_unit(F, "t + 1"));
  EXPECT_EQ(parse_rat_unit(F, "-1"), RatUnit::minus_one(F));
  EXPECT_EQ(parse_rat_unit(F, "t^-2"), RatUnit::t(F).pow(-2));
  EXPECT_EQ(error_of([&] { parse_rat_unit(F, "t - t"); }), ErrorCode::ParseError);
  EXPECT_EQ(error_of([&] { parse_ff_unit(F, "t"); }), ErrorCode::ParseError);
  EXPECT_EQ(parse_poly(F, "t^2+1"), Poly(F, {1, 0, 1}));
}

TEST(ParseUnit, ElementCodesAndGenerator) {
  const FiniteField& F = FiniteField::of_order(9);
  EXPECT_EQ(parse_ff_unit(F, "g"), FFUnit::gen(F));
  EXPECT_EQ(parse_ff_unit(F, "2"), FFUnit::minus_one(F));
  EXPECT_EQ(error_of([&] { parse_ff_unit(F, "12"); }), ErrorCode::ParseError);
  // Over a prime field integers reduce mod p.
  EXPECT_EQ(parse_ff_unit(FiniteField::of_order(5), "7"), FFUnit::from_elem(FiniteField::of_order(5), 2));
}

TEST(ParseExpr, Atoms) {
  const FiniteField& F = FiniteField::of_order(5);
  using X = FFExpr;
  FFUnit two = FFUnit::from_elem(F, 2), m1 = FFUnit::minus_one(F);
  EXPECT_EQ(parse_ff_expr(F, "[2,-1]"), X::symbol(F, {two, m1}));
  EXPECT_EQ(parse_ff_expr(F, "<2>"), X::angle(two));
  EXPECT_EQ(parse_ff_expr(F, "h"), X::h_elem(F));
  EXPECT_EQ(parse_ff_expr(F, "eps"), X::eps_elem(F));
  EXPECT_EQ(parse_ff_expr(F, "eta^2"), X::eta(F) * X::eta(F));
  EXPECT_EQ(parse_ff_expr(F, "3*[2] - [2]"), X::bracket(two).scaled(2));
  EXPECT_EQ(parse_ff_expr(F, "-(eta*[2])"), X::monomial(F, 1, {two}, -1));
}

TEST(ParseExpr, RoundTrip) {
  const FiniteField& F = FiniteField::of_order(3);
  for (const char* s : {"[t, t] - [t, 2]", "eta*[t^2+1] + 2*[2, t]", "eta^2*[t, (t+1)^-1, 2] - 3", "0"}) {
    RatExpr x = parse_rat_expr(F, s);
    EXPECT_EQ(parse_rat_expr(F, expr_to_string(x)), x) << s << " printed as " << expr_to_string(x);
  }
  const FiniteField& K = FiniteField::of_order(9);
  FFExpr y = parse_ff_expr(K, "[g, g^3] + eta*[g^5]");
  EXPECT_EQ(parse_ff_expr(K, expr_to_string(y)), y);
}

TEST(ParseExpr, ErrorsCarryPositions) {
  const FiniteField& F = FiniteField::of_order(3);
  try {
    parse_ff_expr(F, "[2,  ");
    FAIL() << "expected a parse error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ParseError);
    EXPECT_NE(std::string(e.what()).find("position 5"), std::string::npos) << e.what();
  }
  EXPECT_EQ(error_of([&] { parse_ff_expr(F, "[0]"); }), ErrorCode::ParseError);
  EXPECT_EQ(error_of([&] { parse_ff_expr(F, "[2] $"); }), ErrorCode::ParseError);
  EXPECT_EQ(error_of([&] { parse_ff_expr(F, "[2] [2]"); }), ErrorCode::ParseError);
}

}  // namespace
}  // namespace mwk
