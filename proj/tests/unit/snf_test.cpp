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


#include "mwk/snf.hpp"

#include <random>

#include "mwk/model.hpp"
#include "test_util.hpp"

namespace mwk {
namespace {

DenseMatrix dense(std::vector<std::vector<int>> rows) {
  DenseMatrix M;
  for (auto& r : rows) M.emplace_back(r.begin(), r.end());
  return M;
}

BigInt det3(const DenseMatrix& M) {
  return M[0][0] * (M[1][1] * M[2][2] - M[1][2] * M[2][1]) - M[0][1] * (M[1][0] * M[2][2] - M[1][2] * M[2][0]) +
         M[0][2] * (M[1][0] * M[2][1] - M[1][1] * M[2][0]);
}

TEST(SmithNormalForm, KnownMatrices) {
  EXPECT_EQ(smith_normal_form(dense({{2, 4}, {6, 8}})), (std::vector<BigInt>{2, 4}));
  EXPECT_EQ(smith_normal_form(dense({{2, 0}, {0, 3}})), (std::vector<BigInt>{1, 6}));
  EXPECT_EQ(smith_normal_form(dense({{0, 0}, {0, 0}})), (std::vector<BigInt>{0, 0}));
  EXPECT_EQ(smith_normal_form(dense({{1, 2, 3}})), (std::vector<BigInt>{1}));
}

TEST(SmithNormalForm, DeterminantAndDivisibility) {
  std::mt19937 g(5);
  for (int it = 0; it < 300; ++it) {
    DenseMatrix M(3, std::vector<BigInt>(3));
    for (auto& r : M)
      for (auto& x : r) x = static_cast<int>(g() % 21) - 10;
    BigInt d = det3(M);
    std::vector<BigInt> diag = smith_normal_form(M);
    BigInt prod = 1;
    for (const BigInt& x : diag) prod *= x;
    EXPECT_EQ(prod, abs(d));
    for (size_t i = 0; i + 1 < diag.size(); ++i)
      if (diag[i] != 0) EXPECT_EQ(diag[i + 1] % diag[i], 0);
  }
}

TEST(PresentedGroup, SparseInput) {
  // <x, y, z | 4x, 6y, 2x + 2y> with z free.
  SparseRelations R;
  R.cols = 3;
  R.rows = {{{0, 4}}, {{1, 6}}, {{0, 2}, {1, 2}}};
  std::vector<BigInt> G = presented_group(R);
  BigInt torsion = 1;
  int free = 0;
  for (const BigInt& x : G) {
    if (x == 0) ++free;
    else torsion *= x;
  }
  EXPECT_EQ(free, 1);
  // The gcd of the 2x2 minors is gcd(24, 8, -12) = 4.
  EXPECT_EQ(torsion, 4);
  EXPECT_EQ(group_to_string(G), "Z/2 + Z/2 + Z");
}

class DualOracle : public ::testing::TestWithParam<std::tuple<int, int>> {};

TEST_P(DualOracle, PresentationMatchesTheModel) {
  auto [q, n] = GetParam();
  const FiniteField& F = FiniteField::of_order(q);
  SnfOracleResult r = snf_oracle(F, n, 3);
  EXPECT_EQ(r.final_group(), to_big(group_structure_model(F, n)));
  EXPECT_TRUE(r.stabilized);
  EXPECT_GE(r.first_stable_bound(), 0);
  EXPECT_LE(r.first_stable_bound(), 2);
  EXPECT_EQ(r.generators.size(), 4u);
}

INSTANTIATE_TEST_SUITE_P(Small, DualOracle,
                         ::testing::Combine(::testing::Values(3, 5), ::testing::Values(0, 1, 2)));

TEST(DualOracle, GrothendieckWittGroup) {
  for (int q : {3, 5, 7}) {
    SnfOracleResult r = snf_oracle(FiniteField::of_order(q), 0, 4);
    EXPECT_EQ(r.final_group(), (std::vector<BigInt>{2, 0})) << q;
    EXPECT_LE(r.first_stable_bound(), 3) << q;
  }
}

}  // namespace
}  // namespace mwk
