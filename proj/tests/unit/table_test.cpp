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


#include <set>

#include "mwk/sequences.hpp"
#include "test_util.hpp"

namespace mwk {
namespace {

const Theory kTheories[] = {Theory::Milnor, Theory::Witt, Theory::MW};

TEST(OperationTable, NineDistinctRows) {
  const auto& rows = operation_table();
  EXPECT_EQ(rows.size(), 9u);
  std::set<std::pair<Theory, Theory>> seen;
  for (const TableRow& r : rows) seen.emplace(r.source, r.target);
  EXPECT_EQ(seen.size(), 9u);
  for (Theory s : kTheories)
    for (Theory t : kTheories) EXPECT_EQ(table_row(s, t).source, s);
}

TEST(OperationTable, WittTargetsAreUnconstrained) {
  const FiniteField& F = FiniteField::of_order(3);
  for (Theory src : kTheories)
    for (int n = 1; n <= 2; ++n)
      for (int l = 0; l <= 3; ++l)
        for (const ThElem& a : enumerate_group(F, Theory::Witt, 2 - n * l)) {
          OpSequence s = OpSequence::zero(F, n, Theory::Witt, 2, l);
          s.coeffs[static_cast<size_t>(l)] = a;
          if (src == Theory::Milnor && l >= 2) continue;  // tau_n-torsion still applies
          EXPECT_TRUE(admissible(src, Theory::Witt, n, 2, s));
        }
}

TEST(OperationTable, MilnorTargetForcesTwoTorsion) {
  // MW -> M, n = 1, m = 2 over F_3: a_2 lies in the 2-torsion of K^M_0 = Z.
  const FiniteField& F = FiniteField::of_order(3);
  OpSequence s = OpSequence::zero(F, 1, Theory::Milnor, 2, 2);
  EXPECT_TRUE(admissible(Theory::MW, Theory::Milnor, 1, 2, s));
  s.coeffs[2] = ThElem::of(Theory::Milnor, ModelElem::integer(F, 1));
  EXPECT_FALSE(admissible(Theory::MW, Theory::Milnor, 1, 2, s));
  // Even n drops the condition.
  OpSequence e = OpSequence::zero(F, 2, Theory::Milnor, 4, 2);
  e.coeffs[2] = ThElem::of(Theory::Milnor, ModelElem::integer(F, 1));
  EXPECT_TRUE(admissible(Theory::MW, Theory::Milnor, 2, 4, e));
}

TEST(OperationTable, MilnorSourceNeedsTauTorsion) {
  // tau_1 is the identity, so for n = 1 every a_l with l >= 2 must vanish.
  const FiniteField& F = FiniteField::of_order(5);
  OpSequence s = OpSequence::zero(F, 1, Theory::MW, 1, 2);
  s.coeffs[2] = ThElem::of(Theory::MW, ModelElem::eta(F));
  EXPECT_TRUE(admissible(Theory::MW, Theory::MW, 1, 1, s));
  EXPECT_FALSE(admissible(Theory::Milnor, Theory::MW, 1, 1, s));
  annotate(s, Theory::Milnor);
  EXPECT_EQ(s.torsion_flags, (std::vector<bool>{true, true, false}));
}

TEST(OperationTable, SatisfiesMatchesTorsionTests) {
  const FiniteField& F = FiniteField::of_order(7);
  for (int deg = -2; deg <= 1; ++deg)
    for (const ThElem& a : enumerate_group(F, Theory::MW, deg)) {
      EXPECT_TRUE(satisfies(a, Constraint::Free, 1));
      EXPECT_EQ(satisfies(a, Constraint::H, 2), torsion_test(a, TorsionKind::H));
      EXPECT_EQ(satisfies(a, Constraint::Two, 2), torsion_test(a, TorsionKind::Two));
      EXPECT_TRUE(satisfies(a, Constraint::DeltaH, 2));
      EXPECT_EQ(satisfies(a, Constraint::DeltaH, 3), torsion_test(a, TorsionKind::H));
    }
}

TEST(OperationTable, WrongTargetIsNotAdmissible) {
  const FiniteField& F = FiniteField::of_order(3);
  OpSequence s = OpSequence::zero(F, 1, Theory::Witt, 1, 1);
  EXPECT_FALSE(admissible(Theory::MW, Theory::MW, 1, 1, s));
  EXPECT_FALSE(admissible(Theory::MW, Theory::Witt, 1, 2, s));
}

}  // namespace
}  // namespace mwk
