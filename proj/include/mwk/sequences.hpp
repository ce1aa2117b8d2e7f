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

#pragma once

#include <climits>
#include <string>
#include <vector>

#include "mwk/model.hpp"

namespace mwk {

// Coefficients (a_0, ..., a_L) of the operation sum_l sigma_l * a_l out of
// degree n, with a_l in degree m - n*l of the target theory over F_q.
struct OpSequence {
  const FiniteField* field = nullptr;
  int n = 1;
  Theory target = Theory::MW;
  int m = 0;
  std::vector<ThElem> coeffs;
  std::vector<bool> torsion_flags;  // a_l passes the torsion test of its row

  static OpSequence zero(const FiniteField& F, int n, Theory target, int m, int L);
  int length() const { return static_cast<int>(coeffs.size()); }
  int coeff_degree(int l) const { return m - n * l; }
  ThElem coeff(int l) const;  // zero beyond the stored range
  bool is_zero() const;
  bool operator==(const OpSequence& o) const;
  std::string to_string() const;
};

// delta_n: 1 for odd n, 0 for even n.
inline int delta(int n) { return n % 2 != 0 ? 1 : 0; }

// Left multiplication by [-1]^n.
ThElem tau_action(const ThElem& a, int n);

enum class ShiftSign { Plus, Minus };

// plus:  b_l = a_{l+1} + [l odd]  [-1]^n a_{l+2}
// minus: b_l = a_{l+1} + [l even] [-1]^n a_{l+2}
OpSequence shift(const OpSequence& s, ShiftSign sign);
OpSequence shift_many(OpSequence s, int plus, int minus);

// The coefficient at l of the inverse map: the value at 0 of the operation
// shifted ceil(l/2) times by + and floor(l/2) times by -.
std::vector<ThElem> g_map(const OpSequence& s);
bool roundtrip(const OpSequence& s);

// Largest d with every nonzero a_l in degree >= max(d - n l, 0);
// kFiltrationTop for the zero sequence and kFiltrationNone when some
// nonzero coefficient sits in negative degree.
inline constexpr int kFiltrationTop = INT_MAX;
inline constexpr int kFiltrationNone = INT_MIN;
int filtration_degree(const OpSequence& s);

// The operation table: operations T_n -> S_m over a field, as constraints on a_l.
enum class Constraint {
  Free,
  Two,          // 2-torsion
  H,            // h-torsion
  DeltaTwo,     // 2-torsion when n is odd
  DeltaH,       // h-torsion when n is odd
  DeltaTwoTau,  // [-1]^{n-1}-torsion, and 2-torsion when n is odd
};

struct TableRow {
  Theory source;
  Theory target;
  int free_upto;  // a_l unconstrained for l <= free_upto
  Constraint rest;
  const char* coefficient_groups;  // human-readable description
};

const std::vector<TableRow>& operation_table();
const TableRow& table_row(Theory source, Theory target);
bool satisfies(const ThElem& a, Constraint c, int n);

// Typing plus the per-coefficient constraint of the (source, target) row.
bool admissible(Theory source, Theory target, int n, int m, const OpSequence& s);
// Fills torsion_flags from the row.
void annotate(OpSequence& s, Theory source);

}  // namespace mwk
