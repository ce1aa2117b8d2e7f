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

#include "mwk/sequences.hpp"

#include <algorithm>

namespace mwk {

OpSequence OpSequence::zero(const FiniteField& F, int n, Theory target, int m, int L) {
  if (n < 1) fail(ErrorCode::InvalidArgument, "operations need source degree n >= 1");
  OpSequence s;
  s.field = &F;
  s.n = n;
  s.target = target;
  s.m = m;
  for (int l = 0; l <= L; ++l) s.coeffs.push_back(ThElem::of(target, ModelElem::zero(F, m - n * l)));
  s.torsion_flags.assign(s.coeffs.size(), true);
  return s;
}

ThElem OpSequence::coeff(int l) const {
  if (l >= 0 && l < length()) return coeffs[static_cast<size_t>(l)];
  return ThElem::of(target, ModelElem::zero(*field, coeff_degree(l)));
}

bool OpSequence::is_zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](const ThElem& a) { return a.is_zero(); });
}

bool OpSequence::operator==(const OpSequence& o) const {
  if (field != o.field || n != o.n || target != o.target || m != o.m) return false;
  int L = std::max(length(), o.length());
  for (int l = 0; l < L; ++l)
    if (!(coeff(l) == o.coeff(l))) return false;
  return true;
}

std::string OpSequence::to_string() const {
  std::string s = "(n=" + std::to_string(n) + ", " + theory_name(target) + "_" + std::to_string(m) + ":";
  for (int l = 0; l < length(); ++l) s += " a" + std::to_string(l) + "=" + coeffs[static_cast<size_t>(l)].to_string();
  return s + ")";
}

ThElem tau_action(const ThElem& a, int n) {
  const FiniteField& F = *a.v.field;
  ModelElem t = ModelElem::integer(F, 1);
  for (int i = 0; i < n; ++i) t = t * ModelElem::bracket(FFUnit::minus_one(F));
  return a.lmul(t);
}

OpSequence shift(const OpSequence& s, ShiftSign sign) {
  OpSequence out = OpSequence::zero(*s.field, s.n, s.target, s.m - s.n, std::max(0, s.length() - 2));
  for (int l = 0; l < out.length(); ++l) {
    ThElem b = s.coeff(l + 1);
    bool odd = l % 2 != 0;
    if (sign == ShiftSign::Plus && odd) b = b + tau_action(s.coeff(l + 2), s.n);
    if (sign == ShiftSign::Minus && !odd) b = b + tau_action(s.coeff(l + 2), s.n);
    out.coeffs[static_cast<size_t>(l)] = b;
  }
  return out;
}

OpSequence shift_many(OpSequence s, int plus, int minus) {
  // Alternate + and - while both remain; the order does not matter.
  while (plus > 0 || minus > 0) {
    if (plus > 0) {
      s = shift(s, ShiftSign::Plus);
      --plus;
    }
    if (minus > 0) {
      s = shift(s, ShiftSign::Minus);
      --minus;
    }
  }
  return s;
}

std::vector<ThElem> g_map(const OpSequence& s) {
  std::vector<ThElem> out;
  for (int l = 0; l < s.length(); ++l) out.push_back(shift_many(s, (l + 1) / 2, l / 2).coeff(0));
  return out;
}

bool roundtrip(const OpSequence& s) {
  std::vector<ThElem> g = g_map(s);
  for (int l = 0; l < s.length(); ++l)
    if (!(g[static_cast<size_t>(l)] == s.coeff(l))) return false;
  return true;
}

int filtration_degree(const OpSequence& s) {
  bool any = false;
  for (int l = 0; l < s.length(); ++l) {
    if (s.coeff(l).is_zero()) continue;
    any = true;
    if (s.coeff_degree(l) < 0) return kFiltrationNone;
  }
  // Each nonzero a_l needs m - n l >= d - n l, i.e. d <= m.
  return any ? s.m : kFiltrationTop;
}

const std::vector<TableRow>& operation_table() {
  static const std::vector<TableRow> rows = {
      {Theory::Milnor, Theory::Milnor, 1, Constraint::DeltaTwoTau,
       "a_l in K^M; l>=2: delta_n 2-torsion of tau_n-torsion"},
      {Theory::Milnor, Theory::Witt, 1, Constraint::DeltaTwoTau,
       "a_l in K^W; l>=2: delta_n 2-torsion of tau_n-torsion"},
      {Theory::Milnor, Theory::MW, 1, Constraint::DeltaTwoTau,
       "a_l in K^MW; l>=2: delta_n 2-torsion of tau_n-torsion"},
      {Theory::Witt, Theory::Milnor, 0, Constraint::Two, "a_0 in K^M; l>=1: 2-torsion of K^M"},
      {Theory::Witt, Theory::Witt, INT_MAX, Constraint::Free, "all a_l free in K^W"},
      {Theory::Witt, Theory::MW, 0, Constraint::H, "a_0 in K^MW; l>=1: h-torsion of K^MW"},
      {Theory::MW, Theory::Milnor, 1, Constraint::DeltaTwo, "a_0, a_1 in K^M; l>=2: delta_n 2-torsion"},
      {Theory::MW, Theory::Witt, INT_MAX, Constraint::Free, "all a_l free in K^W"},
      {Theory::MW, Theory::MW, 1, Constraint::DeltaH, "a_0, a_1 in K^MW; l>=2: delta_n h-torsion"},
  };
  return rows;
}

const TableRow& table_row(Theory source, Theory target) {
  // Mod-2 Milnor targets behave like Milnor targets.
  Theory t = target == Theory::Mod2Milnor ? Theory::Milnor : target;
  Theory s = source == Theory::Mod2Milnor ? Theory::Milnor : source;
  for (const TableRow& r : operation_table())
    if (r.source == s && r.target == t) return r;
  fail(ErrorCode::InvalidArgument, "no table row");
}

bool satisfies(const ThElem& a, Constraint c, int n) {
  switch (c) {
    case Constraint::Free: return true;
    case Constraint::Two: return torsion_test(a, TorsionKind::Two);
    case Constraint::H: return torsion_test(a, TorsionKind::H);
    case Constraint::DeltaTwo: return delta(n) == 0 || torsion_test(a, TorsionKind::Two);
    case Constraint::DeltaH: return delta(n) == 0 || torsion_test(a, TorsionKind::H);
    case Constraint::DeltaTwoTau:
      return torsion_test(a, TorsionKind::Tau, n) && (delta(n) == 0 || torsion_test(a, TorsionKind::Two));
  }
  return false;
}

namespace {
bool coefficient_ok(const TableRow& row, const OpSequence& s, int l) {
  return l <= row.free_upto || satisfies(s.coeff(l), row.rest, s.n);
}
}  // namespace

bool admissible(Theory source, Theory target, int n, int m, const OpSequence& s) {
  if (s.n != n || s.m != m || s.target != target) return false;
  const TableRow& row = table_row(source, target);
  for (int l = 0; l < s.length(); ++l) {
    const ThElem& a = s.coeffs[static_cast<size_t>(l)];
    if (a.theory != target || a.degree() != s.coeff_degree(l) || a.v.field != s.field) return false;
    if (!(ThElem::of(target, a.v) == a)) return false;
    if (!coefficient_ok(row, s, l)) return false;
  }
  return true;
}

void annotate(OpSequence& s, Theory source) {
  const TableRow& row = table_row(source, s.target);
  s.torsion_flags.resize(s.coeffs.size());
  for (int l = 0; l < s.length(); ++l) s.torsion_flags[static_cast<size_t>(l)] = coefficient_ok(row, s, l);
}

}  // namespace mwk
