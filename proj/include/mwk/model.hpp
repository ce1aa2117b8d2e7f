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

#include <cstdint>
#include <string>
#include <vector>

#include "mwk/field.hpp"
#include "mwk/symbolic.hpp"

namespace mwk {

// Grothendieck-Witt class over F_q: rank and discriminant square class.
struct GWElem {
  int64_t rank = 0;
  int disc = 0;  // 0 = square, 1 = nonsquare

  bool operator==(const GWElem&) const = default;
};

GWElem gw_add(const GWElem& a, const GWElem& b);
GWElem gw_mul(const GWElem& a, const GWElem& b);
GWElem gw_neg(const GWElem& a);

// Witt class, stored as the GW representative of rank 0 or 1.
struct WElem {
  int rank = 0;
  int disc = 0;

  bool operator==(const WElem&) const = default;
};

// Reduction GW -> W; s is 1 iff -1 is a nonsquare.
WElem w_reduce(const GWElem& a, int s);

// An element of K^MW_n(F_q) as a compatible (Milnor, Witt) pair.
//   n >= 2: zero group.
//   n == 1: milnor = discrete log in Z/(q-1), witt = (0, milnor mod 2).
//   n == 0: milnor = rank in Z, witt in W with matching rank parity (= GW).
//   n < 0:  milnor = 0, witt in W.
struct ModelElem {
  const FiniteField* field = nullptr;
  int degree = 0;
  int64_t milnor = 0;
  WElem witt;

  static ModelElem zero(const FiniteField& F, int n);
  static ModelElem integer(const FiniteField& F, int64_t c);
  static ModelElem bracket(const FFUnit& a);
  static ModelElem eta(const FiniteField& F);
  static ModelElem angle(const FFUnit& a);
  static ModelElem h(const FiniteField& F);
  static ModelElem eps(const FiniteField& F);
  static ModelElem from_gw(const FiniteField& F, const GWElem& g);
  // Canonicalizes the given components for degree n.
  static ModelElem make(const FiniteField& F, int n, int64_t milnor, WElem witt);

  GWElem to_gw() const;
  bool is_zero() const { return milnor == 0 && witt.rank == 0 && witt.disc == 0; }
  bool compatible() const;

  ModelElem operator+(const ModelElem& o) const;
  ModelElem operator-() const;
  ModelElem operator-(const ModelElem& o) const { return *this + (-o); }
  ModelElem operator*(const ModelElem& o) const;
  ModelElem times(int64_t k) const;
  ModelElem base_change(const FiniteField& big) const;

  bool operator==(const ModelElem& o) const {
    return field == o.field && degree == o.degree && milnor == o.milnor && witt == o.witt;
  }
  std::string to_string() const;
};

ModelElem eval_model(const FFExpr& x, int degree_if_empty = 0);
ModelElem eval_monomial(const FiniteField& F, const Monomial<FFUnit>& m);

enum class Theory { MW, Milnor, Witt, Mod2Milnor };

const char* theory_name(Theory t);
Theory parse_theory(const std::string& s);

// Canonical lift of the image of x in the quotient theory.
ModelElem project(Theory th, const ModelElem& x);

// Element of K^MW, K^M, K^W or K^M/2 of F_q, stored as its canonical lift.
struct ThElem {
  Theory theory = Theory::MW;
  ModelElem v;

  static ThElem of(Theory th, const ModelElem& x) { return {th, project(th, x)}; }
  int degree() const { return v.degree; }
  bool is_zero() const { return v.is_zero(); }
  ThElem operator+(const ThElem& o) const;
  ThElem operator-() const { return of(theory, -v); }
  ThElem operator-(const ThElem& o) const { return *this + (-o); }
  ThElem times(int64_t k) const { return of(theory, v.times(k)); }
  // Left multiplication by an MW element.
  ThElem lmul(const ModelElem& a) const { return of(theory, a * v); }
  ThElem base_change(const FiniteField& big) const { return of(theory, v.base_change(big)); }
  bool operator==(const ThElem& o) const { return theory == o.theory && v == o.v; }
  std::string to_string() const;
};

enum class TorsionKind { H, Two, Tau };

// h-torsion, 2-torsion, or [-1]^{n-1}-torsion for the tau kind.
bool torsion_test(const ThElem& y, TorsionKind kind, int n = 1);

// All elements of T_n(F_q) with the integer part boxed to |rank| <= box in
// degree 0 (other groups are finite and fully listed).
std::vector<ThElem> enumerate_group(const FiniteField& F, Theory th, int degree, int64_t box = 2);

// Invariant factors (nontrivial ones ascending, then 0 for each free summand)
// of K^MW_n(F_q), computed from the enumerated pairs.
std::vector<int64_t> group_structure_model(const FiniteField& F, int n);

}  // namespace mwk
