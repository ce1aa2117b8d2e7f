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

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "mwk/field.hpp"

namespace mwk {

// Univariate polynomial in t over a finite field, coefficients low-to-high,
// no trailing zeros.  The zero polynomial has no coefficients.
class Poly {
 public:
  Poly() = default;
  Poly(const FiniteField& F, std::vector<Elem> coeffs);
  static Poly constant(const FiniteField& F, Elem c) { return Poly(F, {c}); }
  static Poly t(const FiniteField& F) { return Poly(F, {0, 1}); }
  // t - c
  static Poly linear(const FiniteField& F, Elem c) { return Poly(F, {F.neg(c), 1}); }

  const FiniteField* field() const { return F_; }
  const std::vector<Elem>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  Elem lead() const { return c_.empty() ? 0 : c_.back(); }
  Elem coeff(int i) const { return i < static_cast<int>(c_.size()) ? c_[static_cast<size_t>(i)] : 0; }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly scale(Elem c) const;
  Poly monic() const;
  // Euclidean division; divisor must be nonzero.
  std::pair<Poly, Poly> divmod(const Poly& o) const;
  Poly pow(int k) const;

  // Evaluate at x in a field containing F (via the fixed embedding).
  Elem eval_in(const FiniteField& big, Elem x) const;

  bool operator==(const Poly& o) const { return F_ == o.F_ && c_ == o.c_; }
  // Degree first, then coefficients from c_0 upward.
  bool operator<(const Poly& o) const;

  std::string to_string() const;

 private:
  void trim();
  const FiniteField* F_ = nullptr;
  std::vector<Elem> c_;
};

// Largest degree accepted by poly_factor.
inline constexpr int kFactorDegreeBound = 12;

struct Factorization {
  FFUnit lead;
  std::map<Poly, int> factors;  // monic irreducible -> multiplicity
};

Factorization poly_factor(const Poly& f, int degree_bound = kFactorDegreeBound);
bool is_irreducible(const Poly& f);

// All monic polynomials of the given degree in code order.
std::vector<Poly> monic_polys(const FiniteField& F, int degree);
std::vector<Poly> monic_irreducibles(const FiniteField& F, int degree);

}  // namespace mwk
