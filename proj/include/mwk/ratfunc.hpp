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
#include <set>
#include <string>

#include "mwk/poly.hpp"

namespace mwk {

// A nonzero element of F_q(t) in factored form: c * prod f^e over monic
// irreducible f with e != 0.
class RatUnit {
 public:
  RatUnit() = default;
  explicit RatUnit(FFUnit c) : c_(c) {}
  RatUnit(FFUnit c, std::map<Poly, int> factors);
  static RatUnit one(const FiniteField& F) { return RatUnit(FFUnit::one(F)); }
  static RatUnit minus_one(const FiniteField& F) { return RatUnit(FFUnit::minus_one(F)); }
  static RatUnit t(const FiniteField& F);
  // Factors num/den; both must be nonzero.
  static RatUnit from_polys(const Poly& num, const Poly& den);
  static RatUnit from_poly(const Poly& p);

  const FiniteField* field() const { return c_.field; }
  const FFUnit& constant() const { return c_; }
  const std::map<Poly, int>& factors() const { return f_; }
  bool is_constant() const { return f_.empty(); }
  bool is_one() const { return f_.empty() && c_.is_one(); }

  RatUnit operator*(const RatUnit& o) const;
  RatUnit inverse() const;
  RatUnit pow(int64_t k) const;
  RatUnit operator-() const { return *this * minus_one(*field()); }
  // 1 - a; fails with NotAUnit if a = 1.
  RatUnit one_minus() const;

  Poly numerator() const;
  Poly denominator() const;
  // Sum of e * deg f, i.e. -valuation at infinity.
  int degree() const;

  bool operator==(const RatUnit& o) const { return c_ == o.c_ && f_ == o.f_; }
  bool operator<(const RatUnit& o) const {
    if (!(c_ == o.c_)) return c_ < o.c_;
    return f_ < o.f_;
  }

 private:
  FFUnit c_;
  std::map<Poly, int> f_;
};

struct Place {
  bool infinite = false;
  Poly p;  // monic irreducible when finite

  static Place finite(const Poly& p);
  static Place infinity() { return Place{true, Poly()}; }
  int degree() const { return infinite ? 1 : p.degree(); }
  std::string to_string() const { return infinite ? "inf" : p.to_string(); }
  bool operator==(const Place& o) const { return infinite == o.infinite && (infinite || p == o.p); }
  bool operator<(const Place& o) const {
    if (infinite != o.infinite) return !infinite;
    return infinite ? false : p < o.p;
  }
};

int valuation(const RatUnit& a, const Place& pl);
// Default uniformizer: p itself, or 1/t at infinity.
RatUnit default_uniformizer(const Place& pl, const FiniteField& F);

// kappa(p) = F_{q^deg p} together with the image theta of t.
struct ResidueField {
  const FiniteField* kappa = nullptr;
  Elem theta = 0;
};

ResidueField residue_field(const Place& pl, const FiniteField& base);
// Image of a unit regular at pl (valuation 0) in kappa(p)^x.
FFUnit reduce_unit(const RatUnit& u, const Place& pl, const ResidueField& rf);

// Finite places appearing in the factorizations of the given units.
std::set<Poly> support(const std::vector<RatUnit>& units);

}  // namespace mwk
