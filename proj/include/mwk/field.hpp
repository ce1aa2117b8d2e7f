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

#include "mwk/error.hpp"

namespace mwk {

// An element of F_{p^d} is encoded as the integer sum c_i p^i of its
// coefficients in the power basis of the chosen modulus, so the integers
// 0..p-1 are the prime field.
using Elem = uint32_t;

class FiniteField {
 public:
  // Interned: the same (p, d) always yields the same object, so fields are
  // compared by address.
  static const FiniteField& get(int p, int d = 1);
  // Accepts q = p^d.
  static const FiniteField& of_order(int64_t q);

  int p() const { return p_; }
  int d() const { return d_; }
  int64_t q() const { return q_; }
  int64_t order_units() const { return q_ - 1; }
  const std::vector<int>& modulus() const { return modulus_; }
  Elem generator() const { return gen_; }
  std::string name() const;

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem minus_one() const { return static_cast<Elem>(p_ - 1); }
  Elem from_int(int64_t v) const { return static_cast<Elem>(mod_floor(v, p_)); }

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

  // Discrete log to the base generator(); a must be nonzero.
  int64_t log(Elem a) const;
  Elem exp(int64_t e) const { return exp_[static_cast<size_t>(mod_floor(e, q_ - 1))]; }

  // -1 is a square iff q = 1 mod 4.
  bool minus_one_is_square() const { return q_ % 4 == 1; }
  int64_t log_minus_one() const { return (q_ - 1) / 2; }

 private:
  FiniteField(int p, int d);

  int p_;
  int d_;
  int64_t q_;
  std::vector<int> modulus_;
  std::vector<int64_t> pow_p_;
  Elem gen_ = 0;
  std::vector<Elem> exp_;
  std::vector<int64_t> log_;
};

// The image table of the fixed embedding small -> big (codes indexed by
// small codes).  The embedding sends the generator of small's power basis
// to the smallest root of small's modulus in big.
const std::vector<Elem>& embedding(const FiniteField& small, const FiniteField& big);

// Unit of a finite field, stored as its discrete log.
struct FFUnit {
  const FiniteField* field = nullptr;
  int64_t e = 0;

  static FFUnit from_elem(const FiniteField& F, Elem a);
  static FFUnit one(const FiniteField& F) { return {&F, 0}; }
  static FFUnit minus_one(const FiniteField& F) { return {&F, F.log_minus_one()}; }
  static FFUnit gen(const FiniteField& F) { return {&F, 1 % F.order_units()}; }

  Elem elem() const { return field->exp(e); }
  bool is_one() const { return e == 0; }
  bool is_square() const { return e % 2 == 0; }
  FFUnit operator*(const FFUnit& o) const;
  FFUnit inverse() const;
  FFUnit pow(int64_t k) const;
  // 1 - u; fails with NotAUnit if u = 1.
  FFUnit one_minus() const;
  FFUnit embed(const FiniteField& big) const;

  bool operator==(const FFUnit& o) const { return field == o.field && e == o.e; }
  auto operator<=>(const FFUnit& o) const { return e <=> o.e; }
};

void require_same_field(const FiniteField* a, const FiniteField* b);

// All units of F in exponent order.
std::vector<FFUnit> all_units(const FiniteField& F);

}  // namespace mwk
