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
#include <optional>
#include <string>

#include "mwk/model.hpp"
#include "mwk/ratfunc.hpp"
#include "mwk/symbolic.hpp"

namespace mwk {

// A place of F_q(t) together with a uniformizer and its residue field.
class PlaceContext {
 public:
  PlaceContext(const FiniteField& F, const Place& pl, std::optional<RatUnit> uniformizer = std::nullopt);

  const Place& place() const { return pl_; }
  const RatUnit& uniformizer() const { return pi_; }
  const FiniteField& kappa() const { return *rf_.kappa; }
  const FiniteField& base() const { return *F_; }

  // a = pi^e * u with u a unit at the place; returns (e, reduction of u).
  std::pair<int, FFUnit> split(const RatUnit& a) const;

 private:
  const FiniteField* F_;
  Place pl_;
  RatUnit pi_;
  ResidueField rf_;
  int64_t log_w_ = 0;  // log of the reduction of pi / p (or of pi's constant at infinity)
  mutable std::map<Poly, int64_t> log_cache_;
};

// Every x in K^MW_n(F_q(t)) is alpha + [pi] beta with alpha, beta built
// from units at the place; specialization is the reduction of alpha and the
// residue the reduction of beta.  Both are returned as model elements over
// kappa(p) in degrees n and n - 1.
struct LocalParts {
  ModelElem special;
  ModelElem residue;
};

LocalParts local_parts(const RatExpr& x, const PlaceContext& ctx, int degree_if_empty = 0);

// Symbolic versions over kappa(p); entries r + d of every term are bounded
// by `length_bound`.
inline constexpr int kSymbolicLengthBound = 8;
FFExpr residue(const RatExpr& x, const PlaceContext& ctx, int length_bound = kSymbolicLengthBound);
FFExpr specialize(const RatExpr& x, const PlaceContext& ctx, int length_bound = kSymbolicLengthBound);

// Complete invariant of an element of T_n(F_q(t)) for T one of the four
// theories: the specialization at t and the nonzero residues at finite
// places.
struct CanonicalForm {
  Theory theory = Theory::MW;
  const FiniteField* field = nullptr;
  int degree = 0;
  ModelElem base;
  std::map<Poly, ModelElem> residues;

  static CanonicalForm zero(const FiniteField& F, int n, Theory th = Theory::MW);
  bool is_zero() const { return base.is_zero() && residues.empty(); }
  CanonicalForm operator+(const CanonicalForm& o) const;
  CanonicalForm operator-() const;
  CanonicalForm operator-(const CanonicalForm& o) const { return *this + (-o); }
  // x * y for a constant y in K^MW(F_q).
  CanonicalForm rmul(const ModelElem& y) const;
  CanonicalForm projected(Theory th) const;
  bool operator==(const CanonicalForm& o) const;
  std::string to_string() const;
};

CanonicalForm canonical_form(const RatExpr& x, int degree_if_empty = 0, Theory th = Theory::MW);
bool is_zero(const RatExpr& x, int degree_if_empty = 0);
bool equal(const RatExpr& x, const RatExpr& y);

}  // namespace mwk
