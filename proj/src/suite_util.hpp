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

// Shared pieces of the verification suites: samplers, zero tests and the
// per-suite entry points.

#pragma once

#include <cmath>
#include <string>
#include <type_traits>
#include <vector>

#include "mwk/operations.hpp"
#include "mwk/parse.hpp"
#include "mwk/poly.hpp"
#include "mwk/suites.hpp"
#include "mwk/valuation.hpp"

namespace mwk::suites {

template <class U>
bool expr_zero(const SymExpr<U>& x, int degree) {
  if constexpr (std::is_same_v<U, FFUnit>) {
    return eval_model(x, degree).is_zero();
  } else {
    return is_zero(x, degree);
  }
}

template <class U>
bool expr_equal(const SymExpr<U>& x, const SymExpr<U>& y, int degree) {
  return expr_zero(x - y, degree);
}

template <class U>
std::string show(const SymExpr<U>& x) {
  return expr_to_string(x);
}

inline std::string show(const ThElem& v) { return v.to_string(); }
inline std::string show(const CanonicalForm& v) { return v.to_string(); }

inline std::string show_units(const std::vector<FFUnit>& us) {
  std::string s = "[";
  for (size_t i = 0; i < us.size(); ++i) s += (i ? "," : "") + unit_to_string(us[i]);
  return s + "]";
}
inline std::string show_units(const std::vector<RatUnit>& us) {
  std::string s = "[";
  for (size_t i = 0; i < us.size(); ++i) s += (i ? "," : "") + unit_to_string(us[i]);
  return s + "]";
}

template <class U>
std::string show(const TermList<U>& x) {
  std::string s;
  for (const Term<U>& t : x) {
    s += (t.c < 0 ? " - " : (s.empty() ? "" : " + "));
    int64_t c = t.c < 0 ? -t.c : t.c;
    if (c != 1) s += std::to_string(c) + "*";
    if (t.m.d > 0) s += t.m.d == 1 ? "eta*" : "eta^" + std::to_string(t.m.d) + "*";
    s += show_units(t.m.units);
  }
  return s.empty() ? "0" : s;
}

// Monic irreducibles used to build rational units: t, every other linear
// one, and a few of degree 2 and 3 so that residue fields F_{q^2} and
// F_{q^3} occur.
std::vector<Poly> place_pool(const FiniteField& F);

template <class U>
class Sampler {
 public:
  Sampler(const FiniteField& F, Rng& rng) : F_(F), rng_(rng) {
    if constexpr (std::is_same_v<U, RatUnit>) pool_ = place_pool(F);
  }

  const FiniteField& field() const { return F_; }
  Rng& rng() { return rng_; }
  const std::vector<Poly>& pool() const { return pool_; }

  FFUnit constant() { return FFUnit{&F_, static_cast<int64_t>(rng_.below(static_cast<uint64_t>(F_.order_units())))}; }

  U unit() {
    if constexpr (std::is_same_v<U, FFUnit>) {
      return constant();
    } else {
      return rat_unit(nullptr);
    }
  }

  U unit_not_one() {
    for (;;) {
      U u = unit();
      if (!unit_is_one(u)) return u;
    }
  }

  // A rational unit with no factor p (a unit at the place p).
  RatUnit unit_avoiding(const Poly& p) { return rat_unit(&p); }

  std::vector<U> tuple(int n) {
    std::vector<U> v;
    for (int i = 0; i < n; ++i) v.push_back(unit());
    return v;
  }

  Presentation<U> presentation(int n, int r, int s) {
    Presentation<U> x;
    x.field = &F_;
    x.n = n;
    std::vector<int> signs;
    for (int i = 0; i < r; ++i) signs.push_back(1);
    for (int i = 0; i < s; ++i) signs.push_back(-1);
    // Interleave signs in a random order.
    for (size_t i = signs.size(); i > 1; --i) std::swap(signs[i - 1], signs[rng_.below(i)]);
    for (int sg : signs) x.add(sg, tuple(n));
    return x;
  }

  Presentation<U> presentation(int n, int max_entries) {
    int r = static_cast<int>(rng_.below(static_cast<uint64_t>(max_entries) + 1));
    int s = static_cast<int>(rng_.below(static_cast<uint64_t>(max_entries) + 1));
    return presentation(n, r, s);
  }

  // Random homogeneous expression of degree n with eta powers <= d_max.
  SymExpr<U> expr(int n, int terms, int d_max) {
    SymExpr<U> x(F_);
    for (int i = 0; i < terms; ++i) {
      int lo = std::max(0, -n);
      int d = static_cast<int>(rng_.range(lo, std::max(lo, d_max)));
      int len = n + d;
      int64_t c = rng_.coin() ? 1 : -1;
      if (rng_.below(4) == 0) c *= 2;
      x.add_term(Monomial<U>{d, tuple(len)}, c);
    }
    return x;
  }

  // A unit a != 1 for which every place of 1 - a has a residue field within
  // the size bound.
  U steinberg_unit() {
    for (;;) {
      U a = unit_not_one();
      if (residues_fit(a.one_minus())) return a;
    }
  }

  UnitSampler<U> unit_sampler() {
    return [this](bool exclude_one) { return exclude_one ? steinberg_unit() : unit(); };
  }

  static bool residues_fit(const U& u) {
    if constexpr (std::is_same_v<U, RatUnit>) {
      const FiniteField& F = *u.field();
      for (auto& [g, e] : u.factors()) {
        double size = std::pow(static_cast<double>(F.q()), g.degree());
        if (size > static_cast<double>(field_size_bound())) return false;
      }
    }
    return true;
  }

 private:
  RatUnit rat_unit(const Poly* avoid) {
    std::map<Poly, int> f;
    int k = static_cast<int>(rng_.below(3));
    for (int i = 0; i < k; ++i) {
      const Poly& p = pool_[rng_.below(pool_.size())];
      if (avoid && p == *avoid) continue;
      int e = static_cast<int>(rng_.range(1, 2)) * (rng_.coin() ? 1 : -1);
      f[p] += e;
      if (f[p] == 0) f.erase(p);
    }
    return RatUnit(constant(), f);
  }

  const FiniteField& F_;
  Rng& rng_;
  std::vector<Poly> pool_;
};

// Random element of the given theory and degree over F_q subject to a
// constraint (box 2 for the integer part in degree 0).
ThElem random_element(const FiniteField& F, Theory th, int degree, Constraint c, int n, Rng& rng);

// Random sequence admissible for the (source, target) row.
OpSequence random_admissible(const FiniteField& F, Theory source, Theory target, int n, int m, int L, Rng& rng);

template <class U>
TermList<U> concat(TermList<U> a, const TermList<U>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

template <class U>
TermList<U> single(int sign, std::vector<U> units, int d = 0) {
  return {Term<U>{Monomial<U>{d, std::move(units)}, sign}};
}

// Number of units in the field, for exhaustive-or-sampled decisions.
inline int64_t unit_count(const FiniteField& F) { return F.order_units(); }

Report lemma32(const SuiteConfig& c);
Report relations34(const SuiteConfig& c);
Report lambda_wd(const SuiteConfig& c);
Report prop64(const SuiteConfig& c);
Report shift73(const SuiteConfig& c);
Report lemma75(const SuiteConfig& c);
Report prop83(const SuiteConfig& c);
Report thm84(const SuiteConfig& c);
Report seq37(const SuiteConfig& c);
Report prop36(const SuiteConfig& c);
Report lemma91(const SuiteConfig& c);
Report lemma93(const SuiteConfig& c);
Report table1(const SuiteConfig& c);

}  // namespace mwk::suites
