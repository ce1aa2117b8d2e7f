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

#include <functional>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "mwk/field.hpp"
#include "mwk/ratfunc.hpp"

namespace mwk {

// Unit traits used by the symbolic layer: the constant field a unit lives
// over and the distinguished units 1 and -1.
inline const FiniteField& base_field_of(const FFUnit& u) { return *u.field; }
inline const FiniteField& base_field_of(const RatUnit& u) { return *u.field(); }

template <class U> U unit_one(const FiniteField& F);
template <> inline FFUnit unit_one<FFUnit>(const FiniteField& F) { return FFUnit::one(F); }
template <> inline RatUnit unit_one<RatUnit>(const FiniteField& F) { return RatUnit::one(F); }
template <class U> U unit_minus_one(const FiniteField& F);
template <> inline FFUnit unit_minus_one<FFUnit>(const FiniteField& F) { return FFUnit::minus_one(F); }
template <> inline RatUnit unit_minus_one<RatUnit>(const FiniteField& F) { return RatUnit::minus_one(F); }

inline bool unit_is_one(const FFUnit& u) { return u.is_one(); }
inline bool unit_is_one(const RatUnit& u) { return u.is_one(); }

// Monomial eta^d [a_1, ..., a_r].
template <class U>
struct Monomial {
  int d = 0;
  std::vector<U> units;

  int degree() const { return static_cast<int>(units.size()) - d; }
  bool operator==(const Monomial& o) const { return d == o.d && units == o.units; }
  // Larger eta power first, then the unit lists lexicographically.
  bool operator<(const Monomial& o) const {
    if (d != o.d) return d > o.d;
    return units < o.units;
  }
};

// Exact Z-linear combination of monomials in the free graded ring
// generated by eta and the symbols [a].  Unit order inside a monomial is
// significant; no relation is ever applied here.
template <class U>
class SymExpr {
 public:
  using Unit = U;
  using Term = std::pair<Monomial<U>, int64_t>;

  SymExpr() = default;
  explicit SymExpr(const FiniteField& F) : F_(&F) {}

  static SymExpr integer(const FiniteField& F, int64_t c) {
    SymExpr x(F);
    x.add_term(Monomial<U>{0, {}}, c);
    return x;
  }
  static SymExpr one(const FiniteField& F) { return integer(F, 1); }
  static SymExpr eta(const FiniteField& F) {
    SymExpr x(F);
    x.add_term(Monomial<U>{1, {}}, 1);
    return x;
  }
  static SymExpr monomial(const FiniteField& F, int d, std::vector<U> units, int64_t c = 1) {
    SymExpr x(F);
    x.add_term(Monomial<U>{d, std::move(units)}, c);
    return x;
  }
  static SymExpr bracket(const U& a) { return monomial(base_field_of(a), 0, {a}); }
  static SymExpr symbol(const FiniteField& F, std::vector<U> units) { return monomial(F, 0, std::move(units)); }
  // <a> = 1 + eta[a]
  static SymExpr angle(const U& a) {
    const FiniteField& F = base_field_of(a);
    return one(F) + monomial(F, 1, {a});
  }
  // h = 2 + eta[-1]
  static SymExpr h_elem(const FiniteField& F) { return integer(F, 2) + monomial(F, 1, {unit_minus_one<U>(F)}); }
  // eps = -1 - eta[-1]
  static SymExpr eps_elem(const FiniteField& F) {
    return integer(F, -1) + monomial(F, 1, {unit_minus_one<U>(F)}, -1);
  }

  const FiniteField* field() const { return F_; }
  const std::map<Monomial<U>, int64_t>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }

  void add_term(const Monomial<U>& m, int64_t c) {
    if (c == 0) return;
    for (const U& u : m.units) require_same_field(F_, &base_field_of(u));
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
      it->second = checked_add(it->second, c);
      if (it->second == 0) terms_.erase(it);
    }
  }

  std::optional<int> degree() const {
    std::optional<int> deg;
    for (auto& [m, c] : terms_) {
      if (deg && *deg != m.degree()) return std::nullopt;
      deg = m.degree();
    }
    return deg;
  }
  // Degree of a homogeneous expression; the empty expression takes `dflt`.
  int homogeneous_degree(int dflt) const {
    if (terms_.empty()) return dflt;
    auto deg = degree();
    if (!deg) fail(ErrorCode::Inhomogeneous, "expression is not homogeneous");
    return *deg;
  }

  SymExpr operator+(const SymExpr& o) const {
    SymExpr r = *this;
    r += o;
    return r;
  }
  SymExpr& operator+=(const SymExpr& o) {
    adopt_field(o);
    for (auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  SymExpr operator-() const {
    SymExpr r(*this);
    for (auto& [m, c] : r.terms_) c = checked_mul(c, -1);
    return r;
  }
  SymExpr operator-(const SymExpr& o) const { return *this + (-o); }
  SymExpr scaled(int64_t k) const {
    SymExpr r(*F_);
    if (k == 0) return r;
    for (auto& [m, c] : terms_) r.terms_.emplace(m, checked_mul(c, k));
    return r;
  }
  SymExpr operator*(const SymExpr& o) const {
    SymExpr r;
    r.F_ = F_ ? F_ : o.F_;
    if (F_ && o.F_) require_same_field(F_, o.F_);
    for (auto& [m1, c1] : terms_) {
      for (auto& [m2, c2] : o.terms_) {
        Monomial<U> m{m1.d + m2.d, m1.units};
        m.units.insert(m.units.end(), m2.units.begin(), m2.units.end());
        r.add_term(m, checked_mul(c1, c2));
      }
    }
    return r;
  }
  SymExpr pow(int k) const {
    if (k < 0) fail(ErrorCode::InvalidArgument, "negative power of an expression");
    SymExpr r = one(*F_);
    for (int i = 0; i < k; ++i) r = r * *this;
    return r;
  }

  bool operator==(const SymExpr& o) const { return terms_ == o.terms_; }

  // Sum of the per-term lengths r + d; used by degree bounds.
  int max_length() const {
    int best = 0;
    for (auto& [m, c] : terms_) best = std::max(best, static_cast<int>(m.units.size()) + m.d);
    return best;
  }

 private:
  void adopt_field(const SymExpr& o) {
    if (!F_) F_ = o.F_;
    else if (o.F_) require_same_field(F_, o.F_);
  }

  const FiniteField* F_ = nullptr;
  std::map<Monomial<U>, int64_t> terms_;
};

using FFExpr = SymExpr<FFUnit>;
using RatExpr = SymExpr<RatUnit>;

// [a^e] expanded as sum_{i<e} <(-1)^i>[a], with the eps-twisted version for
// negative e.
template <class U>
SymExpr<U> power_symbol(const U& a, int64_t e) {
  const FiniteField& F = base_field_of(a);
  using X = SymExpr<U>;
  if (e == 0) return X(F);
  int64_t k = e > 0 ? e : -e;
  X s = X::bracket(a).scaled(k) + X::monomial(F, 1, {unit_minus_one<U>(F), a}, k / 2);
  if (e > 0) return s;
  return X::eps_elem(F) * s;
}

// [a] + [b] + eta[a][b]
template <class U>
SymExpr<U> rewrite_mw2(const U& a, const U& b) {
  const FiniteField& F = base_field_of(a);
  using X = SymExpr<U>;
  return X::bracket(a) + X::bracket(b) + X::monomial(F, 1, {a, b});
}

// <a>[b] as [ab] - [a].
template <class U>
SymExpr<U> angle_bracket_rewrite(const U& a, const U& b) {
  using X = SymExpr<U>;
  return X::bracket(a * b) - X::bracket(a);
}

// Embedding of constant expressions into the rational function field.
inline RatExpr to_rational(const FFExpr& x) {
  RatExpr r(*x.field());
  for (auto& [m, c] : x.terms()) {
    Monomial<RatUnit> mm{m.d, {}};
    for (const FFUnit& u : m.units) mm.units.emplace_back(u);
    r.add_term(mm, c);
  }
  return r;
}

// Relation generators of degree n in the standard presentation, restricted
// to generators all of whose terms have eta power <= d_max.
enum class RelationKind { Steinberg, TwistedTensor, Witt };

template <class U>
struct RelationInstance {
  RelationKind kind;
  SymExpr<U> expr;
};

// Unit supplier for sampled generation: returns a unit, and for Steinberg
// instances the sampler is asked for a != 1.
template <class U>
using UnitSampler = std::function<U(bool exclude_one)>;

// One generator of each requested kind with sampled entries.
template <class U>
SymExpr<U> steinberg_generator(const FiniteField& F, int n, int d, size_t pos, const UnitSampler<U>& sample) {
  int r = d + n;
  if (r < 2) fail(ErrorCode::InvalidArgument, "Steinberg generator needs at least two entries");
  std::vector<U> units;
  for (int i = 0; i < r; ++i) units.push_back(sample(false));
  U a = sample(true);
  units[pos] = a;
  units[pos + 1] = a.one_minus();
  return SymExpr<U>::monomial(F, d, units);
}

// eta^d[.., b b', ..] - eta^d[.., b, ..] - eta^d[.., b', ..] - eta^{d+1}[.., b, b', ..]
template <class U>
SymExpr<U> twisted_tensor_generator(const FiniteField& F, int d, const std::vector<U>& ctx, size_t pos,
                                    const U& b, const U& b2) {
  using X = SymExpr<U>;
  auto with = [&](std::vector<U> ins) {
    std::vector<U> u(ctx.begin(), ctx.begin() + static_cast<long>(pos));
    u.insert(u.end(), ins.begin(), ins.end());
    u.insert(u.end(), ctx.begin() + static_cast<long>(pos), ctx.end());
    return u;
  };
  return X::monomial(F, d, with({b * b2})) - X::monomial(F, d, with({b})) - X::monomial(F, d, with({b2})) -
         X::monomial(F, d + 1, with({b, b2}));
}

// 2 eta^{d+1}[ctx] + eta^{d+2}[ctx with -1 inserted at pos]
template <class U>
SymExpr<U> witt_generator(const FiniteField& F, int d, const std::vector<U>& ctx, size_t pos) {
  using X = SymExpr<U>;
  std::vector<U> u(ctx.begin(), ctx.begin() + static_cast<long>(pos));
  u.push_back(unit_minus_one<U>(F));
  u.insert(u.end(), ctx.begin() + static_cast<long>(pos), ctx.end());
  return X::monomial(F, d + 1, ctx, 2) + X::monomial(F, d + 2, u);
}

// Sampled stream of `count` generators, cycling through the kinds that
// exist for (n, d_max).  `below(k)` returns a uniform integer in [0, k).
template <class U>
std::vector<RelationInstance<U>> relation_generators(const FiniteField& F, int n, int d_max, size_t count,
                                                     const UnitSampler<U>& sample,
                                                     const std::function<uint64_t(uint64_t)>& below) {
  if (d_max < 0) fail(ErrorCode::InvalidArgument, "negative eta bound");
  // Admissible eta levels for each kind.
  std::vector<int> st, tt, wi;
  for (int d = 0; d <= d_max; ++d) {
    if (d + n >= 2) st.push_back(d);
    if (d + 1 <= d_max && d + n >= 1) tt.push_back(d);
    if (d + 2 <= d_max && d + n + 1 >= 0) wi.push_back(d);
  }
  std::vector<RelationKind> kinds;
  if (!st.empty()) kinds.push_back(RelationKind::Steinberg);
  if (!tt.empty()) kinds.push_back(RelationKind::TwistedTensor);
  if (!wi.empty()) kinds.push_back(RelationKind::Witt);
  std::vector<RelationInstance<U>> out;
  if (kinds.empty()) return out;
  auto pick = [&](const std::vector<int>& v) { return v[below(v.size())]; };
  while (out.size() < count) {
    RelationKind kind = kinds[out.size() % kinds.size()];
    if (kind == RelationKind::Steinberg) {
      int d = pick(st);
      size_t pos = below(static_cast<uint64_t>(d + n - 1));
      out.push_back({kind, steinberg_generator<U>(F, n, d, pos, sample)});
    } else if (kind == RelationKind::TwistedTensor) {
      int d = pick(tt);
      int r = d + n;
      std::vector<U> ctx;
      for (int i = 0; i + 1 < r; ++i) ctx.push_back(sample(false));
      size_t pos = below(static_cast<uint64_t>(r));
      U b = sample(false), b2 = sample(false);
      out.push_back({kind, twisted_tensor_generator<U>(F, d, ctx, pos, b, b2)});
    } else {
      int d = pick(wi);
      int len = d + n + 1;
      std::vector<U> ctx;
      for (int i = 0; i < len; ++i) ctx.push_back(sample(false));
      size_t pos = below(static_cast<uint64_t>(len) + 1);
      out.push_back({kind, witt_generator<U>(F, d, ctx, pos)});
    }
  }
  return out;
}

// Every generator over a finite field with eta power <= d_max; `visit`
// receives each one.  Fails with DegreeBound when the count would exceed
// `bound`.
void for_each_relation_generator(const FiniteField& F, int n, int d_max,
                                 const std::function<void(RelationKind, const FFExpr&)>& visit,
                                 int64_t bound = 2000000);

}  // namespace mwk
