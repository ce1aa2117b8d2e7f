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

#include <algorithm>
#include <optional>
#include <vector>

#include "mwk/model.hpp"
#include "mwk/sequences.hpp"
#include "mwk/symbolic.hpp"
#include "mwk/valuation.hpp"

namespace mwk {

// sum_i sign_i [a_{i,1}, ..., a_{i,n}]
template <class U>
struct SignedEntry {
  int sign = 1;
  std::vector<U> units;
};

template <class U>
struct Presentation {
  const FiniteField* field = nullptr;
  int n = 1;
  std::vector<SignedEntry<U>> entries;

  void add(int sign, std::vector<U> units) {
    if (static_cast<int>(units.size()) != n) fail(ErrorCode::DegreeMismatch, "presentation entry of wrong length");
    for (const U& u : units) require_same_field(field, &base_field_of(u));
    entries.push_back({sign, std::move(units)});
  }
  int positive() const {
    return static_cast<int>(std::count_if(entries.begin(), entries.end(), [](auto& e) { return e.sign > 0; }));
  }
  int negative() const { return static_cast<int>(entries.size()) - positive(); }
  SymExpr<U> to_expr() const {
    SymExpr<U> x(*field);
    for (auto& e : entries) x.add_term(Monomial<U>{0, e.units}, e.sign);
    return x;
  }
};

// An ordered list of signed terms; Lambda depends on the order only up to
// the epsilon-commutativity absorbed by its torsion hypothesis.
template <class U>
struct Term {
  Monomial<U> m;
  int64_t c = 1;
};
template <class U>
using TermList = std::vector<Term<U>>;

template <class U>
TermList<U> terms_of(const SymExpr<U>& x) {
  TermList<U> out;
  for (auto& [m, c] : x.terms()) out.push_back({m, c});
  return out;
}

template <class U>
TermList<U> terms_of(const Presentation<U>& x) {
  TermList<U> out;
  for (auto& e : x.entries) out.push_back({Monomial<U>{0, e.units}, e.sign});
  return out;
}

// First degree in which K^MW of the field vanishes: 2 over F_q, 3 over F_q(t).
template <class U>
constexpr int vanishing_degree();
template <>
constexpr int vanishing_degree<FFUnit>() { return 2; }
template <>
constexpr int vanishing_degree<RatUnit>() { return 3; }

struct SeriesOptions {
  int trunc = 8;
  // Skip coefficients whose degree n*l is at least the vanishing degree.
  bool prune = true;
  // Skip the torsion precondition (negative controls only).
  bool unchecked = false;
};

template <class U>
int last_live_index(int n, const SeriesOptions& o) {
  if (!o.prune) return o.trunc;
  int V = vanishing_degree<U>();
  return std::min(o.trunc, (V + n - 1) / n - 1);
}

// Symbolic coefficients of t^0..t^trunc of the generating series; entries
// past the live range are left empty (they vanish in the field).
template <class U>
std::vector<SymExpr<U>> lambda_series(const FiniteField& F, int n, const TermList<U>& x, const SeriesOptions& o,
                                      bool inverse = false) {
  if (n < 1) fail(ErrorCode::InvalidArgument, "source degree must be >= 1");
  int cut = last_live_index<U>(n, o);
  std::vector<SymExpr<U>> S(static_cast<size_t>(o.trunc + 1), SymExpr<U>(F));
  S[0] = SymExpr<U>::one(F);
  const U one = unit_one<U>(F);
  auto mul_factor = [&](const SymExpr<U>& P, int64_t e) {
    if (e > 0) {
      for (int64_t r = 0; r < e; ++r)
        for (int l = cut; l >= 1; --l) S[static_cast<size_t>(l)] += S[static_cast<size_t>(l - 1)] * P;
      return;
    }
    std::vector<SymExpr<U>> Ppow{SymExpr<U>::one(F)};
    for (int j = 1; j <= cut; ++j) Ppow.push_back(Ppow.back() * P.scaled(-1));
    for (int64_t r = 0; r < -e; ++r) {
      for (int l = cut; l >= 1; --l) {
        SymExpr<U> acc = S[static_cast<size_t>(l)];
        for (int j = 1; j <= l; ++j) acc += S[static_cast<size_t>(l - j)] * Ppow[static_cast<size_t>(j)];
        S[static_cast<size_t>(l)] = acc;
      }
    }
  };
  for (const Term<U>& term : x) {
    const int d = term.m.d;
    if (term.m.degree() != n) fail(ErrorCode::Inhomogeneous, "Lambda needs a homogeneous argument of degree n");
    if (d < 0) fail(ErrorCode::InvalidArgument, "negative eta power");
    const auto& a = term.m.units;
    for (uint32_t J = 0; J < (1u << (d + 1)); ++J) {
      U prod = one;
      int size = 0;
      for (int j = 0; j <= d; ++j)
        if (J & (1u << j)) {
          prod = prod * a[static_cast<size_t>(j)];
          ++size;
        }
      if (unit_is_one(prod)) continue;  // [1, ...] = 0
      std::vector<U> units{prod};
      units.insert(units.end(), a.begin() + d + 1, a.end());
      int64_t e = ((d + 1 - size) % 2 == 0 ? 1 : -1) * term.c;
      if (inverse) e = -e;
      mul_factor(SymExpr<U>::symbol(F, std::move(units)), e);
    }
  }
  return S;
}

template <class U>
SymExpr<U> minus_one_power(const FiniteField& F, int k) {
  if (k == 0) return SymExpr<U>::one(F);
  return SymExpr<U>::symbol(F, std::vector<U>(static_cast<size_t>(k), unit_minus_one<U>(F)));
}

inline int64_t binom(int64_t n, int64_t k) {
  if (k < 0 || k > n) return 0;
  int64_t r = 1;
  for (int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// sigma_0 = lambda_0, sigma_l = sum_i C(K, i) [-1]^{n i} lambda_{l-i} with
// K = floor((l-1)/2).
template <class U>
std::vector<SymExpr<U>> sigma_from_lambda(const FiniteField& F, int n, const std::vector<SymExpr<U>>& lam) {
  std::vector<SymExpr<U>> out;
  for (int l = 0; l < static_cast<int>(lam.size()); ++l) {
    if (l == 0) {
      out.push_back(lam[0]);
      continue;
    }
    int K = (l - 1) / 2;
    SymExpr<U> s(F);
    for (int i = 0; i <= K; ++i)
      s += (minus_one_power<U>(F, n * i) * lam[static_cast<size_t>(l - i)]).scaled(binom(K, i));
    out.push_back(s);
  }
  return out;
}

// c_0 = b_0, c_l = (-1)^l sum_{i<l} C(l-1, i) [-1]^{n i} b_{l-i}; turns lambda
// into f and back.
template <class U>
std::vector<SymExpr<U>> convert_lambda_f(const FiniteField& F, int n, const std::vector<SymExpr<U>>& b) {
  std::vector<SymExpr<U>> out;
  for (int l = 0; l < static_cast<int>(b.size()); ++l) {
    if (l == 0) {
      out.push_back(b[0]);
      continue;
    }
    SymExpr<U> s(F);
    for (int i = 0; i <= l - 1; ++i)
      s += (minus_one_power<U>(F, n * i) * b[static_cast<size_t>(l - i)]).scaled(binom(l - 1, i));
    out.push_back(l % 2 == 0 ? s : -s);
  }
  return out;
}

// Values: ThElem over F_q (or an extension), CanonicalForm over F_q(t).
template <class U>
struct Evaluator;

template <>
struct Evaluator<FFUnit> {
  using Value = ThElem;
  static Value eval(const FFExpr& x, int degree, const ThElem& y) {
    ModelElem v = eval_model(x, degree);
    return ThElem::of(y.theory, v * y.v.base_change(*v.field));
  }
  static Value zero(const FiniteField& F, Theory th, int degree) { return ThElem::of(th, ModelElem::zero(F, degree)); }
};

template <>
struct Evaluator<RatUnit> {
  using Value = CanonicalForm;
  static Value eval(const RatExpr& x, int degree, const ThElem& y) {
    require_same_field(x.field(), y.v.field);
    return canonical_form(x, degree, Theory::MW).rmul(y.v).projected(y.theory);
  }
  static Value zero(const FiniteField& F, Theory th, int degree) { return CanonicalForm::zero(F, degree, th); }
};

template <class U>
using Value = typename Evaluator<U>::Value;

inline void require_lambda_torsion(int n, const ThElem& y, const SeriesOptions& o) {
  if (o.unchecked || delta(n) == 0) return;
  if (!torsion_test(y, TorsionKind::H))
    fail(ErrorCode::TorsionViolation, "odd-degree divided powers need an h-torsion coefficient");
}

// Lambda^n(x) * y, coefficients t^0..t^trunc.
template <class U>
std::vector<Value<U>> Lambda_series(const FiniteField& F, int n, const TermList<U>& x, const ThElem& y,
                                    const SeriesOptions& o) {
  require_lambda_torsion(n, y, o);
  auto S = lambda_series<U>(F, n, x, o);
  std::vector<Value<U>> out;
  for (int l = 0; l <= o.trunc; ++l) out.push_back(Evaluator<U>::eval(S[static_cast<size_t>(l)], n * l, y));
  return out;
}

enum class Divided { Lambda, Sigma, F, FDirect };

template <class U>
std::vector<SymExpr<U>> divided_exprs(Divided kind, const FiniteField& F, int n, const TermList<U>& x,
                                      const SeriesOptions& o) {
  switch (kind) {
    case Divided::Lambda: return lambda_series<U>(F, n, x, o);
    case Divided::Sigma: return sigma_from_lambda<U>(F, n, lambda_series<U>(F, n, x, o));
    case Divided::F: return convert_lambda_f<U>(F, n, lambda_series<U>(F, n, x, o));
    case Divided::FDirect: return lambda_series<U>(F, n, x, o, /*inverse=*/true);
  }
  return {};
}

// Coefficient l of the chosen family evaluated at x, times y; `left`
// multiplies on the left before evaluation.
template <class U>
Value<U> divided_eval(Divided kind, const FiniteField& F, int n, int l, const ThElem& y, const TermList<U>& x,
                      const SeriesOptions& base = {}, const std::optional<SymExpr<U>>& left = std::nullopt,
                      int left_degree = 0) {
  require_lambda_torsion(n, y, base);
  SeriesOptions o = base;
  o.trunc = std::max(l, 0);
  auto S = divided_exprs<U>(kind, F, n, x, o);
  SymExpr<U> z = S[static_cast<size_t>(l)];
  if (left) z = *left * z;
  return Evaluator<U>::eval(z, left_degree + n * l, y);
}

template <class U>
Value<U> lambda_eval(const FiniteField& F, int n, int l, const ThElem& y, const Presentation<U>& x,
                     const SeriesOptions& o = {}) {
  return divided_eval<U>(Divided::Lambda, F, n, l, y, terms_of(x), o);
}
template <class U>
Value<U> sigma_eval(const FiniteField& F, int n, int l, const ThElem& y, const Presentation<U>& x,
                    const SeriesOptions& o = {}) {
  return divided_eval<U>(Divided::Sigma, F, n, l, y, terms_of(x), o);
}
template <class U>
Value<U> f_eval(const FiniteField& F, int n, int l, const ThElem& y, const Presentation<U>& x,
                const SeriesOptions& o = {}) {
  return divided_eval<U>(Divided::FDirect, F, n, l, y, terms_of(x), o);
}

// sum_l left * sigma_l(x) * a_l, without admissibility checks; the field of
// x may be an extension of the sequence field over F_q.
template <class U>
Value<U> op_value(const OpSequence& seq, const FiniteField& F, const TermList<U>& x, const SeriesOptions& base = {},
                  const std::optional<SymExpr<U>>& left = std::nullopt, int left_degree = 0) {
  SeriesOptions o = base;
  o.trunc = std::max(seq.length() - 1, 0);
  auto sig = sigma_from_lambda<U>(F, seq.n, lambda_series<U>(F, seq.n, x, o));
  Value<U> acc = Evaluator<U>::zero(F, seq.target, seq.m + left_degree);
  for (int l = 0; l < seq.length(); ++l) {
    const ThElem& a = seq.coeffs[static_cast<size_t>(l)];
    if (a.is_zero()) continue;
    SymExpr<U> z = sig[static_cast<size_t>(l)];
    if (left) z = *left * z;
    acc = acc + Evaluator<U>::eval(z, left_degree + seq.n * l, a);
  }
  return acc;
}

template <class U>
void require_field_over(const FiniteField& F, const OpSequence& seq);
template <>
inline void require_field_over<FFUnit>(const FiniteField& F, const OpSequence& seq) {
  if (F.p() != seq.field->p() || F.d() % seq.field->d() != 0)
    fail(ErrorCode::FieldMismatch, F.name() + " is not an extension of " + seq.field->name());
}
template <>
inline void require_field_over<RatUnit>(const FiniteField& F, const OpSequence& seq) {
  require_same_field(&F, seq.field);
}

template <class U>
Value<U> op_apply(const OpSequence& seq, const Presentation<U>& x, Theory source = Theory::MW,
                  const SeriesOptions& o = {}) {
  if (!admissible(source, seq.target, seq.n, seq.m, seq))
    fail(ErrorCode::NotAdmissible, "sequence violates its operation table row: " + seq.to_string());
  if (x.n != seq.n) fail(ErrorCode::DegreeMismatch, "presentation degree differs from the source degree");
  require_field_over<U>(*x.field, seq);
  return op_value<U>(seq, *x.field, terms_of(x), o);
}

}  // namespace mwk
