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

#include "mwk/model.hpp"

#include <algorithm>
#include <map>

namespace mwk {
namespace {

int minus_one_class(const FiniteField& F) { return F.minus_one_is_square() ? 0 : 1; }

int64_t floor_div2(int64_t r) { return r >= 0 ? r / 2 : -((-r + 1) / 2); }

}  // namespace

GWElem gw_add(const GWElem& a, const GWElem& b) {
  return {checked_add(a.rank, b.rank), (a.disc + b.disc) & 1};
}

GWElem gw_mul(const GWElem& a, const GWElem& b) {
  int64_t d = (mod_floor(b.rank, 2) * a.disc + mod_floor(a.rank, 2) * b.disc) & 1;
  return {checked_mul(a.rank, b.rank), static_cast<int>(d)};
}

GWElem gw_neg(const GWElem& a) { return {checked_mul(a.rank, -1), a.disc}; }

WElem w_reduce(const GWElem& a, int s) {
  int64_t k = floor_div2(a.rank);
  int64_t r = a.rank - 2 * k;
  int d = static_cast<int>(mod_floor(a.disc + k * s, 2));
  return {static_cast<int>(r), d};
}

ModelElem ModelElem::make(const FiniteField& F, int n, int64_t milnor, WElem witt) {
  ModelElem x;
  x.field = &F;
  x.degree = n;
  if (n >= 2) return x;
  x.witt = w_reduce({witt.rank, witt.disc}, minus_one_class(F));
  if (n == 1) x.milnor = mod_floor(milnor, F.order_units());
  else if (n == 0) x.milnor = milnor;
  return x;
}

ModelElem ModelElem::zero(const FiniteField& F, int n) { return make(F, n, 0, {}); }

ModelElem ModelElem::integer(const FiniteField& F, int64_t c) { return from_gw(F, {c, 0}); }

ModelElem ModelElem::bracket(const FFUnit& a) {
  return make(*a.field, 1, a.e, {0, static_cast<int>(a.e & 1)});
}

ModelElem ModelElem::eta(const FiniteField& F) { return make(F, -1, 0, {1, 0}); }

ModelElem ModelElem::angle(const FFUnit& a) { return from_gw(*a.field, {1, static_cast<int>(a.e & 1)}); }

ModelElem ModelElem::h(const FiniteField& F) { return from_gw(F, {2, minus_one_class(F)}); }

ModelElem ModelElem::eps(const FiniteField& F) { return from_gw(F, {-1, minus_one_class(F)}); }

ModelElem ModelElem::from_gw(const FiniteField& F, const GWElem& g) {
  return make(F, 0, g.rank, w_reduce(g, minus_one_class(F)));
}

GWElem ModelElem::to_gw() const {
  if (degree != 0) fail(ErrorCode::DegreeMismatch, "GW form needs degree 0");
  int64_t k = floor_div2(milnor);
  return {milnor, static_cast<int>(mod_floor(witt.disc + k * minus_one_class(*field), 2))};
}

bool ModelElem::compatible() const {
  if (degree >= 2) return milnor == 0 && witt == WElem{};
  if (witt.rank < 0 || witt.rank > 1 || witt.disc < 0 || witt.disc > 1) return false;
  if (degree == 1)
    return milnor >= 0 && milnor < field->order_units() && witt.rank == 0 && witt.disc == (milnor & 1);
  if (degree == 0) return mod_floor(milnor, 2) == witt.rank;
  return milnor == 0;
}

ModelElem ModelElem::operator+(const ModelElem& o) const {
  require_same_field(field, o.field);
  if (degree != o.degree)
    fail(ErrorCode::DegreeMismatch, "adding degrees " + std::to_string(degree) + " and " + std::to_string(o.degree));
  GWElem w = gw_add({witt.rank, witt.disc}, {o.witt.rank, o.witt.disc});
  return make(*field, degree, checked_add(milnor, o.milnor), {static_cast<int>(mod_floor(w.rank, 4)), w.disc});
}

ModelElem ModelElem::operator-() const {
  GWElem w = gw_neg({witt.rank, witt.disc});
  return make(*field, degree, checked_mul(milnor, -1), {static_cast<int>(mod_floor(w.rank, 4)), w.disc});
}

ModelElem ModelElem::times(int64_t k) const {
  GWElem w = gw_mul({witt.rank, witt.disc}, {k, 0});
  int64_t r = mod_floor(w.rank, 4);
  return make(*field, degree, checked_mul(milnor, k), {static_cast<int>(r), w.disc});
}

ModelElem ModelElem::operator*(const ModelElem& o) const {
  require_same_field(field, o.field);
  int n = degree + o.degree;
  int64_t m = 0;
  const int64_t u = field->order_units();
  if (degree == 0 && o.degree == 0) m = checked_mul(milnor, o.milnor);
  else if (degree == 0 && o.degree == 1) m = mod_floor(mod_floor(milnor, u) * o.milnor, u);
  else if (degree == 1 && o.degree == 0) m = mod_floor(milnor * mod_floor(o.milnor, u), u);
  GWElem w = gw_mul({witt.rank, witt.disc}, {o.witt.rank, o.witt.disc});
  return make(*field, n, m, {static_cast<int>(w.rank), w.disc});
}

ModelElem ModelElem::base_change(const FiniteField& big) const {
  if (&big == field) return *this;
  int64_t L = FFUnit::gen(*field).embed(big).e;
  int par = static_cast<int>(L & 1);
  if (degree >= 2) return zero(big, degree);
  if (degree == 1)
    return make(big, 1, mod_floor(milnor * L, big.order_units()), {0, static_cast<int>((milnor * L) & 1)});
  if (degree == 0) {
    GWElem g = to_gw();
    return from_gw(big, {g.rank, g.disc * par});
  }
  return make(big, degree, 0, {witt.rank, witt.disc * par});
}

std::string ModelElem::to_string() const {
  return "K" + std::to_string(degree) + "(" + (field ? field->name() : std::string("?")) + "){milnor=" +
         std::to_string(milnor) + ", witt=(" + std::to_string(witt.rank) + "," + std::to_string(witt.disc) + ")}";
}

ModelElem eval_monomial(const FiniteField& F, const Monomial<FFUnit>& m) {
  ModelElem x = ModelElem::integer(F, 1);
  for (int i = 0; i < m.d; ++i) x = x * ModelElem::eta(F);
  for (const FFUnit& u : m.units) {
    require_same_field(&F, u.field);
    x = x * ModelElem::bracket(u);
  }
  return x;
}

ModelElem eval_model(const FFExpr& x, int degree_if_empty) {
  if (!x.field()) fail(ErrorCode::FieldMismatch, "expression has no field");
  const FiniteField& F = *x.field();
  int n = x.homogeneous_degree(degree_if_empty);
  ModelElem acc = ModelElem::zero(F, n);
  for (auto& [m, c] : x.terms()) acc = acc + eval_monomial(F, m).times(c);
  return acc;
}

const char* theory_name(Theory t) {
  switch (t) {
    case Theory::MW: return "MW";
    case Theory::Milnor: return "M";
    case Theory::Witt: return "W";
    case Theory::Mod2Milnor: return "M2";
  }
  return "?";
}

Theory parse_theory(const std::string& s) {
  if (s == "MW" || s == "mw") return Theory::MW;
  if (s == "M" || s == "Milnor" || s == "milnor") return Theory::Milnor;
  if (s == "W" || s == "Witt" || s == "witt") return Theory::Witt;
  if (s == "M2" || s == "Mod2Milnor" || s == "mod2") return Theory::Mod2Milnor;
  fail(ErrorCode::InvalidArgument, "unknown theory '" + s + "'");
}

ModelElem project(Theory th, const ModelElem& x) {
  const FiniteField& F = *x.field;
  int n = x.degree;
  switch (th) {
    case Theory::MW:
      return x;
    case Theory::Milnor:
      if (n == 0) return ModelElem::make(F, 0, x.milnor, {static_cast<int>(mod_floor(x.milnor, 2)), 0});
      if (n == 1) return x;
      return ModelElem::zero(F, n);
    case Theory::Witt:
      if (n == 0) return ModelElem::make(F, 0, x.witt.rank, x.witt);
      if (n == 1) {
        int64_t b = x.milnor & 1;
        return ModelElem::make(F, 1, b, {0, static_cast<int>(b)});
      }
      return x;
    case Theory::Mod2Milnor: {
      int64_t b = mod_floor(x.milnor, 2);
      if (n == 0) return ModelElem::make(F, 0, b, {static_cast<int>(b), 0});
      if (n == 1) return ModelElem::make(F, 1, b, {0, static_cast<int>(b)});
      return ModelElem::zero(F, n);
    }
  }
  return x;
}

ThElem ThElem::operator+(const ThElem& o) const {
  if (theory != o.theory) fail(ErrorCode::TheoryMismatch, "adding elements of different theories");
  return of(theory, v + o.v);
}

std::string ThElem::to_string() const { return std::string(theory_name(theory)) + ":" + v.to_string(); }

bool torsion_test(const ThElem& y, TorsionKind kind, int n) {
  const FiniteField& F = *y.v.field;
  switch (kind) {
    case TorsionKind::H:
      return y.lmul(ModelElem::h(F)).is_zero();
    case TorsionKind::Two:
      return (y + y).is_zero();
    case TorsionKind::Tau: {
      if (n < 1) fail(ErrorCode::InvalidArgument, "tau_n needs n >= 1");
      ModelElem tau = ModelElem::integer(F, 1);
      for (int i = 0; i < n - 1; ++i) tau = tau * ModelElem::bracket(FFUnit::minus_one(F));
      return y.lmul(tau).is_zero();
    }
  }
  return false;
}

std::vector<ThElem> enumerate_group(const FiniteField& F, Theory th, int degree, int64_t box) {
  std::vector<ModelElem> raw;
  if (degree >= 2) {
    raw.push_back(ModelElem::zero(F, degree));
  } else if (degree == 1) {
    for (int64_t e = 0; e < F.order_units(); ++e) raw.push_back(ModelElem::bracket({&F, e}));
  } else if (degree == 0) {
    for (int64_t m = -box; m <= box; ++m)
      for (int d = 0; d < 2; ++d) raw.push_back(ModelElem::make(F, 0, m, {static_cast<int>(mod_floor(m, 2)), d}));
  } else {
    for (int r = 0; r < 2; ++r)
      for (int d = 0; d < 2; ++d) raw.push_back(ModelElem::make(F, degree, 0, {r, d}));
  }
  std::vector<ThElem> out;
  for (const ModelElem& x : raw) {
    ThElem y = ThElem::of(th, x);
    if (std::find(out.begin(), out.end(), y) == out.end()) out.push_back(y);
  }
  return out;
}

std::vector<int64_t> group_structure_model(const FiniteField& F, int n) {
  // Torsion subgroup, enumerated, plus the free rank.
  std::vector<ModelElem> T;
  int free_rank = 0;
  if (n == 0) {
    free_rank = 1;
    for (int d = 0; d < 2; ++d) T.push_back(ModelElem::make(F, 0, 0, {0, d}));
  } else {
    for (const ThElem& y : enumerate_group(F, Theory::MW, n)) T.push_back(y.v);
  }
  auto order_of = [&](const ModelElem& x) {
    int64_t k = 1;
    ModelElem acc = x;
    while (!acc.is_zero()) {
      acc = acc + x;
      ++k;
    }
    return k;
  };
  std::map<int64_t, std::map<int, int64_t>> count;  // prime -> exponent -> #elements of order dividing p^e
  int64_t N = static_cast<int64_t>(T.size());
  std::vector<int64_t> primes;
  for (int64_t p = 2, m = N; m > 1; ++p) {
    if (m % p == 0) {
      primes.push_back(p);
      while (m % p == 0) m /= p;
    }
  }
  std::vector<int64_t> orders;
  for (const ModelElem& x : T) orders.push_back(order_of(x));
  std::map<int64_t, std::vector<int>> exps;  // prime -> cyclic factor exponents
  for (int64_t p : primes) {
    std::vector<int64_t> sizes = {1};
    int64_t pe = 1;
    while (true) {
      pe *= p;
      int64_t c = 0;
      for (int64_t o : orders)
        if (pe % o == 0) ++c;
      sizes.push_back(c);
      if (c == sizes[sizes.size() - 2]) break;
    }
    // #cyclic factors of order >= p^k is log_p(|G[p^k]| / |G[p^{k-1}]|).
    std::vector<int> ge;
    for (size_t k = 1; k < sizes.size(); ++k) {
      int64_t ratio = sizes[k] / sizes[k - 1];
      int c = 0;
      while (ratio > 1) {
        ratio /= p;
        ++c;
      }
      ge.push_back(c);
    }
    std::vector<int> e;
    for (size_t k = 0; k < ge.size(); ++k) {
      int next = k + 1 < ge.size() ? ge[k + 1] : 0;
      for (int i = 0; i < ge[k] - next; ++i) e.push_back(static_cast<int>(k) + 1);
    }
    std::sort(e.rbegin(), e.rend());
    exps[p] = e;
  }
  size_t len = 0;
  for (auto& [p, e] : exps) len = std::max(len, e.size());
  std::vector<int64_t> out(len, 1);
  for (auto& [p, e] : exps)
    for (size_t i = 0; i < e.size(); ++i)
      for (int k = 0; k < e[i]; ++k) out[i] *= p;
  std::sort(out.begin(), out.end());
  for (int i = 0; i < free_rank; ++i) out.push_back(0);
  return out;
}

}  // namespace mwk
