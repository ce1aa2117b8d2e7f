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

#include "mwk/ratfunc.hpp"

#include <memory>
#include <mutex>

namespace mwk {

RatUnit::RatUnit(FFUnit c, std::map<Poly, int> factors) : c_(c) {
  for (auto& [f, e] : factors) {
    if (e == 0) continue;
    require_same_field(c.field, f.field());
    if (!f.is_monic() || f.degree() < 1) fail(ErrorCode::InvalidArgument, "factor must be monic nonconstant");
    f_.emplace(f, e);
  }
}

RatUnit RatUnit::t(const FiniteField& F) { return RatUnit(FFUnit::one(F), {{Poly::t(F), 1}}); }

RatUnit RatUnit::from_polys(const Poly& num, const Poly& den) {
  if (num.is_zero() || den.is_zero()) fail(ErrorCode::NotAUnit, "zero is not a unit of F(t)");
  Factorization a = poly_factor(num), b = poly_factor(den);
  std::map<Poly, int> f = a.factors;
  for (auto& [g, e] : b.factors) f[g] -= e;
  return RatUnit(a.lead * b.lead.inverse(), std::move(f));
}

RatUnit RatUnit::from_poly(const Poly& p) { return from_polys(p, Poly::constant(*p.field(), 1)); }

RatUnit RatUnit::operator*(const RatUnit& o) const {
  std::map<Poly, int> f = f_;
  for (auto& [g, e] : o.f_) f[g] += e;
  return RatUnit(c_ * o.c_, std::move(f));
}

RatUnit RatUnit::inverse() const { return pow(-1); }

RatUnit RatUnit::pow(int64_t k) const {
  std::map<Poly, int> f;
  for (auto& [g, e] : f_) f[g] = static_cast<int>(checked_mul(e, k));
  return RatUnit(c_.pow(k), std::move(f));
}

Poly RatUnit::numerator() const {
  Poly r = Poly::constant(*field(), c_.elem());
  for (auto& [g, e] : f_)
    if (e > 0) r = r * g.pow(e);
  return r;
}

Poly RatUnit::denominator() const {
  Poly r = Poly::constant(*field(), 1);
  for (auto& [g, e] : f_)
    if (e < 0) r = r * g.pow(-e);
  return r;
}

RatUnit RatUnit::one_minus() const {
  if (is_constant()) return RatUnit(c_.one_minus());
  Poly n = numerator(), d = denominator();
  Poly diff = d - n;
  if (diff.is_zero()) fail(ErrorCode::NotAUnit, "1 - 1 is not a unit");
  return from_polys(diff, d);
}

int RatUnit::degree() const {
  int s = 0;
  for (auto& [g, e] : f_) s += e * g.degree();
  return s;
}

Place Place::finite(const Poly& p) {
  if (!p.is_monic() || !is_irreducible(p)) fail(ErrorCode::InvalidArgument, "place must be monic irreducible");
  return Place{false, p};
}

int valuation(const RatUnit& a, const Place& pl) {
  if (pl.infinite) return -a.degree();
  auto it = a.factors().find(pl.p);
  return it == a.factors().end() ? 0 : it->second;
}

RatUnit default_uniformizer(const Place& pl, const FiniteField& F) {
  if (pl.infinite) return RatUnit(FFUnit::one(F), {{Poly::t(F), -1}});
  return RatUnit(FFUnit::one(F), {{pl.p, 1}});
}

namespace {
std::mutex& rf_mutex() {
  static std::mutex m;
  return m;
}
}  // namespace

ResidueField residue_field(const Place& pl, const FiniteField& base) {
  if (pl.infinite) return {&base, 0};
  require_same_field(&base, pl.p.field());
  const FiniteField& kappa = FiniteField::get(base.p(), base.d() * pl.p.degree());
  std::lock_guard<std::mutex> lock(rf_mutex());
  static auto* cache = new std::map<std::pair<const FiniteField*, std::vector<Elem>>, Elem>();
  auto key = std::make_pair(&base, pl.p.coeffs());
  auto it = cache->find(key);
  if (it != cache->end()) return {&kappa, it->second};
  Elem theta = 0;
  bool found = false;
  for (int64_t x = 0; x < kappa.q(); ++x) {
    if (pl.p.eval_in(kappa, static_cast<Elem>(x)) == 0) {
      theta = static_cast<Elem>(x);
      found = true;
      break;
    }
  }
  if (!found) fail(ErrorCode::InvalidArgument, "place polynomial has no root in its residue field");
  cache->emplace(key, theta);
  return {&kappa, theta};
}

FFUnit reduce_unit(const RatUnit& u, const Place& pl, const ResidueField& rf) {
  if (valuation(u, pl) != 0)
    fail(ErrorCode::NotRegularAtPlace, "unit has nonzero valuation at " + pl.to_string());
  if (pl.infinite) return u.constant();
  const FiniteField& K = *rf.kappa;
  int64_t lg = K.log(embedding(*u.field(), K)[u.constant().elem()]);
  for (auto& [g, e] : u.factors()) {
    Elem v = g.eval_in(K, rf.theta);
    lg += e * K.log(v);
  }
  return {&K, mod_floor(lg, K.order_units())};
}

std::set<Poly> support(const std::vector<RatUnit>& units) {
  std::set<Poly> out;
  for (const RatUnit& u : units)
    for (auto& [g, e] : u.factors()) out.insert(g);
  return out;
}

}  // namespace mwk
