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

#include "mwk/valuation.hpp"

#include <set>

#include "mwk/parse.hpp"

namespace mwk {

PlaceContext::PlaceContext(const FiniteField& F, const Place& pl, std::optional<RatUnit> uniformizer)
    : F_(&F), pl_(pl), pi_(uniformizer ? *uniformizer : default_uniformizer(pl, F)) {
  require_same_field(&F, pi_.field());
  if (valuation(pi_, pl_) != 1)
    fail(ErrorCode::NotAUniformizer, unit_to_string(pi_) + " is not a uniformizer at " + pl_.to_string());
  rf_ = residue_field(pl_, F);
  if (pl_.infinite) {
    log_w_ = pi_.constant().e;
  } else {
    RatUnit w = pi_ * RatUnit(FFUnit::one(F), {{pl_.p, -1}});
    log_w_ = reduce_unit(w, pl_, rf_).e;
  }
}

std::pair<int, FFUnit> PlaceContext::split(const RatUnit& a) const {
  require_same_field(F_, a.field());
  const FiniteField& K = *rf_.kappa;
  int e = valuation(a, pl_);
  if (pl_.infinite) return {e, FFUnit{F_, mod_floor(a.constant().e - e * log_w_, F_->order_units())}};
  int64_t lg = a.constant().embed(K).e;
  for (auto& [g, k] : a.factors()) {
    if (g == pl_.p) continue;
    auto it = log_cache_.find(g);
    if (it == log_cache_.end()) it = log_cache_.emplace(g, K.log(g.eval_in(K, rf_.theta))).first;
    lg += k * it->second;
  }
  lg -= static_cast<int64_t>(e) * log_w_;
  return {e, FFUnit{&K, mod_floor(lg, K.order_units())}};
}

namespace {

// Arithmetic needed by the local decomposition, for model values and for
// symbolic values over kappa.
struct ModelOps {
  using V = ModelElem;
  const FiniteField& K;
  V zero(int n) const { return ModelElem::zero(K, n); }
  V integer(int64_t c) const { return ModelElem::integer(K, c); }
  V bracket(const FFUnit& u) const { return ModelElem::bracket(u); }
  V eta() const { return ModelElem::eta(K); }
  V eps() const { return ModelElem::eps(K); }
  V angle(const FFUnit& u) const { return ModelElem::angle(u); }
  static V scaled(const V& v, int64_t c) { return v.times(c); }
};

struct SymOps {
  using V = FFExpr;
  const FiniteField& K;
  V zero(int) const { return FFExpr(K); }
  V integer(int64_t c) const { return FFExpr::integer(K, c); }
  V bracket(const FFUnit& u) const { return FFExpr::bracket(u); }
  V eta() const { return FFExpr::eta(K); }
  V eps() const { return FFExpr::eps_elem(K); }
  V angle(const FFUnit& u) const { return FFExpr::angle(u); }
  static V scaled(const V& v, int64_t c) { return v.scaled(c); }
};

template <class Ops>
struct Pair {
  typename Ops::V a, b;
};

// Decomposition of one monomial by left multiplication, right to left.
template <class Ops>
Pair<Ops> local_monomial(const Ops& ops, const Monomial<RatUnit>& m, const PlaceContext& ctx) {
  using V = typename Ops::V;
  const FiniteField& K = ctx.kappa();
  const FFUnit m1 = FFUnit::minus_one(K);
  const V br_m1 = ops.bracket(m1);
  const V eps = ops.eps();
  const V eta = ops.eta();
  int deg = 0;
  Pair<Ops> cur{ops.integer(1), ops.zero(-1)};
  auto L_pi = [&](const Pair<Ops>& p, int k) {
    return Pair<Ops>{ops.zero(k + 1), p.a + br_m1 * p.b};
  };
  for (size_t i = m.units.size(); i-- > 0;) {
    auto [e, ub] = ctx.split(m.units[i]);
    const V bu = ops.bracket(ub);
    Pair<Ops> Lu{bu * cur.a, eps * bu * cur.b};
    Pair<Ops> next = Lu;
    if (e != 0) {
      int64_t k = e > 0 ? e : -e;
      V c = ops.integer((k + 1) / 2) + Ops::scaled(ops.angle(m1), k / 2);
      if (e < 0) c = eps * c;
      Pair<Ops> Lp = L_pi(cur, deg);
      Pair<Ops> Lpu = L_pi(Lu, deg + 1);
      next.a = next.a + c * Lp.a + eta * c * Lpu.a;
      next.b = next.b + c * Lp.b + eta * c * Lpu.b;
    }
    cur = next;
    ++deg;
  }
  for (int j = 0; j < m.d; ++j) {
    cur.a = eta * cur.a;
    cur.b = eta * cur.b;
  }
  return cur;
}

}  // namespace

LocalParts local_parts(const RatExpr& x, const PlaceContext& ctx, int degree_if_empty) {
  const FiniteField& K = ctx.kappa();
  int n = x.homogeneous_degree(degree_if_empty);
  ModelOps ops{K};
  LocalParts out{ModelElem::zero(K, n), ModelElem::zero(K, n - 1)};
  for (auto& [m, c] : x.terms()) {
    Pair<ModelOps> p = local_monomial(ops, m, ctx);
    out.special = out.special + p.a.times(c);
    out.residue = out.residue + p.b.times(c);
  }
  return out;
}

namespace {
Pair<SymOps> symbolic_parts(const RatExpr& x, const PlaceContext& ctx, int length_bound) {
  const FiniteField& K = ctx.kappa();
  SymOps ops{K};
  Pair<SymOps> out{FFExpr(K), FFExpr(K)};
  for (auto& [m, c] : x.terms()) {
    if (static_cast<int>(m.units.size()) + m.d > length_bound)
      fail(ErrorCode::DegreeBound, "term longer than the symbolic residue bound");
    Pair<SymOps> p = local_monomial(ops, m, ctx);
    out.a += p.a.scaled(c);
    out.b += p.b.scaled(c);
  }
  return out;
}
}  // namespace

FFExpr residue(const RatExpr& x, const PlaceContext& ctx, int length_bound) {
  return symbolic_parts(x, ctx, length_bound).b;
}

FFExpr specialize(const RatExpr& x, const PlaceContext& ctx, int length_bound) {
  return symbolic_parts(x, ctx, length_bound).a;
}

CanonicalForm CanonicalForm::zero(const FiniteField& F, int n, Theory th) {
  CanonicalForm z;
  z.theory = th;
  z.field = &F;
  z.degree = n;
  z.base = ModelElem::zero(F, n);
  return z;
}

CanonicalForm CanonicalForm::operator+(const CanonicalForm& o) const {
  if (theory != o.theory) fail(ErrorCode::TheoryMismatch, "adding canonical forms of different theories");
  if (degree != o.degree) fail(ErrorCode::DegreeMismatch, "adding canonical forms of different degrees");
  CanonicalForm r = *this;
  r.base = project(theory, base + o.base);
  for (auto& [p, v] : o.residues) {
    auto it = r.residues.find(p);
    if (it == r.residues.end()) {
      r.residues.emplace(p, v);
    } else {
      it->second = project(theory, it->second + v);
      if (it->second.is_zero()) r.residues.erase(it);
    }
  }
  return r;
}

CanonicalForm CanonicalForm::operator-() const {
  CanonicalForm r = *this;
  r.base = project(theory, -base);
  for (auto& [p, v] : r.residues) v = project(theory, -v);
  return r;
}

CanonicalForm CanonicalForm::rmul(const ModelElem& y) const {
  require_same_field(field, y.field);
  CanonicalForm r = zero(*field, degree + y.degree, theory);
  r.base = project(theory, base * y);
  for (auto& [p, v] : residues) {
    ModelElem w = project(theory, v * y.base_change(*v.field));
    if (!w.is_zero()) r.residues.emplace(p, w);
  }
  return r;
}

CanonicalForm CanonicalForm::projected(Theory th) const {
  CanonicalForm r = zero(*field, degree, th);
  r.base = project(th, base);
  for (auto& [p, v] : residues) {
    ModelElem w = project(th, v);
    if (!w.is_zero()) r.residues.emplace(p, w);
  }
  return r;
}

bool CanonicalForm::operator==(const CanonicalForm& o) const {
  return theory == o.theory && field == o.field && degree == o.degree && base == o.base && residues == o.residues;
}

std::string CanonicalForm::to_string() const {
  std::string s = std::string(theory_name(theory)) + "_" + std::to_string(degree) + "{base=" + base.to_string();
  for (auto& [p, v] : residues) s += ", d[" + p.to_string() + "]=" + v.to_string();
  return s + "}";
}

CanonicalForm canonical_form(const RatExpr& x, int degree_if_empty, Theory th) {
  if (!x.field()) fail(ErrorCode::FieldMismatch, "expression has no field");
  const FiniteField& F = *x.field();
  int n = x.homogeneous_degree(degree_if_empty);
  CanonicalForm cf = CanonicalForm::zero(F, n, th);
  // Base and all residue groups vanish from degree 3 on.
  if (n >= 3) return cf;
  std::set<Poly> places;
  places.insert(Poly::t(F));
  for (auto& [m, c] : x.terms())
    for (const RatUnit& u : m.units)
      for (auto& [g, e] : u.factors()) places.insert(g);
  for (const Poly& p : places) {
    PlaceContext ctx(F, Place{false, p});
    LocalParts lp = local_parts(x, ctx, n);
    if (p == Poly::t(F)) cf.base = project(th, lp.special);
    ModelElem r = project(th, lp.residue);
    if (!r.is_zero()) cf.residues.emplace(p, r);
  }
  return cf;
}

bool is_zero(const RatExpr& x, int degree_if_empty) { return canonical_form(x, degree_if_empty).is_zero(); }

bool equal(const RatExpr& x, const RatExpr& y) {
  int n = x.empty() ? y.homogeneous_degree(0) : x.homogeneous_degree(0);
  return is_zero(x - y, n);
}

}  // namespace mwk
