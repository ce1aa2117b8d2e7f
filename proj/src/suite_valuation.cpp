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

#include "suite_util.hpp"

namespace mwk::suites {
namespace {

using X = RatExpr;

std::string where(const PlaceContext& ctx, const X& x) {
  return " at " + ctx.place().to_string() + " (pi=" + unit_to_string(ctx.uniformizer()) + ") for x=" + show(x);
}

int sample_degree(const SuiteConfig& cfg, Rng& rng) { return static_cast<int>(rng.range(-1, std::max(1, cfg.n_max))); }

// A unit of valuation 0 at the place.
RatUnit unit_at(Sampler<RatUnit>& S, const Place& pl) {
  if (!pl.infinite) return S.unit_avoiding(pl.p);
  RatUnit u = S.unit();
  return u * RatUnit::t(S.field()).pow(-u.degree());
}

Place random_place(Sampler<RatUnit>& S, bool with_infinity) {
  const auto& pool = S.pool();
  uint64_t k = S.rng().below(pool.size() + (with_infinity ? 1 : 0));
  return k == pool.size() ? Place::infinity() : Place::finite(pool[k]);
}

}  // namespace

Report seq37(const SuiteConfig& cfg) {
  if (!cfg.field.rational) fail(ErrorCode::InvalidArgument, "seq37 runs over F_q(t)");
  const FiniteField& F = *cfg.field.base;
  Report r;
  Rng rng(cfg.seed);
  Sampler<FFUnit> C(F, rng);
  Sampler<RatUnit> S(F, rng);
  const PlaceContext at_t(F, Place::finite(Poly::t(F)));
  const RatUnit t = RatUnit::t(F);

  for (int64_t i = 0; i < cfg.trials; ++i, ++r.trials) {
    int n = sample_degree(cfg, rng);
    FFExpr c = C.expr(n, 1 + static_cast<int>(rng.below(3)), cfg.d_max);
    X x = to_rational(c);
    ModelElem cv = eval_model(c, n);

    LocalParts lp = local_parts(x, at_t, n);
    r.check(lp.special == cv, [&] { return "s^t(i(x)) != x for x=" + show(c); });
    PlaceContext pc(F, random_place(S, false));
    r.check(local_parts(x, pc, n).residue.is_zero(), [&] { return "residue of a constant is nonzero" + where(pc, x); });

    // Left inverse: the residue at t of [t] x recovers x.
    X tx = X::bracket(t) * x;
    r.check(local_parts(tx, at_t, n + 1).residue == cv, [&] { return "d^t([t] x) != x for x=" + show(c); });

    // Additivity of canonical forms and eta-linearity of residues.
    X y = S.expr(n, 1 + static_cast<int>(rng.below(3)), cfg.d_max);
    X z = S.expr(n, 1 + static_cast<int>(rng.below(3)), cfg.d_max);
    r.check(canonical_form(y + z, n) == canonical_form(y, n) + canonical_form(z, n),
            [&] { return "canonical form not additive for " + show(y) + " and " + show(z); });
    PlaceContext qc(F, random_place(S, true));
    LocalParts py = local_parts(y, qc, n);
    LocalParts pey = local_parts(X::eta(F) * y, qc, n - 1);
    r.check(pey.residue == ModelElem::eta(qc.kappa()) * py.residue,
            [&] { return "residue not eta-linear" + where(qc, y); });

    // Specialization is multiplicative and agrees with <-1> d([-pi] .).
    int n2 = static_cast<int>(rng.range(-1, 1));
    X w = S.expr(n2, 1 + static_cast<int>(rng.below(2)), cfg.d_max);
    LocalParts pw = local_parts(w, qc, n2);
    r.check(local_parts(y * w, qc, n + n2).special == py.special * pw.special,
            [&] { return "specialization not multiplicative" + where(qc, y) + ", y=" + show(w); });
    RatUnit mpi = -qc.uniformizer();
    ModelElem comp =
        ModelElem::angle(FFUnit::minus_one(qc.kappa())) * local_parts(X::bracket(mpi) * y, qc, n + 1).residue;
    r.check(comp == py.special, [&] { return "s != <-1> d([-pi] x)" + where(qc, y); });
  }

  // The canonical form is a complete invariant: [t] is nonzero, i([2]) has
  // empty residues.
  r.check(!is_zero(X::bracket(t), 1), [] { return "[t] reported zero"; });
  return r;
}

Report prop36(const SuiteConfig& cfg) {
  if (!cfg.field.rational) fail(ErrorCode::InvalidArgument, "prop36 runs over F_q(t)");
  const FiniteField& F = *cfg.field.base;
  Report r;
  Rng rng(cfg.seed);
  Sampler<RatUnit> S(F, rng);

  for (int64_t i = 0; i < cfg.trials; ++i, ++r.trials) {
    int n = sample_degree(cfg, rng);
    Place pl = random_place(S, true);
    PlaceContext pc(F, pl);
    RatUnit u = unit_at(S, pl);
    FFUnit ub = pc.split(u).second;
    const FiniteField& K = pc.kappa();
    X x = S.expr(n, 1 + static_cast<int>(rng.below(3)), cfg.d_max);
    LocalParts px = local_parts(x, pc, n);
    ModelElem bu = ModelElem::bracket(ub), au = ModelElem::angle(ub), eps = ModelElem::eps(K);

    LocalParts pux = local_parts(X::bracket(u) * x, pc, n + 1);
    r.check(pux.residue == eps * bu * px.residue, [&] { return "d([u]x) != eps[u]d(x)" + where(pc, x); });
    r.check(pux.special == bu * px.special, [&] { return "s([u]x) != [u]s(x)" + where(pc, x); });

    LocalParts pax = local_parts(X::angle(u) * x, pc, n);
    r.check(pax.residue == au * px.residue, [&] { return "d(<u>x) != <u>d(x)" + where(pc, x); });
    r.check(pax.special == au * px.special, [&] { return "s(<u>x) != <u>s(x)" + where(pc, x); });

    PlaceContext qc(F, pl, u * pc.uniformizer());
    LocalParts qx = local_parts(x, qc, n);
    r.check(qx.residue == au * px.residue, [&] { return "d^{u pi} != <u> d^pi" + where(pc, x); });
    r.check(qx.special == px.special + eps * bu * px.residue,
            [&] { return "s^{u pi} != s^pi + eps[u] d^pi" + where(pc, x); });

    // The symbolic residue agrees with the model one.
    if (x.max_length() <= kSymbolicLengthBound)
      r.check(eval_model(residue(x, pc), n - 1) == px.residue,
              [&] { return "symbolic and model residues differ" + where(pc, x); });
  }

  // d^t and s^t for u = 2, pi = t, x = [t].
  const RatUnit t = RatUnit::t(F);
  const RatUnit two(FFUnit::from_elem(F, F.from_int(2)));
  PlaceContext pt(F, Place::finite(Poly::t(F)));
  PlaceContext p2t(F, Place::finite(Poly::t(F)), two * t);
  LocalParts a = local_parts(X::bracket(t), pt, 1), b = local_parts(X::bracket(t), p2t, 1);
  FFUnit ub = FFUnit::from_elem(F, F.from_int(2));
  r.check(b.special == a.special + ModelElem::eps(F) * ModelElem::bracket(ub) * a.residue,
          [] { return "uniformizer change fails for u=2, x=[t]"; });
  return r;
}

}  // namespace mwk::suites
