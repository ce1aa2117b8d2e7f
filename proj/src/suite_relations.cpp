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

struct Identity {
  const char* name;
  int degree;
  std::function<bool()> holds;
};

// The relation list for one instance (a, b, c).
template <class U>
void relation_instance(Report& r, const FiniteField& F, const U& a, const U& b, const U& c) {
  using X = SymExpr<U>;
  const U one = unit_one<U>(F);
  const U m1 = unit_minus_one<U>(F);
  const X eta = X::eta(F), h = X::h_elem(F), eps = X::eps_elem(F), I = X::one(F);
  auto br = [](const U& u) { return X::bracket(u); };
  auto ang = [](const U& u) { return X::angle(u); };
  auto eq = [&](const X& x, const X& y, int deg) { return [=] { return expr_equal(x, y, deg); }; };
  auto zero = [&](const X& x, int deg) { return [=] { return expr_zero(x, deg); }; };

  std::vector<Identity> ids;
  if (!unit_is_one(a) && Sampler<U>::residues_fit(a.one_minus()))
    ids.push_back({"MW1 [a,1-a]=0", 2, zero(X::symbol(F, {a, a.one_minus()}), 2)});
  ids.push_back({"MW2 [ab]=[a]+[b]+eta[a,b]", 1, eq(br(a * b), rewrite_mw2(a, b), 1)});
  ids.push_back({"MW3 eta[a]=[a]eta", 0, eq(eta * br(a), br(a) * eta, 0)});
  ids.push_back({"MW4 eta(2+eta[-1])=0", -1, zero(eta * (X::integer(F, 2) + eta * br(m1)), -1)});
  ids.push_back({"(i) [1]=0", 1, zero(br(one), 1)});
  ids.push_back({"(i) <1>=1", 0, eq(ang(one), I, 0)});
  ids.push_back({"(i) h=<1>+<-1>", 0, eq(h, ang(one) + ang(m1), 0)});
  ids.push_back({"(i) eta h=0", -1, zero(eta * h, -1)});
  ids.push_back({"(ii) [a][b]=eps[b][a]", 2, eq(br(a) * br(b), eps * br(b) * br(a), 2)});
  {
    X x = X::monomial(F, 1, {a, b}), y = br(c);
    ids.push_back({"(ii) (eta[a,b])[c]=eps[c](eta[a,b])", 1, eq(x * y, eps * y * x, 1)});
    X z = X::symbol(F, {a, b});
    ids.push_back({"(ii) [a,b][c]=[c][a,b]", 3, eq(z * y, y * z, 3)});
    ids.push_back({"(ii) eta x = x eta", 0, eq(eta * y, y * eta, 0)});
  }
  ids.push_back({"(iii) [a,-a]=0", 2, zero(X::symbol(F, {a, a * m1}), 2)});
  ids.push_back({"(iii) [-a,a]=0", 2, zero(X::symbol(F, {a * m1, a}), 2)});
  ids.push_back({"(iv) [a,-1]=[a,a]", 2, eq(X::symbol(F, {a, m1}), X::symbol(F, {a, a}), 2)});
  ids.push_back({"(iv) [a,a]=[-1,a]", 2, eq(X::symbol(F, {a, a}), X::symbol(F, {m1, a}), 2)});
  ids.push_back({"(iv) <a>[a]=<-1>[a]", 1, eq(ang(a) * br(a), ang(m1) * br(a), 1)});
  for (int k : {2, 3, 4, -1, -2, -3}) {
    X rhs(F);
    int kk = k > 0 ? k : -k;
    for (int i = 0; i < kk; ++i) rhs += ang(i % 2 == 0 ? one : m1) * br(a);
    if (k < 0) rhs = eps * rhs;
    static const char* names[] = {"(v) [a^k], k=2", "(v) [a^k], k=3", "(v) [a^k], k=4",
                                  "(v) [a^k], k=-1", "(v) [a^k], k=-2", "(v) [a^k], k=-3"};
    int idx = k > 0 ? k - 2 : 2 - k;
    ids.push_back({names[idx], 1, eq(br(a.pow(k)), rhs, 1)});
    ids.push_back({"(v) power_symbol expansion", 1, eq(br(a.pow(k)), power_symbol(a, k), 1)});
  }
  ids.push_back({"(v) [a^2]=h[a]", 1, eq(br(a * a), h * br(a), 1)});
  ids.push_back({"(vi) <a><b>=<ab>", 0, eq(ang(a) * ang(b), ang(a * b), 0)});
  ids.push_back({"(vi) <a><a^-1>=1", 0, eq(ang(a) * ang(a.inverse()), I, 0)});
  ids.push_back({"(vi) eps^2=1", 0, eq(eps * eps, I, 0)});
  ids.push_back({"(vii) <a>^2=1", 0, eq(ang(a) * ang(a), I, 0)});
  ids.push_back({"(vii) <a^2>=1", 0, eq(ang(a * a), I, 0)});
  {
    X x = X::symbol(F, {b, c});
    ids.push_back({"(viii) <a>[b,c]=[b,c]<a>", 2, eq(ang(a) * x, x * ang(a), 2)});
    X y = X::monomial(F, 1, {b});
    ids.push_back({"(viii) <a>eta[b]=eta[b]<a>", 0, eq(ang(a) * y, y * ang(a), 0)});
  }
  ids.push_back({"(ix) <a>[b]=[ab]-[a]", 1, eq(ang(a) * br(b), angle_bracket_rewrite(a, b), 1)});

  for (const Identity& id : ids)
    r.check(id.holds(), [&] {
      return std::string(id.name) + " fails for a=" + unit_to_string(a) + " b=" + unit_to_string(b) +
             " c=" + unit_to_string(c);
    });
}

template <class U>
Report lemma32_on(const SuiteConfig& cfg, const FiniteField& F) {
  Report r;
  Rng rng(cfg.seed);
  Sampler<U> S(F, rng);
  if constexpr (std::is_same_v<U, FFUnit>) {
    int64_t u = unit_count(F);
    if (u * u * u <= field_size_bound()) {
      std::vector<FFUnit> all = all_units(F);
      for (const FFUnit& a : all)
        for (const FFUnit& b : all)
          for (const FFUnit& c : all) {
            relation_instance<U>(r, F, a, b, c);
            ++r.trials;
          }
      r.note("mode", "exhaustive");
      return r;
    }
  }
  for (int64_t i = 0; i < cfg.trials; ++i) {
    relation_instance<U>(r, F, S.unit(), S.unit(), S.unit());
    ++r.trials;
  }
  r.note("mode", "sampled");
  return r;
}

template <class U>
Report relations34_on(const SuiteConfig& cfg, const FiniteField& F) {
  Report r;
  Rng rng(cfg.seed);
  Sampler<U> S(F, rng);
  static const char* kind_names[] = {"Steinberg", "twisted tensor", "Witt"};
  for (int n = cfg.n_min; n <= cfg.n_max; ++n) {
    bool done = false;
    if constexpr (std::is_same_v<U, FFUnit>) {
      try {
        for_each_relation_generator(
            F, n, cfg.d_max,
            [&](RelationKind k, const FFExpr& x) {
              ++r.trials;
              r.check(expr_zero(x, n), [&] {
                return std::string(kind_names[static_cast<int>(k)]) + " generator " + show(x) + " is nonzero";
              });
            },
            field_size_bound() * 20);
        done = true;
        r.note("n=" + std::to_string(n), "exhaustive");
      } catch (const Error& e) {
        if (e.code() != ErrorCode::DegreeBound) throw;
      }
    }
    if (done) continue;
    auto gens = relation_generators<U>(F, n, cfg.d_max, static_cast<size_t>(cfg.trials), S.unit_sampler(),
                                       rng.below_fn());
    for (auto& g : gens) {
      ++r.trials;
      r.check(expr_zero(g.expr, n), [&] {
        return std::string(kind_names[static_cast<int>(g.kind)]) + " generator " + show(g.expr) + " is nonzero";
      });
    }
    r.note("n=" + std::to_string(n), "sampled");
  }
  return r;
}

}  // namespace

Report lemma32(const SuiteConfig& c) {
  return c.field.rational ? lemma32_on<RatUnit>(c, *c.field.base) : lemma32_on<FFUnit>(c, *c.field.base);
}

Report relations34(const SuiteConfig& c) {
  return c.field.rational ? relations34_on<RatUnit>(c, *c.field.base) : relations34_on<FFUnit>(c, *c.field.base);
}

}  // namespace mwk::suites
