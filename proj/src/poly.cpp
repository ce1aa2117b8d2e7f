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

#include "mwk/poly.hpp"

#include <algorithm>

namespace mwk {

Poly::Poly(const FiniteField& F, std::vector<Elem> coeffs) : F_(&F), c_(std::move(coeffs)) {
  for (Elem c : c_)
    if (c >= F.q()) fail(ErrorCode::InvalidArgument, "coefficient out of range for " + F.name());
  trim();
}

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::operator+(const Poly& o) const {
  require_same_field(F_, o.F_);
  std::vector<Elem> r(std::max(c_.size(), o.c_.size()), 0);
  for (size_t i = 0; i < r.size(); ++i)
    r[i] = F_->add(i < c_.size() ? c_[i] : 0, i < o.c_.size() ? o.c_[i] : 0);
  return Poly(*F_, std::move(r));
}

Poly Poly::operator-(const Poly& o) const {
  require_same_field(F_, o.F_);
  std::vector<Elem> r(std::max(c_.size(), o.c_.size()), 0);
  for (size_t i = 0; i < r.size(); ++i)
    r[i] = F_->sub(i < c_.size() ? c_[i] : 0, i < o.c_.size() ? o.c_[i] : 0);
  return Poly(*F_, std::move(r));
}

Poly Poly::operator*(const Poly& o) const {
  require_same_field(F_, o.F_);
  if (is_zero() || o.is_zero()) return Poly(*F_, {});
  std::vector<Elem> r(c_.size() + o.c_.size() - 1, 0);
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] = F_->add(r[i + j], F_->mul(c_[i], o.c_[j]));
  }
  return Poly(*F_, std::move(r));
}

Poly Poly::scale(Elem c) const {
  std::vector<Elem> r(c_);
  for (Elem& x : r) x = F_->mul(x, c);
  return Poly(*F_, std::move(r));
}

Poly Poly::monic() const {
  if (is_zero()) fail(ErrorCode::ZeroPolynomial, "monic part of zero");
  return scale(F_->inv(lead()));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& o) const {
  require_same_field(F_, o.F_);
  if (o.is_zero()) fail(ErrorCode::ZeroPolynomial, "division by zero polynomial");
  std::vector<Elem> rem(c_);
  std::vector<Elem> quo(c_.size() >= o.c_.size() ? c_.size() - o.c_.size() + 1 : 0, 0);
  Elem li = F_->inv(o.lead());
  while (!rem.empty() && rem.size() >= o.c_.size()) {
    Elem c = F_->mul(rem.back(), li);
    size_t shift = rem.size() - o.c_.size();
    quo[shift] = c;
    for (size_t i = 0; i < o.c_.size(); ++i) rem[shift + i] = F_->sub(rem[shift + i], F_->mul(c, o.c_[i]));
    while (!rem.empty() && rem.back() == 0) rem.pop_back();
  }
  return {Poly(*F_, std::move(quo)), Poly(*F_, std::move(rem))};
}

Poly Poly::pow(int k) const {
  Poly r = constant(*F_, 1);
  for (int i = 0; i < k; ++i) r = r * *this;
  return r;
}

Elem Poly::eval_in(const FiniteField& big, Elem x) const {
  const auto& emb = embedding(*F_, big);
  Elem acc = 0;
  for (size_t i = c_.size(); i-- > 0;) acc = big.add(big.mul(acc, x), emb[c_[i]]);
  return acc;
}

bool Poly::operator<(const Poly& o) const {
  if (c_.size() != o.c_.size()) return c_.size() < o.c_.size();
  return c_ < o.c_;
}

std::string Poly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    Elem c = c_[static_cast<size_t>(i)];
    if (c == 0) continue;
    if (!out.empty()) out += "+";
    if (i == 0) {
      out += std::to_string(c);
      continue;
    }
    if (c != 1) out += std::to_string(c) + "*";
    out += "t";
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

std::vector<Poly> monic_polys(const FiniteField& F, int degree) {
  std::vector<Poly> out;
  int64_t count = 1;
  for (int i = 0; i < degree; ++i) count *= F.q();
  for (int64_t code = 0; code < count; ++code) {
    std::vector<Elem> c(static_cast<size_t>(degree) + 1, 0);
    int64_t x = code;
    for (int i = 0; i < degree; ++i) {
      c[static_cast<size_t>(i)] = static_cast<Elem>(x % F.q());
      x /= F.q();
    }
    c[static_cast<size_t>(degree)] = 1;
    out.emplace_back(F, std::move(c));
  }
  return out;
}

bool is_irreducible(const Poly& f) {
  if (f.degree() < 1) return false;
  for (int k = 1; 2 * k <= f.degree(); ++k)
    for (const Poly& g : monic_polys(*f.field(), k))
      if (f.divmod(g).second.is_zero()) return false;
  return true;
}

std::vector<Poly> monic_irreducibles(const FiniteField& F, int degree) {
  std::vector<Poly> out;
  for (Poly& g : monic_polys(F, degree))
    if (is_irreducible(g)) out.push_back(std::move(g));
  return out;
}

Factorization poly_factor(const Poly& f, int degree_bound) {
  if (f.is_zero()) fail(ErrorCode::ZeroPolynomial, "factorization of zero");
  if (f.degree() > degree_bound)
    fail(ErrorCode::DegreeBound, "degree " + std::to_string(f.degree()) + " exceeds factorization bound");
  const FiniteField& F = *f.field();
  Factorization out{FFUnit::from_elem(F, f.lead()), {}};
  Poly rest = f.monic();
  // Trial division by monic polynomials of increasing degree only ever
  // succeeds on irreducible divisors, since smaller factors are removed first.
  for (int k = 1; 2 * k <= rest.degree(); ++k) {
    for (const Poly& g : monic_polys(F, k)) {
      if (2 * k > rest.degree()) break;
      while (true) {
        auto [q, r] = rest.divmod(g);
        if (!r.is_zero()) break;
        ++out.factors[g];
        rest = q;
      }
    }
  }
  if (rest.degree() >= 1) ++out.factors[rest];
  return out;
}

}  // namespace mwk
