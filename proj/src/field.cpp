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

#include "mwk/field.hpp"

#include <map>
#include <memory>
#include <mutex>

namespace mwk {
namespace {

bool is_prime(int64_t n) {
  if (n < 2) return false;
  for (int64_t i = 2; i * i <= n; ++i)
    if (n % i == 0) return false;
  return true;
}

std::vector<int64_t> prime_divisors(int64_t n) {
  std::vector<int64_t> out;
  for (int64_t i = 2; i * i <= n; ++i) {
    if (n % i == 0) {
      out.push_back(i);
      while (n % i == 0) n /= i;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

// Dense polynomials over F_p, low-to-high, used only while building tables.
using PPoly = std::vector<int>;

void trim(PPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

PPoly pmod(PPoly a, const PPoly& m, int p) {
  trim(a);
  int lead_inv = 1;
  for (int i = 1; i < p; ++i)
    if (i * m.back() % p == 1) lead_inv = i;
  while (a.size() >= m.size()) {
    int c = a.back() * lead_inv % p;
    size_t shift = a.size() - m.size();
    for (size_t i = 0; i < m.size(); ++i) a[shift + i] = ((a[shift + i] - c * m[i]) % p + p) % p;
    trim(a);
  }
  return a;
}

PPoly pmulmod(const PPoly& a, const PPoly& b, const PPoly& m, int p) {
  if (a.empty() || b.empty()) return {};
  PPoly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  return pmod(r, m, p);
}

bool irreducible_over_prime(const PPoly& f, int p) {
  int deg = static_cast<int>(f.size()) - 1;
  for (int k = 1; 2 * k <= deg; ++k) {
    int64_t count = 1;
    for (int i = 0; i < k; ++i) count *= p;
    for (int64_t code = 0; code < count; ++code) {
      PPoly g(k + 1, 0);
      int64_t c = code;
      for (int i = 0; i < k; ++i) {
        g[i] = static_cast<int>(c % p);
        c /= p;
      }
      g[k] = 1;
      if (pmod(f, g, p).empty()) return false;
    }
  }
  return true;
}

std::mutex& registry_mutex() {
  static std::mutex m;
  return m;
}

}  // namespace

FiniteField::FiniteField(int p, int d) : p_(p), d_(d) {
  q_ = 1;
  pow_p_.push_back(1);
  for (int i = 0; i < d; ++i) {
    q_ *= p;
    pow_p_.push_back(q_);
  }
  // Smallest monic irreducible, coefficient lists compared from c_0 upward.
  if (d == 1) {
    modulus_ = {0, 1};
  } else {
    int64_t count = q_;
    for (int64_t idx = 0; idx < count; ++idx) {
      PPoly f(d + 1, 0);
      int64_t c = idx;
      for (int i = d - 1; i >= 0; --i) {
        f[i] = static_cast<int>(c % p);
        c /= p;
      }
      f[d] = 1;
      if (irreducible_over_prime(f, p)) {
        modulus_ = f;
        break;
      }
    }
  }
  auto to_poly = [&](int64_t code) {
    PPoly a(d, 0);
    for (int i = 0; i < d; ++i) {
      a[i] = static_cast<int>(code % p);
      code /= p;
    }
    trim(a);
    return a;
  };
  auto to_code = [&](const PPoly& a) {
    int64_t code = 0;
    for (size_t i = 0; i < a.size(); ++i) code += a[i] * pow_p_[i];
    return code;
  };
  PPoly m = modulus_;
  auto order_ok = [&](int64_t code) {
    PPoly base = to_poly(code);
    for (int64_t r : prime_divisors(q_ - 1)) {
      int64_t e = (q_ - 1) / r;
      PPoly acc = {1}, b = base;
      while (e > 0) {
        if (e & 1) acc = pmulmod(acc, b, m, p);
        b = pmulmod(b, b, m, p);
        e >>= 1;
      }
      if (acc == PPoly{1}) return false;
    }
    return true;
  };
  for (int64_t code = 1; code < q_; ++code) {
    if (order_ok(code)) {
      gen_ = static_cast<Elem>(code);
      break;
    }
  }
  exp_.resize(static_cast<size_t>(q_ - 1));
  log_.assign(static_cast<size_t>(q_), -1);
  PPoly cur = {1}, g = to_poly(gen_);
  for (int64_t i = 0; i < q_ - 1; ++i) {
    int64_t code = to_code(cur);
    exp_[static_cast<size_t>(i)] = static_cast<Elem>(code);
    log_[static_cast<size_t>(code)] = i;
    cur = pmulmod(cur, g, m, p);
  }
}

const FiniteField& FiniteField::get(int p, int d) {
  if (d < 1) fail(ErrorCode::InvalidArgument, "extension degree must be positive");
  if (!is_prime(p)) fail(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  if (p == 2) fail(ErrorCode::EvenCharacteristic, "characteristic 2 is not supported");
  int64_t q = 1;
  for (int i = 0; i < d; ++i) {
    q *= p;
    if (q > field_size_bound())
      fail(ErrorCode::SizeBound, "field of order " + std::to_string(p) + "^" + std::to_string(d) +
                                     " exceeds bound " + std::to_string(field_size_bound()));
  }
  std::lock_guard<std::mutex> lock(registry_mutex());
  static std::map<std::pair<int, int>, std::unique_ptr<FiniteField>>* reg =
      new std::map<std::pair<int, int>, std::unique_ptr<FiniteField>>();
  auto& slot = (*reg)[{p, d}];
  if (!slot) slot.reset(new FiniteField(p, d));
  return *slot;
}

const FiniteField& FiniteField::of_order(int64_t q) {
  if (q < 2) fail(ErrorCode::NotPrime, "field order must be a prime power");
  int64_t p = 0;
  for (int64_t i = 2; i <= q; ++i) {
    if (q % i == 0) {
      p = i;
      break;
    }
  }
  int d = 0;
  int64_t r = q;
  while (r % p == 0) {
    r /= p;
    ++d;
  }
  if (r != 1) fail(ErrorCode::NotPrime, std::to_string(q) + " is not a prime power");
  if (q > field_size_bound())
    fail(ErrorCode::SizeBound, "field order " + std::to_string(q) + " exceeds bound");
  return get(static_cast<int>(p), d);
}

std::string FiniteField::name() const { return "F_" + std::to_string(q_); }

Elem FiniteField::add(Elem a, Elem b) const {
  if (d_ == 1) return static_cast<Elem>((a + b) % static_cast<Elem>(p_));
  Elem out = 0;
  for (int i = 0; i < d_; ++i) {
    Elem da = a % p_, db = b % p_;
    out += static_cast<Elem>(((da + db) % p_) * pow_p_[i]);
    a /= p_;
    b /= p_;
  }
  return out;
}

Elem FiniteField::neg(Elem a) const {
  if (d_ == 1) return a == 0 ? 0 : static_cast<Elem>(p_) - a;
  Elem out = 0;
  for (int i = 0; i < d_; ++i) {
    Elem da = a % p_;
    out += static_cast<Elem>(((p_ - da) % p_) * pow_p_[i]);
    a /= p_;
  }
  return out;
}

Elem FiniteField::sub(Elem a, Elem b) const { return add(a, neg(b)); }

Elem FiniteField::mul(Elem a, Elem b) const {
  if (a == 0 || b == 0) return 0;
  int64_t s = log_[a] + log_[b];
  if (s >= q_ - 1) s -= q_ - 1;
  return exp_[static_cast<size_t>(s)];
}

Elem FiniteField::inv(Elem a) const {
  if (a == 0) fail(ErrorCode::NotAUnit, "inverse of zero");
  return exp(-log_[a]);
}

int64_t FiniteField::log(Elem a) const {
  if (a == 0 || a >= q_) fail(ErrorCode::NotAUnit, "discrete log of a non-unit");
  return log_[a];
}

const std::vector<Elem>& embedding(const FiniteField& small, const FiniteField& big) {
  if (small.p() != big.p() || big.d() % small.d() != 0)
    fail(ErrorCode::FieldMismatch, small.name() + " does not embed in " + big.name());
  std::lock_guard<std::mutex> lock(registry_mutex());
  static auto* cache =
      new std::map<std::pair<const FiniteField*, const FiniteField*>, std::unique_ptr<std::vector<Elem>>>();
  auto& slot = (*cache)[{&small, &big}];
  if (slot) return *slot;
  auto table = std::make_unique<std::vector<Elem>>(static_cast<size_t>(small.q()));
  if (small.d() == 1) {
    for (int64_t c = 0; c < small.q(); ++c) (*table)[static_cast<size_t>(c)] = static_cast<Elem>(c);
  } else {
    const auto& m = small.modulus();
    Elem theta = 0;
    for (int64_t x = 0; x < big.q(); ++x) {
      Elem acc = 0;
      for (int i = static_cast<int>(m.size()) - 1; i >= 0; --i)
        acc = big.add(big.mul(acc, static_cast<Elem>(x)), big.from_int(m[i]));
      if (acc == 0) {
        theta = static_cast<Elem>(x);
        break;
      }
    }
    for (int64_t c = 0; c < small.q(); ++c) {
      int64_t code = c;
      Elem acc = 0, pw = 1;
      for (int i = 0; i < small.d(); ++i) {
        acc = big.add(acc, big.mul(big.from_int(code % small.p()), pw));
        pw = big.mul(pw, theta);
        code /= small.p();
      }
      (*table)[static_cast<size_t>(c)] = acc;
    }
  }
  slot = std::move(table);
  return *slot;
}

void require_same_field(const FiniteField* a, const FiniteField* b) {
  if (a != b)
    fail(ErrorCode::FieldMismatch,
         (a ? a->name() : std::string("?")) + " vs " + (b ? b->name() : std::string("?")));
}

FFUnit FFUnit::from_elem(const FiniteField& F, Elem a) { return {&F, F.log(a)}; }

FFUnit FFUnit::operator*(const FFUnit& o) const {
  require_same_field(field, o.field);
  return {field, mod_floor(e + o.e, field->order_units())};
}

FFUnit FFUnit::inverse() const { return {field, mod_floor(-e, field->order_units())}; }

FFUnit FFUnit::pow(int64_t k) const {
  int64_t n = field->order_units();
  return {field, mod_floor(mod_floor(e, n) * mod_floor(k, n) % n, n)};
}

FFUnit FFUnit::one_minus() const {
  Elem v = field->sub(field->one(), elem());
  if (v == 0) fail(ErrorCode::NotAUnit, "1 - 1 is not a unit");
  return from_elem(*field, v);
}

FFUnit FFUnit::embed(const FiniteField& big) const {
  if (&big == field) return *this;
  return from_elem(big, embedding(*field, big)[elem()]);
}

std::vector<FFUnit> all_units(const FiniteField& F) {
  std::vector<FFUnit> out;
  for (int64_t e = 0; e < F.order_units(); ++e) out.push_back({&F, e});
  return out;
}

}  // namespace mwk
