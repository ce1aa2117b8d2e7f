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

#include "mwk/symbolic.hpp"

namespace mwk {
namespace {

// Calls f on every tuple of length len over the units of F.
void for_each_tuple(const FiniteField& F, int len, const std::function<void(const std::vector<FFUnit>&)>& f) {
  if (len < 0) return;
  std::vector<FFUnit> t(static_cast<size_t>(len), FFUnit::one(F));
  while (true) {
    f(t);
    int i = 0;
    for (; i < len; ++i) {
      auto& u = t[static_cast<size_t>(i)];
      if (u.e + 1 < F.order_units()) {
        ++u.e;
        break;
      }
      u.e = 0;
    }
    if (i == len) return;
  }
}

int64_t ipow(int64_t b, int e) {
  int64_t r = 1;
  for (int i = 0; i < e; ++i) r = checked_mul(r, b);
  return r;
}

}  // namespace

void for_each_relation_generator(const FiniteField& F, int n, int d_max,
                                 const std::function<void(RelationKind, const FFExpr&)>& visit, int64_t bound) {
  if (d_max < 0) fail(ErrorCode::InvalidArgument, "negative eta bound");
  const int64_t u = F.order_units();
  int64_t total = 0;
  for (int d = 0; d <= d_max; ++d) {
    if (d + n >= 2) total += ipow(u, d + n);
    if (d + 1 <= d_max && d + n >= 1) total += (d + n) * ipow(u, d + n + 1);
    if (d + 2 <= d_max && d + n + 1 >= 0) total += (d + n + 2) * ipow(u, d + n + 1);
  }
  if (total > bound) fail(ErrorCode::DegreeBound, "exhaustive relation enumeration too large");

  for (int d = 0; d <= d_max; ++d) {
    int r = d + n;
    if (r >= 2) {
      for_each_tuple(F, r, [&](const std::vector<FFUnit>& t) {
        for (int i = 0; i + 1 < r; ++i) {
          const FFUnit& a = t[static_cast<size_t>(i)];
          if (a.is_one()) continue;
          if (t[static_cast<size_t>(i) + 1] == a.one_minus()) {
            visit(RelationKind::Steinberg, FFExpr::monomial(F, d, t));
            return;
          }
        }
      });
    }
    if (d + 1 <= d_max && r >= 1) {
      for_each_tuple(F, r + 1, [&](const std::vector<FFUnit>& t) {
        std::vector<FFUnit> ctx(t.begin() + 2, t.end());
        for (int pos = 0; pos < r; ++pos)
          visit(RelationKind::TwistedTensor,
                twisted_tensor_generator<FFUnit>(F, d, ctx, static_cast<size_t>(pos), t[0], t[1]));
      });
    }
    if (d + 2 <= d_max && r + 1 >= 0) {
      for_each_tuple(F, r + 1, [&](const std::vector<FFUnit>& ctx) {
        for (int pos = 0; pos <= r + 1; ++pos)
          visit(RelationKind::Witt, witt_generator<FFUnit>(F, d, ctx, static_cast<size_t>(pos)));
      });
    }
  }
}

}  // namespace mwk
