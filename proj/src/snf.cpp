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

#include "mwk/snf.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <unordered_set>

#include "mwk/symbolic.hpp"

namespace mwk {

std::vector<BigInt> smith_normal_form(DenseMatrix M) {
  const size_t m = M.size();
  const size_t n = m ? M[0].size() : 0;
  const size_t k = std::min(m, n);
  std::vector<BigInt> diag(k, 0);
  for (size_t t = 0; t < k; ++t) {
    while (true) {
      size_t pi = m, pj = n;
      BigInt best = 0;
      for (size_t i = t; i < m; ++i)
        for (size_t j = t; j < n; ++j) {
          if (M[i][j] == 0) continue;
          BigInt a = abs(M[i][j]);
          if (pi == m || a < best) {
            best = a;
            pi = i;
            pj = j;
          }
        }
      if (pi == m) return diag;  // remaining block is zero
      std::swap(M[t], M[pi]);
      if (pj != t)
        for (size_t i = 0; i < m; ++i) std::swap(M[i][t], M[i][pj]);
      bool clean = true;
      for (size_t i = t + 1; i < m; ++i) {
        if (M[i][t] == 0) continue;
        BigInt q = M[i][t] / M[t][t];
        for (size_t j = t; j < n; ++j) M[i][j] -= q * M[t][j];
        if (M[i][t] != 0) clean = false;
      }
      for (size_t j = t + 1; j < n; ++j) {
        if (M[t][j] == 0) continue;
        BigInt q = M[t][j] / M[t][t];
        for (size_t i = t; i < m; ++i) M[i][j] -= q * M[i][t];
        if (M[t][j] != 0) clean = false;
      }
      if (!clean) continue;
      bool divisible = true;
      for (size_t i = t + 1; i < m && divisible; ++i)
        for (size_t j = t + 1; j < n; ++j)
          if (M[i][j] % M[t][t] != 0) {
            for (size_t jj = t; jj < n; ++jj) M[t][jj] += M[i][jj];
            divisible = false;
            break;
          }
      if (divisible) break;
    }
    diag[t] = abs(M[t][t]);
  }
  return diag;
}

void SparseRelations::write_triples(std::ostream& os) const {
  os << rows.size() << " " << cols << "\n";
  for (size_t i = 0; i < rows.size(); ++i)
    for (auto& [c, v] : rows[i]) os << i << " " << c << " " << v << "\n";
}

namespace {

using Row = std::vector<std::pair<int64_t, BigInt>>;

// Eliminates unit pivots while any exist; returns the reduced rows over the
// surviving columns.
struct SparseEliminator {
  std::vector<Row> rows;
  std::vector<bool> alive;
  std::map<int64_t, std::unordered_set<size_t>> col_rows;
  std::set<std::pair<size_t, size_t>> candidates;  // (length, row)
  std::set<int64_t> eliminated;

  explicit SparseEliminator(const SparseRelations& R) {
    for (const auto& r : R.rows) {
      std::map<int64_t, BigInt> acc;
      for (auto& [c, v] : r) acc[c] += v;
      Row row;
      for (auto& [c, v] : acc)
        if (v != 0) row.emplace_back(c, v);
      if (row.empty()) continue;
      size_t id = rows.size();
      for (auto& [c, v] : row) col_rows[c].insert(id);
      candidates.emplace(row.size(), id);
      rows.push_back(std::move(row));
      alive.push_back(true);
    }
  }

  void run() {
    while (!candidates.empty()) {
      auto it = candidates.begin();
      size_t pid = it->second;
      candidates.erase(it);
      if (!alive[pid]) continue;
      const Row& P = rows[pid];
      int64_t pc = -1;
      size_t best = 0;
      for (auto& [c, v] : P) {
        if (v != 1 && v != -1) continue;
        size_t cnt = col_rows[c].size();
        if (pc < 0 || cnt < best) {
          pc = c;
          best = cnt;
        }
      }
      if (pc < 0) continue;  // revisited if the row changes
      pivot(pid, pc);
    }
  }

  void pivot(size_t pid, int64_t pc) {
    Row P = rows[pid];
    BigInt u = 0;
    for (auto& [c, v] : P)
      if (c == pc) u = v;
    std::vector<size_t> targets(col_rows[pc].begin(), col_rows[pc].end());
    for (size_t rid : targets) {
      if (rid == pid) continue;
      Row& R = rows[rid];
      BigInt f = 0;
      for (auto& [c, v] : R)
        if (c == pc) f = v * u;
      Row out;
      size_t a = 0, b = 0;
      while (a < R.size() || b < P.size()) {
        if (b == P.size() || (a < R.size() && R[a].first < P[b].first)) {
          out.push_back(R[a++]);
        } else if (a == R.size() || P[b].first < R[a].first) {
          int64_t c = P[b].first;
          out.emplace_back(c, -f * P[b].second);
          col_rows[c].insert(rid);
          ++b;
        } else {
          int64_t c = R[a].first;
          BigInt v = R[a].second - f * P[b].second;
          if (v != 0) out.emplace_back(c, v);
          else col_rows[c].erase(rid);
          ++a;
          ++b;
        }
      }
      R = std::move(out);
      if (R.empty()) alive[rid] = false;
      else candidates.emplace(R.size(), rid);
    }
    for (auto& [c, v] : P) col_rows[c].erase(pid);
    col_rows.erase(pc);
    eliminated.insert(pc);
    alive[pid] = false;
  }
};

}  // namespace

std::vector<BigInt> presented_group(const SparseRelations& R) {
  SparseEliminator E(R);
  E.run();
  int64_t free_cols = R.cols - static_cast<int64_t>(E.eliminated.size());
  std::map<int64_t, size_t> colidx;
  std::vector<const Row*> left;
  for (size_t i = 0; i < E.rows.size(); ++i) {
    if (!E.alive[i]) continue;
    left.push_back(&E.rows[i]);
    for (auto& [c, v] : E.rows[i]) colidx.emplace(c, 0);
  }
  size_t j = 0;
  for (auto& [c, idx] : colidx) idx = j++;
  DenseMatrix M(left.size(), std::vector<BigInt>(colidx.size(), 0));
  for (size_t i = 0; i < left.size(); ++i)
    for (auto& [c, v] : *left[i]) M[i][colidx[c]] = v;
  std::vector<BigInt> diag = smith_normal_form(M);
  std::vector<BigInt> out;
  int64_t zeros = free_cols - static_cast<int64_t>(colidx.size());
  for (const BigInt& d : diag) {
    if (d == 1) continue;
    if (d == 0) ++zeros;
    else out.push_back(d);
  }
  zeros += static_cast<int64_t>(colidx.size()) - static_cast<int64_t>(diag.size());
  std::sort(out.begin(), out.end());
  for (int64_t i = 0; i < zeros; ++i) out.push_back(0);
  return out;
}

SparseRelations truncated_presentation(const FiniteField& F, int n, int d_max) {
  const int64_t u = F.order_units();
  std::vector<int64_t> offset;
  int64_t cols = 0;
  for (int d = 0; d <= d_max; ++d) {
    offset.push_back(cols);
    int r = d + n;
    if (r < 0) continue;
    int64_t cnt = 1;
    for (int i = 0; i < r; ++i) cnt = checked_mul(cnt, u);
    cols = checked_add(cols, cnt);
  }
  if (cols > 400000) fail(ErrorCode::SizeBound, "presentation has too many generators");
  SparseRelations R;
  R.cols = cols;
  auto index = [&](const Monomial<FFUnit>& m) {
    int64_t idx = 0, pw = 1;
    for (const FFUnit& a : m.units) {
      idx += a.e * pw;
      pw *= u;
    }
    return offset[static_cast<size_t>(m.d)] + idx;
  };
  for_each_relation_generator(F, n, d_max, [&](RelationKind, const FFExpr& x) {
    std::vector<std::pair<int64_t, int64_t>> row;
    for (auto& [m, c] : x.terms()) row.emplace_back(index(m), c);
    R.rows.push_back(std::move(row));
  });
  return R;
}

SnfOracleResult snf_oracle(const FiniteField& F, int n, int d_max) {
  if (n < 0) fail(ErrorCode::InvalidArgument, "presentation oracle needs n >= 0");
  SnfOracleResult res;
  for (int d = 0; d <= d_max; ++d) {
    SparseRelations R = truncated_presentation(F, n, d);
    res.generators.push_back(R.cols);
    res.relations.push_back(static_cast<int64_t>(R.rows.size()));
    res.groups.push_back(presented_group(R));
  }
  res.stabilized = res.groups.size() >= 2 && res.groups[res.groups.size() - 1] == res.groups[res.groups.size() - 2];
  return res;
}

std::string group_to_string(const std::vector<BigInt>& g) {
  if (g.empty()) return "0";
  std::ostringstream os;
  for (size_t i = 0; i < g.size(); ++i) {
    if (i) os << " + ";
    if (g[i] == 0) os << "Z";
    else os << "Z/" << g[i];
  }
  return os.str();
}

std::vector<BigInt> to_big(const std::vector<int64_t>& v) { return std::vector<BigInt>(v.begin(), v.end()); }

}  // namespace mwk
