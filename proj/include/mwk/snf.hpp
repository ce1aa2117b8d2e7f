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

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "mwk/field.hpp"

namespace mwk {

using BigInt = boost::multiprecision::cpp_int;
using DenseMatrix = std::vector<std::vector<BigInt>>;

// Diagonal of the Smith normal form: min(rows, cols) nonnegative entries
// d_1 | d_2 | ... (zeros last).
std::vector<BigInt> smith_normal_form(DenseMatrix M);

// Integer relation matrix in sparse row form over `cols` generators.
struct SparseRelations {
  int64_t cols = 0;
  std::vector<std::vector<std::pair<int64_t, int64_t>>> rows;

  void write_triples(std::ostream& os) const;
};

// Invariant factors of Z^cols / (row span): the factors other than 1 in
// ascending order, followed by a 0 for each free summand.
std::vector<BigInt> presented_group(const SparseRelations& R);

struct SnfOracleResult {
  std::vector<std::vector<BigInt>> groups;  // indexed by eta bound 0..d_max
  std::vector<int64_t> generators;          // generator count per bound
  std::vector<int64_t> relations;           // relation count per bound
  bool stabilized = false;                  // last two bounds agree
  std::vector<BigInt> final_group() const { return groups.back(); }
  // First bound D whose group already equals the one at D + 1, or -1.
  int first_stable_bound() const {
    for (size_t d = 0; d + 1 < groups.size(); ++d)
      if (groups[d] == groups[d + 1]) return static_cast<int>(d);
    return -1;
  }
};

// Truncated presentation of K^MW_n(F_q) by the monomials eta^d[a_1..a_{d+n}]
// with d <= bound and every relation generator within that bound.
SparseRelations truncated_presentation(const FiniteField& F, int n, int d_max);
SnfOracleResult snf_oracle(const FiniteField& F, int n, int d_max);

std::string group_to_string(const std::vector<BigInt>& g);
std::vector<BigInt> to_big(const std::vector<int64_t>& v);

}  // namespace mwk
