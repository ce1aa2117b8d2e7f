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

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "mwk/parse.hpp"

namespace mwk {

// Seeded generator with a portable uniform draw (the standard
// distributions are implementation-defined).
class Rng {
 public:
  explicit Rng(uint64_t seed) : g_(seed) {}
  uint64_t below(uint64_t k);
  int64_t range(int64_t lo, int64_t hi);  // inclusive
  bool coin() { return below(2) == 1; }
  std::function<uint64_t(uint64_t)> below_fn() {
    return [this](uint64_t k) { return below(k); };
  }

 private:
  std::mt19937_64 g_;
};

struct SuiteConfig {
  std::string suite;
  FieldSpec field;
  int n_min = 1;
  int n_max = 2;
  int64_t trials = 200;
  uint64_t seed = 1;
  int trunc = 8;
  int d_max = 2;
};

struct Report {
  std::string suite_id;
  std::string anchor;
  std::string field;
  uint64_t seed = 0;
  int64_t trials = 0;
  int64_t checks = 0;
  int64_t failure_count = 0;
  std::vector<std::string> failures;  // first kMaxStoredFailures counterexamples
  std::vector<std::pair<std::string, std::string>> notes;

  static constexpr size_t kMaxStoredFailures = 20;
  bool ok() const { return failure_count == 0; }
  void check(bool pass, const std::function<std::string()>& describe);
  void fail_with(const std::string& what);
  void note(const std::string& key, const std::string& value) { notes.emplace_back(key, value); }
  std::string note_value(const std::string& key) const;
};

struct SuiteInfo {
  const char* id;
  const char* anchor;  // the identity family the suite exercises
};

const std::vector<SuiteInfo>& suite_registry();
const SuiteInfo& suite_info(const std::string& id);  // UnknownSuite if absent

Report run_suite(const SuiteConfig& config);

}  // namespace mwk
