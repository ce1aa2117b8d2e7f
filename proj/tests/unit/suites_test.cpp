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


#include "mwk/suites.hpp"

#include <set>

#include "test_util.hpp"

namespace mwk {
namespace {

using testing::error_of;

SuiteConfig config(const std::string& suite, const std::string& field, int64_t trials) {
  SuiteConfig c;
  c.suite = suite;
  c.field = parse_field(field);
  c.trials = trials;
  c.seed = 3;
  return c;
}

bool rational_only(const std::string& id) { return id == "seq37" || id == "prop36"; }

TEST(Suites, RegistryIdsAreUnique) {
  std::set<std::string> ids;
  for (const SuiteInfo& s : suite_registry()) {
    EXPECT_TRUE(ids.insert(s.id).second) << s.id;
    EXPECT_FALSE(std::string(s.anchor).empty());
  }
  EXPECT_EQ(ids.size(), 13u);
  EXPECT_EQ(error_of([] { suite_info("nope"); }), ErrorCode::UnknownSuite);
}

class EverySuite : public ::testing::TestWithParam<std::string> {};

TEST_P(EverySuite, PassesOnSmallSamples) {
  const std::string id = GetParam();
  for (const char* field : {"3(t)", "5"}) {
    if (rational_only(id) && std::string(field) == "5") continue;
    Report r = run_suite(config(id, field, 12));
    EXPECT_TRUE(r.ok()) << id << " over " << field << ": " << (r.failures.empty() ? "" : r.failures[0]);
    EXPECT_GT(r.checks, 0) << id;
    EXPECT_EQ(r.suite_id, id);
    EXPECT_EQ(r.seed, 3u);
  }
}

INSTANTIATE_TEST_SUITE_P(Registry, EverySuite,
                         ::testing::Values("lemma32", "relations34", "lambda-wd", "prop64", "shift73", "lemma75",
                                           "prop83", "thm84", "seq37", "prop36", "lemma91", "lemma93", "table1"),
                         [](const auto& info) {
                           std::string s = info.param;
                           for (char& c : s)
                             if (c == '-') c = '_';
                           return s;
                         });

TEST(Suites, DeterministicGivenTheSeed) {
  Report a = run_suite(config("lemma75", "3(t)", 20));
  Report b = run_suite(config("lemma75", "3(t)", 20));
  EXPECT_EQ(a.checks, b.checks);
  EXPECT_EQ(a.notes, b.notes);
}

TEST(Suites, ValidatesConfiguration) {
  EXPECT_EQ(error_of([] { run_suite(config("prop36", "5", 1)); }), ErrorCode::InvalidArgument);
  SuiteConfig c = config("lemma32", "3", 1);
  c.n_max = 0;
  EXPECT_EQ(error_of([&] { run_suite(c); }), ErrorCode::InvalidArgument);
  EXPECT_EQ(error_of([] { run_suite(config("nope", "3", 1)); }), ErrorCode::UnknownSuite);
}

TEST(Rng, RangesAreInclusiveAndReproducible) {
  Rng a(9), b(9);
  for (int i = 0; i < 100; ++i) {
    int64_t x = a.range(-2, 2);
    EXPECT_GE(x, -2);
    EXPECT_LE(x, 2);
    EXPECT_EQ(x, b.range(-2, 2));
  }
  EXPECT_EQ(error_of([&] { a.below(0); }), ErrorCode::InvalidArgument);
}

}  // namespace
}  // namespace mwk
