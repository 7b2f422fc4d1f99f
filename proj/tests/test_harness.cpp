// Copyright 2026 The avdist Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <sstream>
#include <string>

#include <gtest/gtest.h>

#include "avdist/harness.hpp"

namespace avdist {
namespace {

const ValueCheck& check_named(const ReproductionCase& c, const std::string& label) {
  for (const auto& v : c.checks)
    if (v.label == label) return v;
  throw std::runtime_error("no check " + label);
}

TEST(Reproduce, AllCasesPass) {
  const auto cases = reproduce("all");
  EXPECT_EQ(cases.size(), reproduction_names().size());
  for (const auto& c : cases) {
    EXPECT_TRUE(c.passed) << c.name;
    for (const auto& v : c.checks) EXPECT_TRUE(v.passed) << c.name << "/" << v.label << " " << v.computed;
  }
}

TEST(Reproduce, HeadlineValues) {
  const auto s = reproduce("states_separation").front();
  EXPECT_EQ(check_named(s, "d_av").expected, 0.5);
  EXPECT_EQ(check_named(s, "d_tr").expected, 1.0);
  const auto p = reproduce("povm_swap").front();
  EXPECT_NEAR(check_named(p, "d_av").computed, std::sqrt(2.0) / 4.0, 1e-9);
  EXPECT_NEAR(check_named(p, "d_op").computed, 1.0, 1e-9);
  const auto c = reproduce("channel_separation_d2").front();
  EXPECT_NEAR(check_named(c, "d_av").computed, 0.25, 1e-9);
  EXPECT_NEAR(check_named(c, "d_diamond").computed, 0.5, 1e-9);
}

TEST(Reproduce, UnknownCase) {
  try {
    reproduce("no_such_case");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::UnknownCase);
  }
}

TEST(Reproduce, FailingCheckIsReported) {
  const auto c = repro::CaseBuilder("x", "y").equal("a", 1.0, 1.0 + 1e-6).done();
  EXPECT_FALSE(c.passed);
  const auto g = repro::CaseBuilder("x", "y").greater("b", 1.0, 1.0 + 1e-7).done();
  EXPECT_FALSE(g.passed);
}

TEST(PropertySuites, ZeroViolations) {
  for (const auto& suite : suite_names()) {
    const auto rep = run_property_suite(suite, 60, 123);
    EXPECT_EQ(rep.violation_count(), 0u) << suite;
    EXPECT_TRUE(rep.violations.empty()) << suite;
    EXPECT_FALSE(rep.rows.empty()) << suite;
  }
}

TEST(PropertySuites, CounterexamplesHoldStrictly) {
  const auto rep = run_property_suite("counterexamples", 1, 0);
  EXPECT_EQ(rep.rows.size(), 11u);
  for (const auto& r : rep.rows) {
    EXPECT_TRUE(r.holds) << r.check;
    EXPECT_GT(r.lhs - r.rhs, kStrictMargin) << r.check;
  }
}

TEST(PropertySuites, ReplayIsByteIdenticalAcrossWorkers) {
  auto csv = [](const SuiteReport& r) {
    std::ostringstream os;
    write_csv(os, r);
    return os.str();
  };
  const std::string base = csv(run_property_suite("dpi", 40, 99, 1));
  EXPECT_EQ(base, csv(run_property_suite("dpi", 40, 99, 2)));
  EXPECT_EQ(base, csv(run_property_suite("dpi", 40, 99, 8)));
  EXPECT_NE(base, csv(run_property_suite("dpi", 40, 100, 1)));
  EXPECT_EQ(base.rfind(kPropcheckHeader, 0), 0u);
  EXPECT_NE(base.find("suite,check,d,trial,seed,lhs,rhs,holds\n"), std::string::npos);
}

TEST(PropertySuites, Errors) {
  try {
    run_property_suite("metric", 0, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::InvalidArgument);
  }
  try {
    run_property_suite("nope", 5, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::UnknownCase);
  }
}

TEST(PropertySuites, TrialBuilderRecordsViolations) {
  suites::TrialBuilder tb("s", 3, 7);
  tb.le("ok", 2, 1.0, 1.0);
  tb.le("bad", 2, 1.0 + 1e-8, 1.0);
  tb.eq("close", 2, 1.0, 1.0 + 1e-12, 1e-10);
  tb.gt("strict", 2, 1.0, 1.0, 0.0);
  const auto t = tb.done();
  ASSERT_EQ(t.rows.size(), 4u);
  EXPECT_TRUE(t.rows[0].holds);
  EXPECT_FALSE(t.rows[1].holds);
  EXPECT_TRUE(t.rows[2].holds);
  EXPECT_FALSE(t.rows[3].holds);
  EXPECT_EQ(t.rows[1].trial, 3u);
  EXPECT_EQ(t.rows[1].seed, 7u);
}

}  // namespace
}  // namespace avdist
