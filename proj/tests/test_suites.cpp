#include <gtest/gtest.h>

#include "chroma/errors.hpp"
#include "chroma/suites.hpp"

using namespace chroma;

TEST(ParallelMap, ResultsAreInIndexOrder) {
  for (int jobs : {1, 2, 4, 8}) {
    const auto out = parallel_map<std::size_t>(100, jobs, [](std::size_t i) { return i * i; });
    ASSERT_EQ(out.size(), 100u);
    for (std::size_t i = 0; i < out.size(); ++i) EXPECT_EQ(out[i], i * i);
  }
}

TEST(ParallelMap, PropagatesExceptions) {
  EXPECT_THROW(parallel_map<int>(10, 3,
                                 [](std::size_t i) -> int {
                                   if (i == 7) throw TooLarge("boom");
                                   return 0;
                                 }),
               TooLarge);
}

TEST(Suites, Names) {
  EXPECT_EQ(suite_names().size(), 9u);
  EXPECT_TRUE(is_suite("ppos"));
  EXPECT_FALSE(is_suite("nope"));
  EXPECT_THROW(run_suite("nope", {}), BadParameter);
}

TEST(Suites, EverySuitePassesAtSmallBounds) {
  for (const auto& name : suite_names()) {
    SuiteConfig cfg;
    cfg.max_n = 3;
    cfg.max_k = 3;
    const auto r = run_suite(name, cfg);
    EXPECT_TRUE(r.ok()) << name << ": " << to_json(r).dump();
    EXPECT_GT(r.instances, 0u) << name;
    EXPECT_FALSE(r.checks.empty()) << name;
  }
}

TEST(Suites, OutputIsIndependentOfJobs) {
  SuiteConfig one, four;
  one.max_n = four.max_n = 4;
  one.max_k = four.max_k = 4;
  four.jobs = 4;
  for (const char* name : {"ppos", "lgv", "involutions"}) {
    const auto a = run_suite(name, one), b = run_suite(name, four);
    EXPECT_EQ(to_json(a), to_json(b)) << name;
    EXPECT_EQ(to_csv(a), to_csv(b)) << name;
  }
}

TEST(Suites, SingleInstanceReplay) {
  SuiteConfig cfg;
  cfg.uio = UnitIntervalOrder::parse("3,4,4");
  cfg.max_k = 4;
  const auto r = run_suite("ppos", cfg);
  EXPECT_EQ(r.instances, 1u);
  EXPECT_TRUE(r.ok());
  for (const auto& c : r.checks) EXPECT_NE(c.instance.find("3,4,4"), std::string::npos);
}

TEST(Suites, SerialisedShape) {
  SuiteConfig cfg;
  cfg.max_n = 5;
  const auto r = run_suite("cauchy", cfg);
  const auto j = to_json(r);
  EXPECT_EQ(j.at("suite"), "cauchy");
  EXPECT_EQ(j.at("instances"), 5);
  EXPECT_TRUE(j.at("failures").empty());
  EXPECT_EQ(j.at("ok"), true);
  EXPECT_FALSE(j.contains("seconds"));
  EXPECT_EQ(to_csv(r).substr(0, 29), "suite,instance,check,status\nc");
}

TEST(Scan, SmallBounds) {
  ScanConfig cfg;
  cfg.max_n = 4;
  const auto r = scan_epositivity(cfg);
  EXPECT_EQ(r.scanned, 22u);
  EXPECT_EQ(r.negatives, 0u);
  EXPECT_EQ(r.per_n, (std::vector<std::size_t>{1, 2, 5, 14}));
  EXPECT_FALSE(r.first_counterexample.has_value());
  EXPECT_TRUE(to_json(r).at("counterexample").is_null());
}

TEST(Scan, FamilyBounds) {
  ScanConfig cfg;
  cfg.max_n = 8;
  cfg.family_max_k = 3;
  cfg.jobs = 2;
  const auto r = scan_epositivity(cfg);
  EXPECT_EQ(r.scanned, 24u);
  EXPECT_EQ(r.negatives, 0u);
}

TEST(Scan, MethodsAgree) {
  ScanConfig fast, slow;
  fast.max_n = slow.max_n = 5;
  slow.method = ChromaticMethod::brute_force;
  EXPECT_EQ(to_json(scan_epositivity(fast)), to_json(scan_epositivity(slow)));
}
