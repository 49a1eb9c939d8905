#include <gtest/gtest.h>

#include <chrono>

#include "parking/verify.hpp"

namespace parking::verify {
namespace {

TEST(Verify, QuickLevelPassesWithinBudget) {
  const auto start = std::chrono::steady_clock::now();
  const auto results = run(Level::quick);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  EXPECT_TRUE(all_passed(results)) << render(results);
  EXPECT_LT(secs, 10.0);
}

TEST(Verify, TamperedTailSumIsCaught) {
  Hooks hooks;
  hooks.tail_sum = [](const ParkingParams& p) {
    Count s = parking::tail_sum(p);
    if (p.n == 5 && p.m == 5 && p.k == 2) s += Count(1);
    return s;
  };
  const auto results = run(Level::quick, hooks);
  EXPECT_FALSE(all_passed(results));
  bool table_failed = false;
  for (const auto& r : results) {
    if (r.name == "table1_reproduction") table_failed = !r.passed;
  }
  EXPECT_TRUE(table_failed);
}

TEST(Verify, RenderListsEveryCheck) {
  const std::vector<CheckResult> rs{{"a", true, "", 0.5}, {"b", false, "boom", 0.25}};
  EXPECT_EQ(render(rs), "PASS  a  (0.500 s)\nFAIL  b  (0.250 s)  boom\n");
}

TEST(Verify, ParseLevel) {
  EXPECT_EQ(parse_level("quick"), Level::quick);
  EXPECT_EQ(parse_level("full"), Level::full);
  EXPECT_THROW(parse_level("slow"), std::invalid_argument);
}

}  // namespace
}  // namespace parking::verify
