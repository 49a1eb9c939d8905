// Cross-method invariant checks behind `parking verify`.
#pragma once

#include <functional>
#include <string>
#include <vector>

#include "parking/exact.hpp"

namespace parking::verify {

enum class Level { quick, full };

Level parse_level(const std::string& s);

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

/// Implementations under test. Tests swap in tampered versions to confirm
/// the suite notices.
struct Hooks {
  std::function<Count(const ParkingParams&)> tail_sum = parking::tail_sum;
  std::function<Count(const ParkingParams&)> tail_sum_alternating = parking::tail_sum_alternating;
};

std::vector<CheckResult> run(Level level, const Hooks& hooks = {});

bool all_passed(const std::vector<CheckResult>& results);

/// One line per check: "PASS  name  (0.012 s)  detail".
std::string render(const std::vector<CheckResult>& results);

}  // namespace parking::verify
