// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "brute_force.hpp"
#include "parking/asymptotics.hpp"
#include "parking/exact.hpp"
#include "parking/published.hpp"
#include "parking/report.hpp"
#include "parking/simulation.hpp"

using namespace parking;

namespace {

constexpr std::uint64_t kMonteCarloSeed = 20080303;

struct Outcome {
  bool passed = false;
  std::string detail;
};

std::string fmt(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

Outcome table1() {
  const auto table = build_table(10, 10, 10);
  for (std::int64_t n = 1; n <= 10; ++n) {
    for (std::int64_t k = 0; k < n; ++k) {
      const Count want = Count::from_string(
          std::string(published::kSquareDefectCounts[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(k)]));
      const Count rec = table.at({k, n - k, k});
      const Count expl = defect_count_explicit({n, n, k});
      if (rec != want || expl != want) {
        return {false, "mismatch at n=" + std::to_string(n) + " k=" + std::to_string(k)};
      }
    }
  }
  return {true, "55 values, recurrence and explicit"};
}

Outcome oracle_equivalence() {
  int pairs = 0;
  auto check = [&](std::int64_t n, std::int64_t m) {
    ++pairs;
    return enumerate_exhaustive(n, m).counts == defect_distribution(n, m).counts;
  };
  if (!check(0, 0)) return {false, "n=0 m=0"};
  for (std::int64_t m = 0; m <= 20; ++m) {
    for (std::int64_t n = 1; n <= 1000; ++n) {
      if (std::pow(static_cast<double>(n), static_cast<double>(m)) > 1e6) break;
      if (!check(n, m)) return {false, "n=" + std::to_string(n) + " m=" + std::to_string(m)};
    }
  }
  // An enumerator written apart from the library, on the small square.
  for (std::int64_t n = 1; n <= 6; ++n) {
    for (std::int64_t m = 0; m <= 6; ++m) {
      const auto brute = testing_oracle::brute_force_distribution(n, m);
      const auto exact = defect_distribution(n, m);
      for (std::size_t k = 0; k < brute.size(); ++k) {
        if (exact.counts[k] != Count(brute[k])) return {false, "independent oracle n=" + std::to_string(n)};
      }
    }
  }
  return {true, std::to_string(pairs) + " (n,m) pairs"};
}

Outcome pollak() {
  for (std::int64_t n = 0; n <= 20; ++n) {
    for (std::int64_t m = 0; m <= n; ++m) {
      const Count want = m == 0 ? Count(1)
                                : Count(static_cast<std::uint64_t>(n + 1 - m)) *
                                      ipow(static_cast<std::uint64_t>(n + 1), static_cast<std::uint64_t>(m - 1));
      if (defect_count_explicit({n, m, 0}) != want || defect_count_recurrence({n, m, 0}) != want) {
        return {false, "n=" + std::to_string(n) + " m=" + std::to_string(m)};
      }
      if (parking_function_count(n, m).count != want) return {false, "closed form n=" + std::to_string(n)};
    }
  }
  return {true, "0 <= m <= n <= 20"};
}

Outcome abel() {
  for (std::int64_t a = 0; a <= 8; ++a)
    for (std::int64_t b = 0; b <= 8; ++b)
      for (std::int64_t m = 0; m <= 8; ++m)
        if (!abel_identity_check(a, b, m)) return {false, "a=" + std::to_string(a)};
  return {true, "729 instances"};
}

Outcome row_sums() {
  for (std::int64_t n = 1; n <= 12; ++n) {
    for (std::int64_t m = 0; m <= 14; ++m) {
      if (defect_distribution(n, m).total() != ipow(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(m))) {
        return {false, "n=" + std::to_string(n) + " m=" + std::to_string(m)};
      }
    }
  }
  return {true, "n <= 12, m <= 14"};
}

Outcome s_forms() {
  for (std::int64_t n = 0; n <= 12; ++n)
    for (std::int64_t m = 0; m <= 12; ++m)
      for (std::int64_t k = 0; k <= m + 1; ++k)
        if (tail_sum({n, m, k}) != tail_sum_alternating({n, m, k})) {
          return {false, "n=" + std::to_string(n) + " m=" + std::to_string(m) + " k=" + std::to_string(k)};
        }
  return {true, "n, m <= 12, all k"};
}

Outcome ratio_limits() {
  const double e = std::numbers::e;
  const double targets[] = {2 * e - 3, 3 * e * e - 8 * e + 3.5};
  std::string detail;
  for (int k = 1; k <= 2; ++k) {
    double prev = INFINITY;
    for (std::int64_t n : {250, 1000, 4000}) {
      const double r = ratio_to_double(defect_count_explicit({n, n, k}), defect_count_explicit({n, n, 0}));
      const double err = std::abs(r - targets[k - 1]);
      if (!(err < prev)) return {false, "k=" + std::to_string(k) + " error rose at n=" + std::to_string(n)};
      prev = err;
    }
    if (prev > 5e-2) return {false, "k=" + std::to_string(k) + " err " + fmt(prev)};
    detail += "k=" + std::to_string(k) + " err@4000 " + fmt(prev) + " ";
  }
  return {true, detail};
}

Outcome rayleigh_trend() {
  double prev = INFINITY;
  for (std::int64_t n : {100, 400, 1600}) {
    const auto k = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
    const double p = ratio_to_double(tail_sum({n, n, k}), ipow(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(n)));
    const double err = std::abs(p - std::exp(-2.0));
    if (!(err < prev)) return {false, "error rose at n=" + std::to_string(n)};
    prev = err;
  }
  return {prev <= 0.05, "err@1600 " + fmt(prev)};
}

Outcome density_integral() {
  double worst = 0;
  for (double x : {0.25, 0.5, 1.0, 2.0})
    for (double y : {-1.0, 0.0, 0.5})
      if (x > y) worst = std::max(worst, std::abs(density_integral_check(x, y) - std::exp(-2 * x * (x - y))));
  return {worst <= 1e-6, "max err " + fmt(worst)};
}

Outcome tree_fidelity() {
  const double top = std::exp(-1.0);
  double worst = 0;
  for (int i = 0; i < 1000; ++i) {
    const double v = top * i / 999.0;
    const double t = tree_function(v);
    worst = std::max(worst, std::abs(t * std::exp(-t) - v));
  }
  if (worst > 1e-12) return {false, "residual " + fmt(worst)};
  for (double lambda : {0.1, 0.5, 0.9, 1.0}) {
    if (std::abs(tree_function(lambda * std::exp(-lambda)) - lambda) > 1e-10) {
      return {false, "inversion at " + fmt(lambda)};
    }
  }
  for (double lambda : {0.5, 2.0}) {
    const double target = tree_function(lambda * std::exp(-lambda)) / lambda;
    if (std::abs(full_lot_series(lambda, 200) - target) > 1e-10) return {false, "series at " + fmt(lambda)};
  }
  return {true, "residual " + fmt(worst)};
}

Outcome fig1() {
  double worst = 0;
  std::int64_t worst_m = 0;
  std::int64_t worst_k = 0;
  for (const auto& r : report::fig1_rows(100, {90, 100, 110})) {
    if (!r.approx) continue;
    const double err = std::abs(r.exact_probability - *r.approx);
    if (err > worst) {
      worst = err;
      worst_m = r.m;
      worst_k = r.k;
    }
  }
  return {worst <= 0.02,
          "max gap " + fmt(worst) + " at m=" + std::to_string(worst_m) + " k=" + std::to_string(worst_k)};
}

Outcome fig2() {
  const auto grid = report::default_lambda_grid();
  const auto rows = report::fig2_rows({10, 20}, grid);
  int checked = 0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (grid[i] <= 1.0) continue;
    const auto& a = rows[i];
    const auto& b = rows[grid.size() + i];
    if (!(a.exact_full_probability >= b.exact_full_probability && b.exact_full_probability >= b.limit)) {
      return {false, "ordering broken at lambda " + fmt(grid[i])};
    }
    ++checked;
  }
  return {true, std::to_string(checked) + " grid points"};
}

Outcome monte_carlo() {
  const std::int64_t n = 100;
  const std::uint64_t trials = 100000;
  const auto sample = sample_empirical(n, n, trials, Seed{kMonteCarloSeed});
  const Count total = ipow(100, 100);
  std::string detail = "seed " + std::to_string(kMonteCarloSeed);
  for (std::int64_t k : {5, 10, 20}) {
    const double p = ratio_to_double(tail_sum({n, n, k}), total);
    const double se = std::sqrt(p * (1 - p) / static_cast<double>(trials));
    const double z = (sample.tail_frequency(k) - p) / se;
    detail += " z" + std::to_string(k) + "=" + fmt(z);
    if (std::abs(z) > 4) return {false, detail};
  }
  return {true, detail};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"table1_reproduction", table1},
      {"oracle_equivalence", oracle_equivalence},
      {"pollak_consistency", pollak},
      {"abel_identity", abel},
      {"row_sums", row_sums},
      {"tail_sum_forms_agree", s_forms},
      {"ratio_limits", ratio_limits},
      {"rayleigh_trend", rayleigh_trend},
      {"density_integral", density_integral},
      {"tree_function_fidelity", tree_fidelity},
      {"fig1_pmf_agreement", fig1},
      {"fig2_ordering", fig2},
      {"monte_carlo_calibration", monte_carlo},
  };
  int failed = 0;
  int index = 0;
  for (const auto& [name, fn] : criteria) {
    ++index;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!o.passed) ++failed;
    std::printf("%-4s %2d %-26s %8.3f s  %s\n", o.passed ? "PASS" : "FAIL", index, name.c_str(), secs,
                o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
