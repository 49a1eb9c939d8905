#include "parking/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>

#include "parking/asymptotics.hpp"
#include "parking/published.hpp"
#include "parking/simulation.hpp"

namespace parking::verify {
namespace {

using Clock = std::chrono::steady_clock;

std::string loc(std::int64_t n, std::int64_t m, std::int64_t k) {
  return "(n=" + std::to_string(n) + ", m=" + std::to_string(m) + ", k=" + std::to_string(k) + ")";
}

SignedCount npow(std::int64_t n, std::int64_t m) {
  return ipow(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(m)).value();
}

// Each check returns an empty string on success, otherwise the first failure.
using Check = std::function<std::string()>;

class Suite {
public:
  explicit Suite(const Hooks& hooks) : hooks_(hooks) {}

  SignedCount cp(std::int64_t n, std::int64_t m, std::int64_t k) const {
    return hooks_.tail_sum({n, m, k}).value() - hooks_.tail_sum({n, m, k + 1}).value();
  }

  void add(std::string name, const Check& check) {
    CheckResult r{std::move(name), false, {}, 0.0};
    const auto start = Clock::now();
    try {
      r.detail = check();
      r.passed = r.detail.empty();
    } catch (const std::exception& e) {
      r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    results_.push_back(std::move(r));
  }

  std::vector<CheckResult> take() { return std::move(results_); }

  const Hooks& hooks() const { return hooks_; }

private:
  const Hooks& hooks_;
  std::vector<CheckResult> results_;
};

std::string check_table1(const Suite& s) {
  const auto table = build_table(9, 10, 9);
  for (std::int64_t n = 1; n <= 10; ++n) {
    for (std::int64_t k = 0; k < n; ++k) {
      const auto& want = published::kSquareDefectCounts[static_cast<std::size_t>(n - 1)]
                                                       [static_cast<std::size_t>(k)];
      const Count expected = Count::from_string(want);
      if (table.at(k, n - k, k) != expected) return "recurrence mismatch at " + loc(n, n, k);
      if (cmp(s.cp(n, n, k), expected.value()) != 0) return "explicit mismatch at " + loc(n, n, k);
    }
  }
  return {};
}

std::string check_three_way(const Suite& s, std::int64_t n_max, std::int64_t m_max) {
  const auto table = build_table(n_max, m_max, m_max);
  for (std::int64_t n = 1; n <= n_max; ++n) {
    for (std::int64_t m = 0; m <= m_max; ++m) {
      for (std::int64_t k = 0; k <= m; ++k) {
        const Count rec = table.at(n - m + k, m - k, k);
        if (cmp(rec.value(), s.cp(n, m, k)) != 0) return "recurrence != explicit at " + loc(n, m, k);
        if (s.hooks().tail_sum({n, m, k}) != s.hooks().tail_sum_alternating({n, m, k})) {
          return "tail_sum != tail_sum_alternating at " + loc(n, m, k);
        }
      }
    }
  }
  return {};
}

std::string check_row_sums(const Suite& s, std::int64_t n_max, std::int64_t m_max) {
  for (std::int64_t n = 1; n <= n_max; ++n) {
    for (std::int64_t m = 0; m <= m_max; ++m) {
      SignedCount sum = 0;
      for (std::int64_t k = 0; k <= m; ++k) sum += s.cp(n, m, k);
      if (cmp(sum, npow(n, m)) != 0) return "row sum != n^m at " + loc(n, m, -1);
    }
  }
  return {};
}

std::string check_support(const Suite& s, std::int64_t n_max, std::int64_t m_max) {
  for (std::int64_t n = 1; n <= n_max; ++n) {
    for (std::int64_t m = 0; m <= m_max; ++m) {
      for (std::int64_t k = 0; k < m - n; ++k) {
        if (sgn(s.cp(n, m, k)) != 0) return "nonzero below support at " + loc(n, m, k);
      }
      if (m >= 1 && sgn(s.cp(n, m, m)) != 0) return "cp(n,m,m) != 0 at " + loc(n, m, m);
    }
    if (cmp(s.cp(n, n, n - 1), 1) != 0) return "cp(n,n,n-1) != 1 at " + loc(n, n, n - 1);
  }
  return {};
}

std::string check_monotone_tail(const Suite& s, std::int64_t n_max, std::int64_t m_max) {
  for (std::int64_t n = 1; n <= n_max; ++n) {
    for (std::int64_t m = 0; m <= m_max; ++m) {
      for (std::int64_t k = 0; k <= m + 1; ++k) {
        if (s.hooks().tail_sum({n, m, k}) < s.hooks().tail_sum({n, m, k + 1})) {
          return "S increases at " + loc(n, m, k);
        }
      }
    }
  }
  return {};
}

std::string check_closed_form_a0(std::int64_t r_max, std::int64_t s_max) {
  const auto table = build_table(r_max, s_max, 0);
  for (std::int64_t r = 0; r <= r_max; ++r) {
    for (std::int64_t s = 0; s <= s_max; ++s) {
      SignedCount want = 1;
      if (s > 0) want = (r + 1) * ipow(SignedCount(r + s + 1), static_cast<unsigned long>(s - 1));
      if (cmp(table.at(r, s, 0).value(), want) != 0) {
        return "a(r,s,0) != (r+1)(r+s+1)^(s-1) at r=" + std::to_string(r) + " s=" + std::to_string(s);
      }
    }
  }
  return {};
}

std::string check_pollak(const Suite& s) {
  for (std::int64_t n = 0; n <= 20; ++n) {
    for (std::int64_t m = 0; m <= n; ++m) {
      const auto p = parking_function_count(n, m);
      if (p.status != PollakStatus::ok) return "unexpected status at " + loc(n, m, 0);
      if (cmp(s.cp(n, m, 0), p.count.value()) != 0) return "Pollak mismatch at " + loc(n, m, 0);
    }
  }
  return {};
}

std::string check_special_cases(const Suite& s) {
  for (std::int64_t n = 2; n <= 20; ++n) {
    const SignedCount nn = npow(n, n);
    const SignedCount s2 = nn - 2 * ipow(SignedCount(n + 2), static_cast<unsigned long>(n - 1)) +
                           2 * n * ipow(SignedCount(n + 1), static_cast<unsigned long>(n - 2));
    if (cmp(s.hooks().tail_sum({n, n, 2}).value(), s2) != 0) return "S(n,n,2) closed form fails at n=" + std::to_string(n);
    const SignedCount snm2 = ipow(SignedCount(2), static_cast<unsigned long>(n)) + n * (n - 2);
    if (cmp(s.hooks().tail_sum({n, n, n - 2}).value(), snm2) != 0) {
      return "S(n,n,n-2) closed form fails at n=" + std::to_string(n);
    }
    const SignedCount s1 = nn - ipow(SignedCount(n + 1), static_cast<unsigned long>(n - 1));
    if (cmp(s.hooks().tail_sum({n, n, 1}).value(), s1) != 0) return "S(n,n,1) closed form fails at n=" + std::to_string(n);
    if (s.hooks().tail_sum({n, n, n - 1}) != Count(1)) return "S(n,n,n-1) != 1 at n=" + std::to_string(n);
  }
  return {};
}

std::string check_abel() {
  for (std::int64_t a = 0; a <= 8; ++a)
    for (std::int64_t b = 0; b <= 8; ++b)
      for (std::int64_t m = 0; m <= 8; ++m)
        if (!abel_identity_check(a, b, m)) return "Abel identity fails at " + loc(a, b, m);
  return {};
}

std::string check_upper_bound(std::int64_t lim) {
  for (std::int64_t n = 1; n <= lim; ++n)
    for (std::int64_t m = 0; m <= lim; ++m)
      for (std::int64_t k = 0; k <= m; ++k)
        if (!tail_upper_bound_check({n, m, k})) return "upper bound fails at " + loc(n, m, k);
  return {};
}

std::string check_oracle(const Suite& s, Level level) {
  const std::int64_t n_max = level == Level::full ? 1000 : 5;
  const std::int64_t m_max = level == Level::full ? 20 : 5;
  const Count limit(level == Level::full ? 1'000'000 : 3125);
  for (std::int64_t n = 1; n <= n_max; ++n) {
    for (std::int64_t m = 0; m <= m_max; ++m) {
      if (ipow(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(m)) > limit) break;
      const auto brute = enumerate_exhaustive(n, m);
      for (std::int64_t k = 0; k <= m; ++k) {
        if (cmp(brute.counts[static_cast<std::size_t>(k)].value(), s.cp(n, m, k)) != 0) {
          return "enumeration != explicit at " + loc(n, m, k);
        }
      }
    }
  }
  return {};
}

std::string check_park_fast_vs_naive(int instances) {
  std::mt19937_64 rng(20080303);
  for (int t = 0; t < instances; ++t) {
    const std::int64_t n = 1 + static_cast<std::int64_t>(rng() % 40);
    const std::int64_t m = static_cast<std::int64_t>(rng() % 60);
    std::vector<std::int64_t> choices(static_cast<std::size_t>(m));
    for (auto& c : choices) c = 1 + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(n));
    const PreferenceSequence prefs(n, choices);
    const auto a = park(prefs);
    const auto b = park_naive(prefs);
    if (a.assignment != b.assignment || a.defect != b.defect || a.occupied != b.occupied) {
      return "park != park_naive on instance " + std::to_string(t);
    }
  }
  return {};
}

std::string check_permutation_invariance(int multisets) {
  std::mt19937_64 rng(7);
  for (int t = 0; t < multisets; ++t) {
    const std::int64_t n = 1 + static_cast<std::int64_t>(rng() % 6);
    const std::int64_t m = 1 + static_cast<std::int64_t>(rng() % 6);
    std::vector<std::int64_t> choices(static_cast<std::size_t>(m));
    for (auto& c : choices) c = 1 + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(n));
    std::sort(choices.begin(), choices.end());
    const auto defect = park(PreferenceSequence(n, choices)).defect;
    do {
      if (park(PreferenceSequence(n, choices)).defect != defect) {
        return "defect depends on driver order for multiset " + std::to_string(t);
      }
    } while (std::next_permutation(choices.begin(), choices.end()));
  }
  return {};
}

std::string check_tree_function() {
  const double top = std::exp(-1.0);
  double prev = -1.0;
  for (int i = 0; i < 1000; ++i) {
    const double v = top * i / 999.0;
    const double t = tree_function(v);
    if (std::abs(t * std::exp(-t) - v) > 1e-12) return "residual above 1e-12 at v=" + std::to_string(v);
    if (i > 0 && !(t > prev)) return "T not increasing at v=" + std::to_string(v);
    prev = t;
  }
  for (double lambda : {0.1, 0.5, 0.9, 1.0}) {
    if (std::abs(tree_function(lambda * std::exp(-lambda)) - lambda) > 1e-10) {
      return "T(lambda e^-lambda) != lambda at lambda=" + std::to_string(lambda);
    }
  }
  return {};
}

std::string check_density_integral() {
  for (double x : {0.25, 0.5, 1.0, 2.0}) {
    for (double y : {-1.0, 0.0, 0.5}) {
      if (!(x > y)) continue;
      const double got = density_integral_check(x, y);
      if (std::abs(got - std::exp(-2.0 * x * (x - y))) > 1e-6) {
        return "quadrature off at x=" + std::to_string(x) + " y=" + std::to_string(y);
      }
    }
  }
  return {};
}

std::string check_full_lot_series() {
  for (double lambda : {0.2, 0.5, 2.0, 4.0}) {
    const double want = tree_function(lambda * std::exp(-lambda)) / lambda;
    if (std::abs(full_lot_series(lambda, 200) - want) > 1e-10) {
      return "series disagrees with T at lambda=" + std::to_string(lambda);
    }
  }
  // At lambda = 1 the tail decays only like terms^(-1/2).
  double prev = 1.0;
  for (std::int64_t terms : {10, 100, 1000, 10000}) {
    const double err = std::abs(full_lot_series(1.0, terms) - 1.0);
    if (!(err < prev)) return "lambda=1 series error not decreasing at terms=" + std::to_string(terms);
    prev = err;
  }
  return {};
}

std::string check_ratio_limits(const Suite& s, const std::vector<std::int64_t>& sizes, bool final_band) {
  const double e = std::numbers::e;
  const double targets[] = {2 * e - 3, 3 * e * e - 8 * e + 3.5};
  for (int k = 1; k <= 2; ++k) {
    double prev = INFINITY;
    for (std::int64_t n : sizes) {
      const double ratio = ratio_to_double(s.cp(n, n, k), s.cp(n, n, 0));
      const double err = std::abs(ratio - targets[k - 1]);
      if (!(err < prev)) return "error not decreasing for k=" + std::to_string(k) + " at n=" + std::to_string(n);
      prev = err;
    }
    if (final_band && prev > 5e-2) return "ratio outside 5e-2 band for k=" + std::to_string(k);
  }
  return {};
}

std::string check_phi_consistency(const Suite& s, std::int64_t small, std::int64_t large) {
  for (std::int64_t k = 1; k <= 3; ++k) {
    double errs[2];
    int idx = 0;
    for (std::int64_t n : {small, large}) {
      const SignedCount nn = npow(n, n);
      const SignedCount num = n * (s.hooks().tail_sum({n, n, k}).value() - nn);
      errs[idx++] = std::abs(ratio_to_double(num, nn) - phi(0, k));
    }
    if (!(errs[1] < errs[0])) return "phi(0," + std::to_string(k) + ") error not decreasing";
  }
  return {};
}

std::string check_rayleigh_trend(const Suite& s, const std::vector<std::int64_t>& sizes, bool final_band) {
  double prev = INFINITY;
  for (std::int64_t n : sizes) {
    const auto k = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
    const double p = ratio_to_double(s.hooks().tail_sum({n, n, k}).value(), npow(n, n));
    const double err = std::abs(p - std::exp(-2.0));
    if (!(err < prev)) return "error not decreasing at n=" + std::to_string(n);
    prev = err;
  }
  if (final_band && prev > 0.05) return "outside 0.05 band at largest n";
  return {};
}

std::string check_monte_carlo(const Suite& s, std::uint64_t trials) {
  const std::int64_t n = 100;
  const auto sample = sample_empirical(n, n, trials, Seed{20080303});
  for (std::int64_t k : {5, 10, 20}) {
    const double p = ratio_to_double(s.hooks().tail_sum({n, n, k}).value(), npow(n, n));
    const double se = std::sqrt(p * (1 - p) / static_cast<double>(trials));
    if (std::abs(sample.tail_frequency(k) - p) > 4 * se) {
      return "empirical tail outside 4 SE at k=" + std::to_string(k);
    }
  }
  return {};
}

}  // namespace

Level parse_level(const std::string& s) {
  if (s == "quick") return Level::quick;
  if (s == "full") return Level::full;
  throw std::invalid_argument("unknown level '" + s + "' (expected quick or full)");
}

std::vector<CheckResult> run(Level level, const Hooks& hooks) {
  const bool full = level == Level::full;
  Suite s(hooks);
  s.add("table1_reproduction", [&] { return check_table1(s); });
  s.add("recurrence_equals_explicit", [&] { return full ? check_three_way(s, 12, 14) : check_three_way(s, 8, 10); });
  s.add("row_sums", [&] { return full ? check_row_sums(s, 12, 14) : check_row_sums(s, 8, 10); });
  s.add("support", [&] { return check_support(s, 12, 14); });
  s.add("monotone_tail", [&] { return check_monotone_tail(s, 10, 12); });
  s.add("closed_form_a_k0", [&] { return check_closed_form_a0(12, 14); });
  s.add("pollak_consistency", [&] { return check_pollak(s); });
  s.add("special_cases_S", [&] { return check_special_cases(s); });
  s.add("abel_identity_grid", [&] { return check_abel(); });
  s.add("tail_upper_bound", [&] { return check_upper_bound(full ? 15 : 10); });
  s.add("oracle_equivalence", [&] { return check_oracle(s, level); });
  s.add("park_fast_equals_naive", [&] { return check_park_fast_vs_naive(full ? 10000 : 2000); });
  s.add("defect_order_invariance", [&] { return check_permutation_invariance(full ? 300 : 50); });
  s.add("tree_function_fidelity", [&] { return check_tree_function(); });
  s.add("density_integral_grid", [&] { return check_density_integral(); });
  s.add("full_lot_series", [&] { return check_full_lot_series(); });
  s.add("ratio_limits", [&] {
    return full ? check_ratio_limits(s, {250, 1000, 4000}, true) : check_ratio_limits(s, {250, 1000}, false);
  });
  s.add("phi_consistency", [&] {
    return full ? check_phi_consistency(s, 1000, 4000) : check_phi_consistency(s, 250, 1000);
  });
  s.add("rayleigh_trend", [&] {
    return full ? check_rayleigh_trend(s, {100, 400, 1600}, true) : check_rayleigh_trend(s, {100, 400}, false);
  });
  s.add("monte_carlo_calibration", [&] { return check_monte_carlo(s, full ? 100000 : 20000); });
  return s.take();
}

bool all_passed(const std::vector<CheckResult>& results) {
  return std::all_of(results.begin(), results.end(), [](const auto& r) { return r.passed; });
}

std::string render(const std::vector<CheckResult>& results) {
  std::ostringstream out;
  for (const auto& r : results) {
    char secs[32];
    std::snprintf(secs, sizeof secs, "%.3f", r.seconds);
    out << (r.passed ? "PASS" : "FAIL") << "  " << r.name << "  (" << secs << " s)";
    if (!r.detail.empty()) out << "  " << r.detail;
    out << '\n';
  }
  return out.str();
}

}  // namespace parking::verify
