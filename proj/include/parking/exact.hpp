// Exact enumeration of defective parking functions.
//
// cp(n, m, k) counts the n^m preference sequences of m drivers on a linear
// car park with n spaces that leave exactly k drivers unparked. Two
// independent routes are provided:
//
//   * the three-index recurrence a(r, s, k) with r empty spaces, s occupied
//     spaces and k departed drivers, so cp(n, m, k) = a(n-m+k, m-k, k);
//   * the closed-form tail sums S(n, m, k) (at least k drivers unparked),
//     cp = S(k) - S(k+1), in a nonnegative-term form and an alternating form.
//
// All arithmetic is exact. The i = 0 factor l * (l+i)^(i-1) of the tail sums
// is taken as 1, and 0^0 = 1, so every term is an integer.
#pragma once

#include <cstdint>
#include <vector>

#include "parking/count.hpp"

namespace parking {

struct ParkingParams {
  std::int64_t n = 0;  // spaces
  std::int64_t m = 0;  // drivers
  std::int64_t k = 0;  // defect
};

struct TableParams {
  std::int64_t r = 0;  // unoccupied spaces
  std::int64_t s = 0;  // occupied spaces
  std::int64_t k = 0;  // departed drivers
};

/// Memoized a(r, s, k) for 0 <= r <= r_max, 0 <= s <= s_max, 0 <= k <= k_max.
///
/// Immutable once built. Internally the k capacity at level s is
/// k_max + (s_max - s), since a(r, s, k) consumes a(r, s-1, i) for i <= k+1.
class DefectTable {
public:
  /// Throws std::invalid_argument on negative bounds.
  static DefectTable build(std::int64_t r_max, std::int64_t s_max, std::int64_t k_max);

  /// Any negative index yields 0. Indices above the bounds throw std::out_of_range.
  Count at(std::int64_t r, std::int64_t s, std::int64_t k) const;
  Count at(const TableParams& p) const { return at(p.r, p.s, p.k); }

  std::int64_t r_max() const { return r_max_; }
  std::int64_t s_max() const { return s_max_; }
  std::int64_t k_max() const { return k_max_; }

private:
  DefectTable(std::int64_t r_max, std::int64_t s_max, std::int64_t k_max);

  std::size_t index(std::int64_t r, std::int64_t s, std::int64_t k) const;
  const SignedCount& raw(std::int64_t r, std::int64_t s, std::int64_t k) const;

  std::int64_t r_max_, s_max_, k_max_, k_cap_;
  std::vector<SignedCount> entries_;
};

/// Defect counts cp(n, m, k) for k = 0..m.
struct DefectDistribution {
  std::int64_t n = 0;
  std::int64_t m = 0;
  std::vector<Count> counts;

  Count total() const;
  /// counts[k] / n^m through the exact-to-float bridge.
  std::vector<double> probabilities() const;
};

/// C(m, 0..m), built by exact row iteration.
std::vector<SignedCount> binomial_row(std::int64_t m);

DefectTable build_table(std::int64_t r_max, std::int64_t s_max, std::int64_t k_max);

/// a(n-m+k, m-k, k); zero when either index is negative.
Count defect_count_recurrence(const ParkingParams& p);

/// S(n, m, k) from the nonnegative-term sum. This is the reference form.
Count tail_sum(const ParkingParams& p);

/// S(n, m, k) from the alternating-sign rewrite, evaluated in SignedCount.
/// A negative intermediate result is an internal error (std::logic_error).
Count tail_sum_alternating(const ParkingParams& p);

/// S(n, m, k) - S(n, m, k+1).
Count defect_count_explicit(const ParkingParams& p);

enum class PollakStatus { ok, precondition_violated };

struct PollakCount {
  Count count;
  PollakStatus status = PollakStatus::ok;
};

/// (n+1-m)(n+1)^(m-1) for 0 <= m <= n. For m > n the count is 0 and
/// status is precondition_violated.
PollakCount parking_function_count(std::int64_t n, std::int64_t m);

/// Checks sum_i C(m,i) a (a+i)^(i-1) (b-i)^(m-i) == (a+b)^m exactly.
bool abel_identity_check(std::int64_t a, std::int64_t b, std::int64_t m);

/// Throws std::invalid_argument for n = 0 with m >= 1 (no spaces) or
/// negative arguments. n = m = 0 gives the single empty assignment.
DefectDistribution defect_distribution(std::int64_t n, std::int64_t m);

/// S(n, m, k) <= m!/(m-k)! * n^(m-k). Requires k <= m.
bool tail_upper_bound_check(const ParkingParams& p);

}  // namespace parking
