// Direct simulation of the linear parking process.
//
// Driver i goes to space choices[i] and takes the first free space numbered
// at least that; with none left, the driver walks. This is linear probing
// without wrap-around.
#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "parking/exact.hpp"
#include "parking/rng.hpp"

namespace parking {

/// Thrown when an exhaustive enumeration would exceed its cap.
class CapExceeded : public std::runtime_error {
public:
  CapExceeded(std::uint64_t cap, const std::string& what)
      : std::runtime_error(what), cap_(cap) {}
  std::uint64_t cap() const { return cap_; }

private:
  std::uint64_t cap_;
};

/// Driver choices on an n-space lot; every choice is in [1, n].
class PreferenceSequence {
public:
  /// Throws std::invalid_argument on an out-of-range choice or n < 1.
  PreferenceSequence(std::int64_t n, std::vector<std::int64_t> choices);

  std::int64_t n() const { return n_; }
  std::int64_t m() const { return static_cast<std::int64_t>(choices_.size()); }
  const std::vector<std::int64_t>& choices() const { return choices_; }

private:
  std::int64_t n_;
  std::vector<std::int64_t> choices_;
};

struct ParkOutcome {
  /// Space taken by each driver, or nullopt if the driver walked.
  std::vector<std::optional<std::int64_t>> assignment;
  std::int64_t occupied = 0;
  std::int64_t defect = 0;
};

/// Next-free-space union-find; amortized near-constant per driver.
ParkOutcome park(const PreferenceSequence& prefs);

/// Linear scan per driver, O(n m). Reference for park().
ParkOutcome park_naive(const PreferenceSequence& prefs);

/// Evolving lot with incremental arrivals.
class CarPark {
public:
  explicit CarPark(std::int64_t n);

  /// Parks one driver; returns the space or nullopt if the driver walked.
  std::optional<std::int64_t> arrive(std::int64_t choice);

  std::int64_t spaces() const { return n_; }
  std::int64_t occupied() const { return occupied_; }
  bool full() const { return occupied_ == n_; }

private:
  std::int64_t find(std::int64_t x);

  std::int64_t n_;
  std::int64_t occupied_ = 0;
  // next_[x]: candidate for the smallest free space >= x; n_+1 means none.
  std::vector<std::int64_t> next_;
};

inline constexpr std::uint64_t kDefaultEnumerationCap = 100'000'000;

/// Tallies defects over all n^m preference sequences. Throws CapExceeded if
/// n^m > cap; never truncates.
DefectDistribution enumerate_exhaustive(std::int64_t n, std::int64_t m,
                                        std::uint64_t cap = kDefaultEnumerationCap);

struct EmpiricalDistribution {
  std::int64_t n = 0;
  std::int64_t m = 0;
  std::uint64_t trials = 0;
  std::vector<std::uint64_t> histogram;  // index k = defect, size m+1

  double frequency(std::int64_t k) const;
  /// Fraction of trials with defect >= k.
  double tail_frequency(std::int64_t k) const;
};

inline constexpr std::uint64_t kTrialsPerBlock = 4096;

/// Draws `trials` uniform preference sequences. Trials are split into blocks
/// of kTrialsPerBlock, block b using derive_seed(seed, b); the merged
/// histogram is independent of `workers`. workers = 0 picks the hardware count.
EmpiricalDistribution sample_empirical(std::int64_t n, std::int64_t m, std::uint64_t trials,
                                       Seed seed, unsigned workers = 0);

/// Sends uniform single-car choices into one lot until it is full; returns
/// the number of cars sent, walkers included.
std::int64_t cars_until_full(std::int64_t n, Seed seed);

}  // namespace parking
