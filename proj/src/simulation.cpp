#include "parking/simulation.hpp"

#include <algorithm>
#include <functional>
#include <string>
#include <thread>

namespace parking {

PreferenceSequence::PreferenceSequence(std::int64_t n, std::vector<std::int64_t> choices)
    : n_(n), choices_(std::move(choices)) {
  if (n_ < 1) throw std::invalid_argument("PreferenceSequence: n must be >= 1");
  for (std::size_t i = 0; i < choices_.size(); ++i) {
    if (choices_[i] < 1 || choices_[i] > n_) {
      throw std::invalid_argument("PreferenceSequence: choice " + std::to_string(choices_[i]) +
                                  " of driver " + std::to_string(i + 1) + " outside [1, " +
                                  std::to_string(n_) + "]");
    }
  }
}

CarPark::CarPark(std::int64_t n) : n_(n), next_(static_cast<std::size_t>(n + 2)) {
  if (n < 1) throw std::invalid_argument("CarPark: n must be >= 1");
  for (std::int64_t x = 0; x <= n + 1; ++x) next_[static_cast<std::size_t>(x)] = x;
}

std::int64_t CarPark::find(std::int64_t x) {
  std::int64_t root = x;
  while (next_[static_cast<std::size_t>(root)] != root) root = next_[static_cast<std::size_t>(root)];
  while (next_[static_cast<std::size_t>(x)] != root) {
    const std::int64_t up = next_[static_cast<std::size_t>(x)];
    next_[static_cast<std::size_t>(x)] = root;
    x = up;
  }
  return root;
}

std::optional<std::int64_t> CarPark::arrive(std::int64_t choice) {
  if (choice < 1 || choice > n_) {
    throw std::invalid_argument("CarPark: choice " + std::to_string(choice) + " out of range");
  }
  const std::int64_t space = find(choice);
  if (space > n_) return std::nullopt;
  next_[static_cast<std::size_t>(space)] = space + 1;
  ++occupied_;
  return space;
}

ParkOutcome park(const PreferenceSequence& prefs) {
  CarPark lot(prefs.n());
  ParkOutcome out;
  out.assignment.reserve(prefs.choices().size());
  for (std::int64_t c : prefs.choices()) out.assignment.push_back(lot.arrive(c));
  out.occupied = lot.occupied();
  out.defect = prefs.m() - out.occupied;
  return out;
}

ParkOutcome park_naive(const PreferenceSequence& prefs) {
  std::vector<bool> taken(static_cast<std::size_t>(prefs.n() + 1), false);
  ParkOutcome out;
  for (std::int64_t c : prefs.choices()) {
    std::optional<std::int64_t> spot;
    for (std::int64_t s = c; s <= prefs.n(); ++s) {
      if (!taken[static_cast<std::size_t>(s)]) {
        spot = s;
        break;
      }
    }
    if (spot) {
      taken[static_cast<std::size_t>(*spot)] = true;
      ++out.occupied;
    } else {
      ++out.defect;
    }
    out.assignment.push_back(spot);
  }
  return out;
}

DefectDistribution enumerate_exhaustive(std::int64_t n, std::int64_t m, std::uint64_t cap) {
  if (n < 0 || m < 0) throw std::invalid_argument("enumerate_exhaustive: negative argument");
  if (n == 0 && m >= 1) {
    throw std::invalid_argument("enumerate_exhaustive: no spaces (n = 0) with m >= 1 drivers");
  }
  const Count sequences = ipow(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(m));
  if (sequences > Count(cap)) {
    throw CapExceeded(cap, "enumerate_exhaustive: " + std::to_string(n) + "^" + std::to_string(m) +
                               " = " + sequences.to_string() +
                               " sequences exceeds the enumeration cap of " + std::to_string(cap));
  }

  std::vector<std::uint64_t> tally(static_cast<std::size_t>(m + 1), 0);
  std::vector<char> taken(static_cast<std::size_t>(n + 1), 0);

  // Depth-first over drivers; each level parks, recurses, then frees its space.
  std::function<void(std::int64_t, std::int64_t)> descend = [&](std::int64_t driver,
                                                                std::int64_t walked) {
    if (driver == m) {
      ++tally[static_cast<std::size_t>(walked)];
      return;
    }
    for (std::int64_t c = 1; c <= n; ++c) {
      std::int64_t s = c;
      while (s <= n && taken[static_cast<std::size_t>(s)]) ++s;
      if (s > n) {
        descend(driver + 1, walked + 1);
      } else {
        taken[static_cast<std::size_t>(s)] = 1;
        descend(driver + 1, walked);
        taken[static_cast<std::size_t>(s)] = 0;
      }
    }
  };
  descend(0, 0);

  DefectDistribution d{n, m, {}};
  d.counts.reserve(tally.size());
  for (auto t : tally) d.counts.emplace_back(t);
  return d;
}

double EmpiricalDistribution::frequency(std::int64_t k) const {
  if (k < 0 || k > m || trials == 0) return 0.0;
  return static_cast<double>(histogram[static_cast<std::size_t>(k)]) / static_cast<double>(trials);
}

double EmpiricalDistribution::tail_frequency(std::int64_t k) const {
  if (trials == 0 || k > m) return 0.0;
  std::uint64_t hits = 0;
  for (std::int64_t j = std::max<std::int64_t>(k, 0); j <= m; ++j) {
    hits += histogram[static_cast<std::size_t>(j)];
  }
  return static_cast<double>(hits) / static_cast<double>(trials);
}

namespace {

void run_block(std::int64_t n, std::int64_t m, std::uint64_t count, Seed seed,
               std::vector<std::uint64_t>& hist) {
  ChoiceStream stream(seed);
  for (std::uint64_t t = 0; t < count; ++t) {
    CarPark lot(n);
    for (std::int64_t i = 0; i < m; ++i) {
      lot.arrive(stream.next(static_cast<std::uint64_t>(n)));
    }
    ++hist[static_cast<std::size_t>(m - lot.occupied())];
  }
}

}  // namespace

EmpiricalDistribution sample_empirical(std::int64_t n, std::int64_t m, std::uint64_t trials,
                                       Seed seed, unsigned workers) {
  if (n < 1) throw std::invalid_argument("sample_empirical: n must be >= 1");
  if (m < 0) throw std::invalid_argument("sample_empirical: m must be >= 0");
  if (trials < 1) throw std::invalid_argument("sample_empirical: trials must be >= 1");

  const std::uint64_t blocks = (trials + kTrialsPerBlock - 1) / kTrialsPerBlock;
  if (workers == 0) workers = std::max(1U, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, blocks));

  std::vector<std::vector<std::uint64_t>> partial(
      workers, std::vector<std::uint64_t>(static_cast<std::size_t>(m + 1), 0));
  auto work = [&](unsigned w) {
    for (std::uint64_t b = w; b < blocks; b += workers) {
      const std::uint64_t begin = b * kTrialsPerBlock;
      const std::uint64_t count = std::min(kTrialsPerBlock, trials - begin);
      run_block(n, m, count, derive_seed(seed, b), partial[w]);
    }
  };
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work, w);
    work(0);
  }

  EmpiricalDistribution out{n, m, trials, std::vector<std::uint64_t>(static_cast<std::size_t>(m + 1), 0)};
  for (const auto& h : partial) {
    for (std::size_t k = 0; k < h.size(); ++k) out.histogram[k] += h[k];
  }
  return out;
}

std::int64_t cars_until_full(std::int64_t n, Seed seed) {
  if (n < 1) throw std::invalid_argument("cars_until_full: n must be >= 1");
  CarPark lot(n);
  ChoiceStream stream(seed);
  std::int64_t cars = 0;
  while (!lot.full()) {
    lot.arrive(stream.next(static_cast<std::uint64_t>(n)));
    ++cars;
  }
  return cars;
}

}  // namespace parking
