#include "parking/exact.hpp"

#include <stdexcept>
#include <string>

namespace parking {
namespace {

void require_nonnegative(const ParkingParams& p, const char* op) {
  if (p.n < 0 || p.m < 0 || p.k < 0) {
    throw std::invalid_argument(std::string(op) + ": n, m, k must be nonnegative");
  }
}

SignedCount pow_si(std::int64_t base, std::int64_t exp) {
  return ipow(SignedCount(static_cast<long>(base)), static_cast<unsigned long>(exp));
}

// S(n, m, k), nonnegative-term form, with C(m, .) supplied by the caller.
SignedCount tail_sum_with_row(std::int64_t n, std::int64_t m, std::int64_t k,
                              const std::vector<SignedCount>& row) {
  if (k <= m - n) return pow_si(n, m);
  if (k > m) return 0;
  const std::int64_t ell = n - m + k;  // >= 1 here
  SignedCount total = 0;
  SignedCount term;
  for (std::int64_t i = 0; i <= m - k; ++i) {
    // (m-k-i)^(m-i); the last term has base 0 and exponent k.
    term = pow_si(m - k - i, m - i);
    if (sgn(term) == 0) continue;
    if (i > 0) {
      term *= ell;
      term *= pow_si(ell + i, i - 1);
    }
    term *= row[static_cast<std::size_t>(i)];
    total += term;
  }
  return total;
}

SignedCount tail_sum_alternating_with_row(std::int64_t n, std::int64_t m, std::int64_t k,
                                          const std::vector<SignedCount>& row) {
  if (k <= m - n) return pow_si(n, m);
  if (k > m) return 0;
  const std::int64_t ell = n - m + k;
  SignedCount total = pow_si(n, m);
  SignedCount term;
  for (std::int64_t i = 0; i < k; ++i) {
    term = pow_si(k - i, i);
    term *= pow_si(n + k - i, m - 1 - i);
    term *= ell;
    term *= row[static_cast<std::size_t>(i)];
    if (i % 2 == 0) {
      total -= term;
    } else {
      total += term;
    }
  }
  if (sgn(total) < 0) {
    throw std::logic_error("tail_sum_alternating: negative result for n=" + std::to_string(n) +
                           " m=" + std::to_string(m) + " k=" + std::to_string(k));
  }
  return total;
}

}  // namespace

// ---------------------------------------------------------------------------
// DefectTable

DefectTable::DefectTable(std::int64_t r_max, std::int64_t s_max, std::int64_t k_max)
    : r_max_(r_max), s_max_(s_max), k_max_(k_max), k_cap_(k_max + s_max) {
  const auto size = static_cast<std::size_t>(r_max + 1) * static_cast<std::size_t>(s_max + 1) *
                    static_cast<std::size_t>(k_cap_ + 1);
  entries_.assign(size, SignedCount(0));
}

std::size_t DefectTable::index(std::int64_t r, std::int64_t s, std::int64_t k) const {
  return (static_cast<std::size_t>(s) * static_cast<std::size_t>(r_max_ + 1) +
          static_cast<std::size_t>(r)) *
             static_cast<std::size_t>(k_cap_ + 1) +
         static_cast<std::size_t>(k);
}

const SignedCount& DefectTable::raw(std::int64_t r, std::int64_t s, std::int64_t k) const {
  static const SignedCount zero = 0;
  if (r < 0 || s < 0 || k < 0 || k > k_cap_) return zero;
  return entries_[index(r, s, k)];
}

DefectTable DefectTable::build(std::int64_t r_max, std::int64_t s_max, std::int64_t k_max) {
  if (r_max < 0 || s_max < 0 || k_max < 0) {
    throw std::invalid_argument("build_table: bounds must be nonnegative");
  }
  DefectTable t(r_max, s_max, k_max);

  // binom[j] = C(j, 0..j) for every j = s + k that the fill touches.
  std::vector<std::vector<SignedCount>> binom;
  binom.reserve(static_cast<std::size_t>(s_max + t.k_cap_ + 1));
  for (std::int64_t j = 0; j <= s_max + t.k_cap_; ++j) binom.push_back(binomial_row(j));

  for (std::int64_t s = 0; s <= s_max; ++s) {
    const std::int64_t k_level = k_max + (s_max - s);
    for (std::int64_t r = 0; r <= r_max; ++r) {
      for (std::int64_t k = 0; k <= k_level; ++k) {
        SignedCount v = (r == 0 && s == 0 && k == 0) ? 1 : 0;
        if (k == 0) v += t.raw(r - 1, s, 0);
        if (s > 0) {
          const auto& row = binom[static_cast<std::size_t>(s + k)];
          for (std::int64_t i = 0; i <= k + 1; ++i) {
            const SignedCount& prev = t.raw(r, s - 1, i);
            if (sgn(prev) == 0) continue;
            v += row[static_cast<std::size_t>(k + 1 - i)] * prev;
          }
        }
        t.entries_[t.index(r, s, k)] = std::move(v);
      }
    }
  }
  return t;
}

Count DefectTable::at(std::int64_t r, std::int64_t s, std::int64_t k) const {
  if (r < 0 || s < 0 || k < 0) return Count{};
  if (r > r_max_ || s > s_max_ || k > k_max_) {
    throw std::out_of_range("DefectTable: index (" + std::to_string(r) + "," + std::to_string(s) +
                            "," + std::to_string(k) + ") outside table bounds");
  }
  return Count(raw(r, s, k));
}

// ---------------------------------------------------------------------------

Count DefectDistribution::total() const {
  Count sum;
  for (const auto& c : counts) sum += c;
  return sum;
}

std::vector<double> DefectDistribution::probabilities() const {
  const Count denom = ipow(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(m));
  std::vector<double> out;
  out.reserve(counts.size());
  for (const auto& c : counts) out.push_back(ratio_to_double(c, denom));
  return out;
}

std::vector<SignedCount> binomial_row(std::int64_t m) {
  if (m < 0) throw std::invalid_argument("binomial_row: negative m");
  std::vector<SignedCount> row(static_cast<std::size_t>(m + 1));
  row[0] = 1;
  for (std::int64_t i = 0; i < m; ++i) {
    SignedCount next = row[static_cast<std::size_t>(i)] * (m - i);
    mpz_divexact_ui(next.get_mpz_t(), next.get_mpz_t(), static_cast<unsigned long>(i + 1));
    row[static_cast<std::size_t>(i + 1)] = std::move(next);
  }
  return row;
}

DefectTable build_table(std::int64_t r_max, std::int64_t s_max, std::int64_t k_max) {
  return DefectTable::build(r_max, s_max, k_max);
}

Count defect_count_recurrence(const ParkingParams& p) {
  require_nonnegative(p, "defect_count_recurrence");
  const TableParams t{p.n - p.m + p.k, p.m - p.k, p.k};
  if (t.r < 0 || t.s < 0) return Count{};
  return build_table(t.r, t.s, t.k).at(t);
}

Count tail_sum(const ParkingParams& p) {
  require_nonnegative(p, "tail_sum");
  return Count(tail_sum_with_row(p.n, p.m, p.k, binomial_row(p.m)));
}

Count tail_sum_alternating(const ParkingParams& p) {
  require_nonnegative(p, "tail_sum_alternating");
  return Count(tail_sum_alternating_with_row(p.n, p.m, p.k, binomial_row(p.m)));
}

Count defect_count_explicit(const ParkingParams& p) {
  require_nonnegative(p, "defect_count_explicit");
  if (p.k > p.m) return Count{};
  const auto row = binomial_row(p.m);
  return Count(tail_sum_with_row(p.n, p.m, p.k, row) - tail_sum_with_row(p.n, p.m, p.k + 1, row));
}

PollakCount parking_function_count(std::int64_t n, std::int64_t m) {
  if (n < 0 || m < 0) throw std::invalid_argument("parking_function_count: negative argument");
  if (m > n) return {Count{}, PollakStatus::precondition_violated};
  if (m == 0) return {Count(1), PollakStatus::ok};
  SignedCount v = pow_si(n + 1, m - 1);
  v *= (n + 1 - m);
  return {Count(std::move(v)), PollakStatus::ok};
}

bool abel_identity_check(std::int64_t a, std::int64_t b, std::int64_t m) {
  if (a < 0 || b < 0 || m < 0) throw std::invalid_argument("abel_identity_check: negative argument");
  const auto row = binomial_row(m);
  SignedCount lhs = 0;
  SignedCount term;
  for (std::int64_t i = 0; i <= m; ++i) {
    term = pow_si(b - i, m - i);
    if (i > 0) {
      term *= a;
      term *= pow_si(a + i, i - 1);
    }
    term *= row[static_cast<std::size_t>(i)];
    lhs += term;
  }
  return cmp(lhs, pow_si(a + b, m)) == 0;
}

DefectDistribution defect_distribution(std::int64_t n, std::int64_t m) {
  if (n < 0 || m < 0) throw std::invalid_argument("defect_distribution: negative argument");
  if (n == 0 && m >= 1) {
    throw std::invalid_argument("defect_distribution: no spaces (n = 0) with m >= 1 drivers");
  }
  const auto row = binomial_row(m);
  DefectDistribution d{n, m, {}};
  d.counts.reserve(static_cast<std::size_t>(m + 1));
  SignedCount upper = tail_sum_with_row(n, m, 0, row);
  for (std::int64_t k = 0; k <= m; ++k) {
    SignedCount lower = tail_sum_with_row(n, m, k + 1, row);
    d.counts.emplace_back(upper - lower);
    upper = std::move(lower);
  }
  return d;
}

bool tail_upper_bound_check(const ParkingParams& p) {
  require_nonnegative(p, "tail_upper_bound_check");
  if (p.k > p.m) throw std::invalid_argument("tail_upper_bound_check: requires k <= m");
  SignedCount falling = 1;  // m!/(m-k)!
  for (std::int64_t j = 0; j < p.k; ++j) falling *= (p.m - j);
  const SignedCount bound = falling * pow_si(p.n, p.m - p.k);
  return cmp(tail_sum(p).value(), bound) <= 0;
}

}  // namespace parking
