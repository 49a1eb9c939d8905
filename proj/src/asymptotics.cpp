#include "parking/asymptotics.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace parking {
namespace {

const double kInvE = std::exp(-1.0);

void require_finite(double v, const char* what) {
  if (!std::isfinite(v)) throw std::domain_error(std::string(what) + ": argument must be finite");
}

double tree_seed(double v) {
  const double ev = std::numbers::e * v;
  if (ev > 0.8) {
    // Expansion about the branch point v = 1/e.
    const double p = std::sqrt(std::max(0.0, 2.0 * (1.0 - ev)));
    return 1.0 - p + p * p / 3.0 - 11.0 / 72.0 * p * p * p;
  }
  // Truncated series sum_{i>=1} i^(i-1)/i! v^i.
  double sum = 0.0;
  double vi = 1.0;
  double fact = 1.0;
  for (int i = 1; i <= 12; ++i) {
    vi *= v;
    fact *= i;
    sum += std::pow(static_cast<double>(i), i - 1) / fact * vi;
  }
  return sum;
}

// Neumaier's variant of Kahan summation.
struct CompensatedSum {
  double sum = 0.0;
  double carry = 0.0;
  void add(double x) {
    const double t = sum + x;
    if (std::abs(sum) >= std::abs(x)) {
      carry += (sum - t) + x;
    } else {
      carry += (x - t) + sum;
    }
    sum = t;
  }
  double value() const { return sum + carry; }
};

}  // namespace

double tree_function(double v) {
  require_finite(v, "tree_function");
  if (v < 0.0 || v > kInvE * (1.0 + 4.0 * std::numeric_limits<double>::epsilon())) {
    throw std::domain_error("tree_function: v must lie in [0, 1/e]");
  }
  if (v == 0.0) return 0.0;
  if (v >= kInvE) return 1.0;

  // f(t) = t e^-t - v is increasing on [0, 1] with f(0) < 0 <= f(1).
  double lo = 0.0;
  double hi = 1.0;
  double t = std::clamp(tree_seed(v), 0.0, 1.0);
  for (int iter = 0; iter < 200; ++iter) {
    const double et = std::exp(-t);
    const double f = t * et - v;
    if (f == 0.0) return t;
    if (f < 0.0) {
      lo = t;
    } else {
      hi = t;
    }
    const double slope = et * (1.0 - t);
    double next = slope > 1e-300 ? t - f / slope : lo;
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (std::abs(next - t) <= 4.0 * std::numeric_limits<double>::epsilon() * t ||
        hi - lo <= 4.0 * std::numeric_limits<double>::epsilon()) {
      return next;
    }
    t = next;
  }
  return t;
}

double limiting_tail(double x, double y) {
  require_finite(x, "limiting_tail");
  require_finite(y, "limiting_tail");
  if (x < 0.0) throw std::domain_error("limiting_tail: x must be >= 0");
  return x > y ? std::exp(-2.0 * x * (x - y)) : 1.0;
}

double rayleigh_cdf(double x) {
  require_finite(x, "rayleigh_cdf");
  if (x < 0.0) throw std::domain_error("rayleigh_cdf: x must be >= 0");
  return -std::expm1(-2.0 * x * x);
}

double pmf_approx(std::int64_t n, std::int64_t m, std::int64_t k) {
  if (n < 1 || m < 0 || k < 0) throw std::domain_error("pmf_approx: need n >= 1, m >= 0, k >= 0");
  if (!(m < n + k)) throw std::domain_error("pmf_approx: outside regime m < n + k");
  const double nd = static_cast<double>(n);
  const double kd = static_cast<double>(k);
  const double gap = static_cast<double>(n - m);
  return 2.0 / nd * (2.0 * kd + gap) * std::exp(-2.0 * kd * (kd + gap) / nd);
}

double limiting_density(double x, double y, double alpha) {
  require_finite(x, "limiting_density");
  require_finite(y, "limiting_density");
  require_finite(alpha, "limiting_density");
  if (!(x > y)) throw std::domain_error("limiting_density: requires x > y");
  if (!(alpha > 0.0 && alpha < 1.0)) throw std::domain_error("limiting_density: alpha must lie in (0, 1)");
  const double beta = 1.0 - alpha;
  const double shift = x - beta * y;
  return (x - y) / std::sqrt(2.0 * std::numbers::pi * alpha * alpha * alpha * beta) *
         std::exp(-shift * shift / (2.0 * alpha * beta));
}

double density_integral_check(double x, double y) {
  require_finite(x, "density_integral_check");
  require_finite(y, "density_integral_check");
  if (!(x > y)) throw std::domain_error("density_integral_check: requires x > y");

  // alpha = sin^2(theta): d alpha = 2 sin cos d theta, alpha^3 (1-alpha) = sin^6 cos^2.
  const double scale = 2.0 * (x - y) / std::sqrt(2.0 * std::numbers::pi);
  auto integrand = [&](double theta) {
    const double s = std::sin(theta);
    const double c = std::cos(theta);
    const double s2 = s * s;
    const double c2 = c * c;
    if (s2 == 0.0) return 0.0;
    const double shift = x - c2 * y;
    const double denom = 2.0 * s2 * c2;
    if (denom == 0.0) return shift == 0.0 ? scale / s2 : 0.0;
    const double expo = -shift * shift / denom;
    if (expo < -745.0) return 0.0;
    return scale / s2 * std::exp(expo);
  };

  double error = 0.0;
  const double value = boost::math::quadrature::gauss_kronrod<double, 15>::integrate(
      integrand, 0.0, std::numbers::pi / 2.0, 20, 1e-13, &error);
  if (!std::isfinite(value) || error > 1e-9) {
    throw std::runtime_error("density_integral_check: quadrature did not converge (error estimate " +
                             std::to_string(error) + ")");
  }
  return value;
}

double full_lot_limit(double lambda) {
  require_finite(lambda, "full_lot_limit");
  if (lambda <= 0.0) throw std::domain_error("full_lot_limit: lambda must be > 0");
  if (lambda <= 1.0) return 0.0;
  return 1.0 - tree_function(lambda * std::exp(-lambda)) / lambda;
}

double full_lot_series(double lambda, std::int64_t terms) {
  require_finite(lambda, "full_lot_series");
  if (lambda <= 0.0) throw std::domain_error("full_lot_series: lambda must be > 0");
  if (terms < 1) throw std::domain_error("full_lot_series: terms must be >= 1");
  const double log_lambda = std::log(lambda);
  CompensatedSum sum;
  for (std::int64_t i = 0; i < terms; ++i) {
    const double id = static_cast<double>(i);
    const double log_term = id * log_lambda - std::lgamma(id + 1.0) +
                            (id - 1.0) * std::log(id + 1.0) - lambda * (1.0 + id);
    sum.add(std::exp(log_term));
  }
  return sum.value();
}

double phi(std::int64_t ell, std::int64_t k) {
  if (k < 0) throw std::domain_error("phi: k must be >= 0");
  if (k <= ell) return 0.0;
  CompensatedSum sum;
  double inv_fact = 1.0;
  for (std::int64_t i = 0; i < k; ++i) {
    if (i > 0) inv_fact /= static_cast<double>(i);
    const double sign = (i % 2 == 0) ? 1.0 : -1.0;
    sum.add(sign * inv_fact * std::pow(static_cast<double>(k - i), static_cast<double>(i)) *
            std::exp(static_cast<double>(k - i)));
  }
  return -static_cast<double>(k - ell) * sum.value();
}

double defect_ratio_limit(std::int64_t ell, std::int64_t k) {
  if (ell > 0) throw std::domain_error("defect_ratio_limit: requires ell <= 0 (denominator vanishes)");
  if (k < 0) throw std::domain_error("defect_ratio_limit: k must be >= 0");
  return (phi(ell, k) - phi(ell, k + 1)) / (phi(ell, 0) - phi(ell, 1));
}

}  // namespace parking
