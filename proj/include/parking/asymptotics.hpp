// Limiting formulas for defective parking.
//
// Every function returns a finite double or throws std::domain_error.
#pragma once

#include <cstdint>

namespace parking {

/// T(v) on [0, 1/e]: the root t in [0, 1] of t e^(-t) = v.
/// Safeguarded Newton iteration with a bisection fallback near v = 1/e.
double tree_function(double v);

/// Limit of P(at least floor(x sqrt n) drivers unparked) with
/// m = n + floor(y sqrt n): exp(-2x(x-y)) for x > y, else 1. Requires x >= 0.
double limiting_tail(double x, double y);

/// 1 - exp(-2x^2).
double rayleigh_cdf(double x);

/// (2/n)(2k-m+n) exp(-2k(k-m+n)/n) as an estimate of cp(n,m,k)/n^m.
/// Only defined for m < n + k and n >= 1.
double pmf_approx(std::int64_t n, std::int64_t m, std::int64_t k);

/// Limiting scaled term density in alpha in (0, 1); requires x > y.
double limiting_density(double x, double y, double alpha);

/// Integral of limiting_density over (0, 1), after alpha = sin^2(theta).
/// Throws std::runtime_error if adaptive quadrature fails to converge.
double density_integral_check(double x, double y);

/// Limit of P(lot full) with m = floor(lambda n): 0 for lambda <= 1,
/// 1 - T(lambda e^-lambda)/lambda otherwise. Requires lambda > 0.
double full_lot_limit(double lambda);

/// Partial sum over i < terms of (lambda^i / i!) (i+1)^(i-1) e^(-lambda(1+i)),
/// which tends to T(lambda e^-lambda)/lambda.
double full_lot_series(double lambda, std::int64_t terms);

/// Limit of n (S(n, n+ell, k)/n^(n+ell) - 1); zero for k <= ell.
double phi(std::int64_t ell, std::int64_t k);

/// Limit of cp(n, n+ell, k)/cp(n, n+ell, 0); requires ell <= 0.
double defect_ratio_limit(std::int64_t ell, std::int64_t k);

}  // namespace parking
