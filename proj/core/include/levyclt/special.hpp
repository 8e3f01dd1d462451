#pragma once

namespace levyclt {

// Standard normal CDF (erfc-based, accurate in both tails).
double normal_cdf(double x);

// Inverse standard normal CDF: rational approximation polished with one
// Newton step; |error| < 1e-13 on (0, 1).
double normal_quantile(double p);

// Regularised lower incomplete gamma P(a, x) (series / continued fraction).
double gamma_p(double a, double x);

// CDF of |Z| for Z standard normal in R^d (chi distribution with d degrees
// of freedom): P(|Z| <= r) = gamma_p(d/2, r^2/2).
double chi_cdf(double r, int d);

} // namespace levyclt
