#pragma once

namespace laqw {

// Special functions backing the entropy estimates and the statistical
// tests. Double precision, series/continued-fraction implementations;
// accuracy targets: erfc rel < 1e-12 on [0,10], igamc abs < 1e-10 for
// a <= 512, x <= 2048, regularized incomplete beta abs < 1e-12.

double erfc(double x);

// Regularized upper incomplete gamma Q(a, x).
double igamc(double a, double x);

// Regularized incomplete beta I_x(a, b).
double incbeta(double a, double b, double x);

// gamma-quantile of the Beta(a,b) distribution: x with I_x(a,b) = gamma.
// b == 0 is the degenerate all-successes boundary and returns 1.
double beta_quantile(double gamma, double a, double b);

// Standard normal CDF.
double normal_cdf(double x);

} // namespace laqw
