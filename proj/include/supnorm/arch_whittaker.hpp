#pragma once

#include <functional>

#include "supnorm/local_whittaker.hpp"

namespace supnorm {

/// K_{it}(x) via adaptive quadrature of int_0^inf exp(-x cosh u) cos(tu) du.
/// Truncated where exp(-x cosh u) underflows past 1e-18 of the peak.
double bessel_K(double t, double x);

/// Independent power-series evaluation through I_{+-it}; oracle for bessel_K.
double bessel_K_series(double t, double x);

/// |Gamma(1/2+it) Gamma(1/2-it)| = pi / cosh(pi t).
double gamma_half_norm(double t);

/// Normalized spherical Whittaker value at a(y), x = 0; calibrated so the
/// L^2(dy/|y|) mass over (0, inf), doubled for the two signs, equals 1.
double w_infty(double t, double y);

/// Numeric mass 2 * int_0^inf w_infty(t,y)^2 dy/y over a wide window.
double w_infty_mass(double t);

struct GlobalBoundResult {
  double value;
  int k_terms;            // number of k shells that contributed
  long long n_max;        // largest n index reached before truncation
  int dominant_k;
  long long dominant_n;
  double alt_value;       // same sum indexed over all integers n >= 1
};

using CoefficientSource = std::function<double(long long)>;

/// Numeric Whittaker-expansion bound at height y: sum over k >= 0 and
/// n coprime to p of 2 |lam(n)| / sqrt(n) * |W_inf(n y p^{k-m})| *
/// sqrt(S_local(valuation k-m)). Terms truncate once the Bessel argument
/// passes the decay cutoff.
GlobalBoundResult whittaker_global_bound(double y,
                                         const LocalRepDescriptor& desc,
                                         double t,
                                         const CoefficientSource& lambda_abs);

}  // namespace supnorm
