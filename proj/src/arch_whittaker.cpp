#include "supnorm/arch_whittaker.hpp"

#include <cmath>

namespace supnorm {

namespace {

constexpr double kEulerGamma = 0.57721566490153286060;

Complex lanczos_gamma(Complex z) {
  static const double g = 7.0;
  static const double c[9] = {
      0.99999999999980993,  676.5203681218851,    -1259.1392167224028,
      771.32342877765313,   -176.61502916214059,  12.507343278686905,
      -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};
  if (z.real() < 0.5)
    return kPi / (std::sin(kPi * z) * lanczos_gamma(1.0 - z));
  z -= 1.0;
  Complex x = c[0];
  for (int i = 1; i < 9; ++i) x += c[i] / (z + (double)i);
  Complex t = z + g + 0.5;
  return std::sqrt(2.0 * kPi) * std::pow(t, z + 0.5) * std::exp(-t) * x;
}

struct Quadrature {
  double t, x;
  long long evals = 0;
  long long budget = 4'000'000;

  // integrand rescaled by e^x so the peak is O(1) for every x
  double f(double u) {
    ++evals;
    return std::exp(-x * (std::cosh(u) - 1.0)) * std::cos(t * u);
  }

  double simpson(double a, double b, double fa, double fm, double fb) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  }

  double adapt(double a, double b, double fa, double fm, double fb,
               double whole, double tol, int depth) {
    if (evals > budget)
      throw AccuracyError("bessel_K: quadrature budget exceeded, partial value " +
                          std::to_string(whole));
    double m = 0.5 * (a + b);
    double fl = f(0.5 * (a + m)), fr = f(0.5 * (m + b));
    double left = simpson(a, m, fa, fl, fm);
    double right = simpson(m, b, fm, fr, fb);
    if (depth <= 0 || std::abs(left + right - whole) < 15.0 * tol)
      return left + right + (left + right - whole) / 15.0;
    return adapt(a, m, fa, fl, fm, left, 0.5 * tol, depth - 1) +
           adapt(m, b, fm, fr, fb, right, 0.5 * tol, depth - 1);
  }
};

}  // namespace

double bessel_K(double t, double x) {
  if (x <= 0) throw std::domain_error("bessel_K: x must be positive");
  t = std::abs(t);
  if (x >= 700.0) return 0.0;
  // exp(-x cosh U) below 1e-18 relative to the peak exp(-x)
  double U = std::acosh(1.0 + 45.0 / x);
  Quadrature quad{t, x};
  double fa = quad.f(0.0), fm = quad.f(0.5 * U), fb = quad.f(U);
  double whole = quad.simpson(0.0, U, fa, fm, fb);
  // absolute tolerance: oscillatory cancellation can leave the value many
  // orders below the O(1) integrand
  double tol = 1e-15 * std::max(1.0, U);
  return std::exp(-x) * quad.adapt(0.0, U, fa, fm, fb, whole, tol, 30);
}

double bessel_K_series(double t, double x) {
  if (x <= 0) throw std::domain_error("bessel_K_series: x must be positive");
  t = std::abs(t);
  double L = std::log(0.5 * x);
  if (t < 1e-12) {
    // K_0 via the classical log series; extended precision because the two
    // pieces cancel to ~x digits at x >> 1
    long double i0 = 1.0L, sum = 0.0L, term = 1.0L, h = 0.0L;
    long double xx = (long double)x;
    for (int k = 1; k <= 200; ++k) {
      term *= 0.25L * xx * xx / ((long double)k * k);
      h += 1.0L / k;
      i0 += term;
      sum += term * h;
      if (term < 1e-24L * (1.0L + std::abs((double)sum))) break;
    }
    return (double)(-((long double)L + (long double)kEulerGamma) * i0 + sum);
  }
  // K_{it} = -pi Im(I_{it}) / sinh(pi t), I_{it} summed termwise in extended
  // precision (the imaginary part cancels heavily for x >> 1)
  Complex it{0.0, t};
  Complex c0 = std::exp(it * L) / lanczos_gamma(1.0 + it);
  std::complex<long double> term(c0.real(), c0.imag());
  std::complex<long double> sum = term;
  long double xx = (long double)x, tt = (long double)t;
  for (int k = 1; k <= 400; ++k) {
    term *= 0.25L * xx * xx /
            ((long double)k * std::complex<long double>((long double)k, tt));
    sum += term;
    if (std::abs(term) < 1e-24L * (1.0L + std::abs(sum))) break;
  }
  return (double)(-(long double)kPi * sum.imag() /
                  std::sinh((long double)kPi * tt));
}

double gamma_half_norm(double t) { return kPi / std::cosh(kPi * t); }

double w_infty(double t, double y) {
  if (y == 0) throw std::domain_error("w_infty: y must be nonzero");
  double ay = std::abs(y);
  if (2.0 * kPi * ay >= 700.0) return 0.0;
  return 2.0 * std::sqrt(std::cosh(kPi * t) / kPi) * std::sqrt(ay) *
         bessel_K(t, 2.0 * kPi * ay);
}

double w_infty_mass(double t) {
  // 2 int w^2 dy/y in log coordinates; the integrand vanishes past the
  // Bessel decay cutoff and is O(y) near zero
  double slo = std::log(1e-7), shi = std::log(45.0 / (2.0 * kPi));
  int n = 3000;  // even; h^4 Simpson error ~ 1e-8 on this smooth integrand
  double h = (shi - slo) / n;
  double acc = 0.0;
  for (int i = 0; i <= n; ++i) {
    double w = w_infty(t, std::exp(slo + i * h));
    double wgt = (i == 0 || i == n) ? 1.0 : (i % 2 ? 4.0 : 2.0);
    acc += wgt * w * w;
  }
  return 2.0 * acc * h / 3.0;
}

GlobalBoundResult whittaker_global_bound(double y,
                                         const LocalRepDescriptor& desc,
                                         double t,
                                         const CoefficientSource& lambda_abs) {
  if (y <= 0) throw std::domain_error("whittaker_global_bound: y must be > 0");
  long long p = desc.p;
  int m = desc.m;
  GlobalBoundResult res{0.0, 0, 0, 0, 0, 0.0};
  double cutoff = 45.0 / (2.0 * kPi);
  double best_term = -1.0;

  auto local_sqrt = [&](int v, long long unit_src) {
    int K = std::max({m, m - 1 - v, -v, 1}) + 1;
    long long pk = powll(p, K);
    TruncatedPAdic yp(p, v, mod_floor(unit_src, pk), K);
    double s = local_average(desc, yp);
    return s > 0 ? std::sqrt(s) : 0.0;
  };

  for (int k = 0;; ++k) {
    double scale = y * std::pow((double)p, (double)(k - m));
    if (scale > cutoff) break;
    bool contributed = false;
    for (long long n = 1; (double)n * scale <= cutoff; ++n) {
      if (n % p == 0) continue;
      double lam = std::abs(lambda_abs(n));
      if (lam == 0.0) continue;
      double sloc = local_sqrt(k - m, n);
      if (sloc == 0.0) continue;
      double term = 2.0 * lam / std::sqrt((double)n) *
                    std::abs(w_infty(t, (double)n * scale)) * sloc;
      res.value += term;
      contributed = true;
      res.n_max = std::max(res.n_max, n);
      if (term > best_term) {
        best_term = term;
        res.dominant_k = k;
        res.dominant_n = n;
      }
    }
    if (contributed) res.k_terms++;
  }

  // reindexed over all integers N = p^k n; must agree with the value above
  double base = y * std::pow((double)p, (double)(-m));
  for (long long N = 1; (double)N * base <= cutoff; ++N) {
    long long n = N;
    int k = 0;
    while (n % p == 0) {
      n /= p;
      ++k;
    }
    double lam = std::abs(lambda_abs(n));
    if (lam == 0.0) continue;
    double sloc = local_sqrt(k - m, n);
    if (sloc == 0.0) continue;
    res.alt_value += 2.0 * lam / std::sqrt((double)n) *
                     std::abs(w_infty(t, (double)N * base)) * sloc;
  }
  return res;
}

}  // namespace supnorm
