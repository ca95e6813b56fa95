#include "supnorm/padic_oscillatory.hpp"

namespace supnorm {

Rat shell_psi_integral(int k, const TruncatedPAdic& y) {
  long long p = y.p;
  if (y.v >= -k) return rat_pow(Rat(p), -k) * Rat(p - 1, p);
  if (y.v == -k - 1) return -rat_pow(Rat(p), -k - 1);
  return Rat(0);
}

Rat shell_psi_integral_oracle(int k, const TruncatedPAdic& y) {
  long long p = y.p;
  // Discretize the shell mod p^N with N past the psi denominator.
  // psi denominators divide p^{-(k+v)} and the unit needs -v digits
  int N = std::max({1, -y.v - k, 1 - y.v});
  long long M = powll(p, N);
  RootSum acc(M);
  long long pN = powll(p, N);
  long long terms = 0;
  for (long long u = 1; u < pN; ++u) {
    if (u % p == 0) continue;
    ++terms;
    // x = p^k u, frac(x y) from the truncated scalar
    TruncatedPAdic x(p, k, u, N);
    Rat f = additive_char_frac(x.times(y));
    if (f == Rat(0)) {
      acc.add(0);
    } else {
      long long q = f.denominator();
      if (M % q != 0) throw std::logic_error("shell oracle: bad field");
      acc.add(f.numerator() * (M / q));
    }
  }
  // shell mass p^{-k}(1-1/p) split over phi(p^N) sampled units
  Rat mass = rat_pow(Rat(p), -k) * Rat(p - 1, p) / Rat(terms);
  return cyc_to_rational(acc.finish(mass));
}

Rat steinberg_tail_A(long long p, int v) {
  return v >= 1 ? Rat(-1) : Rat(0);
}

Rat steinberg_tail_B(long long p, int v) {
  Rat out(0);
  if (v >= 2) out += Rat(1, p) - rat_pow(Rat(p), -v);
  if (v >= 1) out -= rat_pow(Rat(p), -1 - v);
  return out;
}

Rat steinberg_tail_A_oracle(long long p, const TruncatedPAdic& y, int cutoff) {
  Rat s(0);
  for (int l = 1; l <= cutoff; ++l)
    s += rat_pow(Rat(p), l) * shell_psi_integral(0, y.scale_p(-1 - l));
  return s;
}

Rat steinberg_tail_B_oracle(long long p, const TruncatedPAdic& y, int cutoff) {
  Rat s(0);
  TruncatedPAdic my(y.p, y.v, -y.unit, y.N);
  for (int l = 1; l <= cutoff; ++l)
    s += rat_pow(Rat(p), -l) * shell_psi_integral(0, my.scale_p(-1 - l));
  return s;
}

}  // namespace supnorm
