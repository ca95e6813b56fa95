#include "supnorm/residue_padic.hpp"

namespace supnorm {

ResidueRing::ResidueRing(long long p_, int N_) : p(p_), N(N_) {
  if (p < 3 || !is_prime(p))
    throw std::invalid_argument("ResidueRing: p must be an odd prime");
  if (N < 1) throw std::invalid_argument("ResidueRing: N must be positive");
  modulus = powll(p, N);
}

TruncatedPAdic::TruncatedPAdic(long long p_, int v_, long long unit_, int N_)
    : p(p_), v(v_), N(N_) {
  if (p < 3 || !is_prime(p))
    throw std::invalid_argument("TruncatedPAdic: p must be an odd prime");
  if (N < 1) throw std::invalid_argument("TruncatedPAdic: precision must be >= 1");
  unit = mod_floor(unit_, powll(p, N));
  if (unit % p == 0)
    throw std::domain_error("TruncatedPAdic: unit part divisible by p");
}

long long TruncatedPAdic::unit_mod(int k) const {
  if (k > N)
    throw PrecisionError("TruncatedPAdic: need unit mod p^" + std::to_string(k) +
                         " but precision is " + std::to_string(N));
  return unit % powll(p, k);
}

TruncatedPAdic TruncatedPAdic::times(const TruncatedPAdic& o) const {
  int k = std::min(N, o.N);
  long long m = powll(p, k);
  return {p, v + o.v, mulmod(unit % m, o.unit % m, m), k};
}

TruncatedPAdic TruncatedPAdic::inverse() const {
  return {p, -v, invmod(unit, powll(p, N)), N};
}

TruncatedPAdic decompose(long long num, long long den, long long p, int N) {
  if (num == 0) throw std::domain_error("decompose: zero input");
  if (den == 0) throw std::domain_error("decompose: zero denominator");
  if (p < 3 || !is_prime(p))
    throw std::invalid_argument("decompose: p must be an odd prime");
  int v = 0;
  while (num % p == 0) { num /= p; ++v; }
  while (den % p == 0) { den /= p; --v; }
  long long mod = powll(p, N);
  long long u = mulmod(mod_floor(num, mod), invmod(mod_floor(den, mod), mod), mod);
  return {p, v, u, N};
}

Rat additive_char_frac(const TruncatedPAdic& x) {
  if (x.v >= 0) return Rat(0);
  long long q = powll(x.p, -x.v);
  long long r = x.unit_mod(-x.v);
  return Rat(r, q);
}

Complex additive_char(const TruncatedPAdic& x) {
  return unit_circle(additive_char_frac(x));
}

Rat additive_char_frac(long long num, long long den, long long p) {
  if (num == 0) return Rat(0);
  int v = 0;
  long long n = num, d = den;
  while (n % p == 0) { n /= p; ++v; }
  while (d % p == 0) { d /= p; --v; }
  if (v >= 0) return Rat(0);
  long long q = powll(p, -v);
  long long r = mulmod(mod_floor(n, q), invmod(mod_floor(d, q), q), q);
  return Rat(r, q);
}

Complex additive_char(long long num, long long den, long long p) {
  return unit_circle(additive_char_frac(num, den, p));
}

int UnitGroup::log_of(long long u) const {
  long long r = mod_floor(u, modulus);
  if (r < 0 || r >= (long long)dlog.size() || dlog[r] < 0)
    throw std::domain_error("UnitGroup: not a unit mod p^m");
  return dlog[r];
}

UnitGroup unit_group(long long p, int m) {
  if (p == 2) throw std::invalid_argument("unit_group: p = 2 unsupported");
  if (p < 3 || !is_prime(p))
    throw std::invalid_argument("unit_group: p must be an odd prime");
  if (m < 1) throw std::invalid_argument("unit_group: m must be >= 1");
  UnitGroup g;
  g.p = p;
  g.m = m;
  g.modulus = powll(p, m);
  g.order = euler_phi_pk(p, m);
  // (Z/p^mZ)^x is cyclic for odd p; smallest generator by brute force.
  for (long long cand = 2; cand < g.modulus; ++cand) {
    if (cand % p == 0) continue;
    long long x = cand;
    long long ord = 1;
    while (x != 1) { x = mulmod(x, cand, g.modulus); ++ord; }
    if (ord == g.order) { g.generator = cand; break; }
  }
  g.elements.resize(g.order);
  g.dlog.assign(g.modulus, -1);
  long long x = 1;
  for (long long k = 0; k < g.order; ++k) {
    g.elements[k] = x;
    g.dlog[x] = (int)k;
    x = mulmod(x, g.generator, g.modulus);
  }
  return g;
}

}  // namespace supnorm
