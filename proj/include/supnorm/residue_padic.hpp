#pragma once

#include "supnorm/common.hpp"

namespace supnorm {

/// The ring Z/p^NZ for an odd prime p.
struct ResidueRing {
  long long p;
  int N;
  long long modulus;

  ResidueRing(long long p_, int N_);
};

/// A nonzero truncated p-adic scalar y = p^v * u with u a unit known mod p^N.
struct TruncatedPAdic {
  long long p;
  int v;          // valuation
  long long unit; // unit residue, coprime to p, reduced mod p^N
  int N;          // precision exponent

  TruncatedPAdic(long long p_, int v_, long long unit_, int N_);

  Rat abs_p() const { return rat_pow(Rat(p), -v); }
  long long unit_mod(int k) const; // throws PrecisionError if k > N

  TruncatedPAdic times(const TruncatedPAdic& o) const;
  TruncatedPAdic inverse() const;
  TruncatedPAdic scale_p(int k) const { return {p, v + k, unit, N}; }
};

/// Write a nonzero rational as p^v * u with u mod p^N.
TruncatedPAdic decompose(long long num, long long den, long long p, int N);

/// Fractional part of x = p^v*u as a rational in [0,1); 0 when v >= 0.
Rat additive_char_frac(const TruncatedPAdic& x);
/// psi_p(x) = e(frac(x)) for the standard unramified character.
Complex additive_char(const TruncatedPAdic& x);
/// psi_p of an exact rational num/den.
Complex additive_char(long long num, long long den, long long p);
Rat additive_char_frac(long long num, long long den, long long p);

inline Complex unit_circle(const Rat& turns) {
  double t = 2.0 * kPi * rat_to_double(turns);
  return {std::cos(t), std::sin(t)};
}

/// (Z/p^mZ)^x listed as powers of a fixed generator (first element).
struct UnitGroup {
  long long p;
  int m;
  long long modulus;
  long long generator;
  long long order;                 // phi(p^m)
  std::vector<long long> elements; // elements[k] = generator^k mod p^m
  std::vector<int> dlog;           // dense table, dlog[u] for units, -1 otherwise

  long long phi() const { return order; }
  int log_of(long long u) const;
};

UnitGroup unit_group(long long p, int m);

inline long long euler_phi_pk(long long p, int k) {
  return k == 0 ? 1 : powll(p, k - 1) * (p - 1);
}

}  // namespace supnorm
