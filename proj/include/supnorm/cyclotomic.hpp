#pragma once

#include "supnorm/common.hpp"

namespace supnorm {

/// Element of Q(zeta_M): integer coefficient vector over the power basis
/// (reduced mod the M-th cyclotomic polynomial) times a rational scale.
/// Canonical form: zero has scale 0 and empty support; otherwise the
/// coefficient content is 1 and the scale is positive.
struct Cyclo {
  long long M = 1;
  Rat scale{0};
  std::vector<long long> c;  // size deg(Phi_M), reduced

  bool is_zero() const { return scale == Rat(0); }
};

/// Phi_M over Z, computed recursively; cached per M.
const std::vector<long long>& cyclotomic_poly(long long M);

Cyclo cyc_zero(long long M);
Cyclo cyc_rat(long long M, const Rat& r);
Cyclo cyc_root(long long M, long long k);  // zeta_M^k

Cyclo cyc_add(const Cyclo& a, const Cyclo& b);
Cyclo cyc_sub(const Cyclo& a, const Cyclo& b);
Cyclo cyc_mul(const Cyclo& a, const Cyclo& b);
Cyclo cyc_scale(const Cyclo& a, const Rat& r);
Cyclo cyc_conj(const Cyclo& a);  // zeta -> zeta^{-1}

bool cyc_eq(const Cyclo& a, const Cyclo& b);
Complex cyc_to_complex(const Cyclo& a);
/// Throws domain_error when the value is not rational.
Rat cyc_to_rational(const Cyclo& a);
std::string cyc_to_string(const Cyclo& a);

/// Accumulator for sums of many roots of unity with a common scale:
/// tallies exponents mod M, reduces once at the end.
struct RootSum {
  long long M;
  std::vector<long long> tally;  // index k -> multiplicity of zeta_M^k

  explicit RootSum(long long M_) : M(M_), tally(M_, 0) {}
  void add(long long k, long long mult = 1) { tally[mod_floor(k, M)] += mult; }
  Cyclo finish(const Rat& scale) const;
};

}  // namespace supnorm
