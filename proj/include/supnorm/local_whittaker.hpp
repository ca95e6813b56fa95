#pragma once

#include <optional>

#include "supnorm/mult_char.hpp"
#include "supnorm/padic_oscillatory.hpp"

namespace supnorm {

enum class RepCase { PrincipalSeries, Steinberg, SupercuspidalEven, SupercuspidalOdd };

/// Local data at p: conductor exponent n, formal dimension d, and the
/// inducing character / spectral parameter where applicable.
struct LocalRepDescriptor {
  RepCase tag;
  long long p;
  int m;   // p-power level parameter
  int n;   // conductor exponent a(pi)
  Rat d;   // formal dimension
  std::optional<MultChar> chi;
  Complex rho{0.0, 0.0};  // principal series parameter, purely imaginary
};

LocalRepDescriptor describe_ps(const MultChar& chi, Complex rho);
LocalRepDescriptor describe_steinberg(long long p);
LocalRepDescriptor describe_supercuspidal(long long p, int m, bool even);

/// Coset labels for K_p over the depth-m congruence subgroup fixing v0:
/// i = 0 with a mod p^m, 1 <= i <= m-1 with a unit mod p^{m-i}, and i = m.
struct CosetRep {
  int i;
  long long a;
};

std::vector<CosetRep> coset_reps(long long p, int m);
/// 2x2 integer matrix representative of the label.
std::array<long long, 4> coset_rep_matrix(const CosetRep& r, long long p, int m);
/// Exhaustive cover/disjointness check inside GL2(Z/p^m); p^m small.
bool coset_cover_check(long long p, int m);

/// Whittaker value W_v(a(y)) for the basis vector attached to `rep`
/// in the principal series case. Zero for v(y) < -m.
Complex ps_whittaker(const LocalRepDescriptor& desc, const CosetRep& rep,
                     const TruncatedPAdic& y);

/// Sum of |W|^2 over the basis vectors at coset level i, divided by 1 + 1/p.
double ps_partial_average(const LocalRepDescriptor& desc, int i,
                          const TruncatedPAdic& y);

/// L^2 norm of the Whittaker function of one basis vector, measure dy/|y|.
double ps_whittaker_norm(const LocalRepDescriptor& desc, const CosetRep& rep);

/// Depth-m tail of the Jacquet integral, direct shell-by-shell sum.
Complex ps_tail_integral_oracle(const LocalRepDescriptor& desc,
                                const TruncatedPAdic& y);

/// Steinberg local average S_V at |y|_p = p^{-v}; exact rational.
Rat steinberg_SV(long long p, int v);
/// Same value assembled from the defining tail integrals.
Rat steinberg_oracle(long long p, int v);

/// Supercuspidal local average at v(y) = v; exact rational.
Rat sc_average(const LocalRepDescriptor& desc, int v);
/// Kirillov-model assembly: sum of |xi_chi(y)|^2 over chi in X_m (+ the
/// p^{m-1} layer in the odd case), normalized by the formal dimension scale.
Rat sc_kirillov_oracle(const LocalRepDescriptor& desc, const TruncatedPAdic& y);
/// Pairwise inner products of the Kirillov basis vectors; exact.
bool sc_orthonormality_check(long long p, int m);

/// Dispatcher: the local average S(y) for any of the four cases.
double local_average(const LocalRepDescriptor& desc, const TruncatedPAdic& y);

/// Master inequality S(p^{-n} y) <= 2 d^{1+eps} |y|_p with eps = 0.01.
bool local_bound_check(const LocalRepDescriptor& desc, const TruncatedPAdic& y,
                       double* ratio = nullptr);

}  // namespace supnorm
