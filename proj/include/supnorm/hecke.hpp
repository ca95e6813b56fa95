#pragma once

#include <functional>
#include <map>

#include "supnorm/common.hpp"

namespace supnorm {

/// Finitely supported combination of normalized Hecke operators kappa_r,
/// indices coprime to the ramified prime.
using HeckeElement = std::map<long long, Complex>;

HeckeElement kappa(long long r);

/// Bilinear extension of kappa_{l^a} * kappa_{l^b} = sum_j kappa_{l^{a+b-2j}},
/// multiplicative over coprime indices. When p > 0 every index must be
/// coprime to p.
HeckeElement convolve(const HeckeElement& h1, const HeckeElement& h2,
                      long long p = 0);

/// Coefficientwise conjugation; each kappa_r is self-adjoint.
HeckeElement adjoint(const HeckeElement& h);

/// First-fit scan keeping l when l, l*l', (l*l')^2 != 1 mod p against every
/// kept prime (including l itself).
std::vector<long long> admissible_primes(long long p,
                                         std::pair<long long, long long> window);

/// Admissible amplifier primes; default window is [Lambda/2, 3*Lambda).
/// Requires Lambda >= 10; empty result is a degenerate-amplifier error.
std::vector<long long> build_S(long long p, long long Lambda,
                               std::pair<long long, long long> window = {0, 0});

using LambdaSource = std::function<Complex(long long)>;

/// f_ur = (sum c_l kappa_l)(...)^* + (sum c_{l^2} kappa_{l^2})(...)^*
/// with c_r = |lambda(r)| / lambda(r); primes with lambda(r) = 0 drop out
/// of the corresponding sum.
HeckeElement build_f_ur(const std::vector<long long>& S,
                        const LambdaSource& lambda, long long p = 0);

/// Upper-triangular determinant-l coset representatives: [[1,b],[0,l]] for
/// 0 <= b < l, plus [[l,0],[0,1]].
std::vector<std::array<long long, 4>> hecke_coset_reps(long long l);

/// Composes the representative layers twice and checks that the reduced
/// multiplicity pattern reproduces kappa_l * kappa_l = kappa_{l^2} + kappa_1.
bool hecke_convolution_check(long long l);

}  // namespace supnorm
