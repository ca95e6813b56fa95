#pragma once

#include "supnorm/cyclotomic.hpp"
#include "supnorm/residue_padic.hpp"

namespace supnorm {

/// Integral of psi(x y) over the shell p^k Z_p^x (additive Haar, Z_p mass 1).
/// Exact rational: p^{-k}(1 - 1/p) when v(y) >= -k, -p^{-k-1} at v = -k-1,
/// zero below.
Rat shell_psi_integral(int k, const TruncatedPAdic& y);

/// Same quantity as a finite exact root-of-unity sum; for cross-checking.
Rat shell_psi_integral_oracle(int k, const TruncatedPAdic& y);

/// Weighted tails entering the Steinberg matrix-coefficient computation.
/// tail A: sum over l >= 1 of p^l * int_{Z_p^x} psi(z y p^{-1-l}) dz.
/// tail B: sum over l >= 1 of p^{-l} * int_{Z_p^x} psi(-x y p^{-1-l}) dx.
/// Both depend on y through v = v(y) only.
Rat steinberg_tail_A(long long p, int v);
Rat steinberg_tail_B(long long p, int v);

/// Truncated partial sums of the defining series (terms vanish beyond the
/// cutoff, so these are exact once cutoff > v + 1).
Rat steinberg_tail_A_oracle(long long p, const TruncatedPAdic& y, int cutoff);
Rat steinberg_tail_B_oracle(long long p, const TruncatedPAdic& y, int cutoff);

}  // namespace supnorm
