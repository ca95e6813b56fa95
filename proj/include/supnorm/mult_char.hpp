#pragma once

#include <memory>

#include "supnorm/cyclotomic.hpp"
#include "supnorm/residue_padic.hpp"

namespace supnorm {

/// Character of (Z/p^mZ)^x, extended to Q_p^x by chi(p) = 1.
/// chi(gen^k) = e(e_exp * k / phi(p^m)) for the group's fixed generator.
struct MultChar {
  long long p;
  int m;            // modulus exponent
  long long e_exp;  // in [0, phi(p^m))
  std::shared_ptr<const UnitGroup> units;
  int cond;         // conductor exponent a(chi)

  long long phi() const { return units->order; }
  bool is_trivial() const { return e_exp == 0; }

  /// Exponent k with chi(u) = e(k / phi(p^m)), for u coprime to p.
  long long exact_exponent(long long u) const {
    return mod_floor(e_exp * units->log_of(mod_floor(u, units->modulus)), phi());
  }
  Complex eval(long long u) const {
    return unit_circle(Rat(exact_exponent(u), phi()));
  }
  /// chi of a truncated p-adic scalar; needs the unit mod p^{a(chi)}.
  Complex eval(const TruncatedPAdic& y) const;
  long long exact_exponent(const TruncatedPAdic& y) const;

  MultChar bar() const;                  // chi^{-1}
  MultChar times(const MultChar&) const; // same (p, m) required
  Complex at_minus_one() const { return eval(powll(p, m) - 1); }
};

MultChar make_char(long long p, int m, long long e_exp);
/// All characters of (Z/p^kZ)^x, i.e. conductor <= k; indexed by exponent.
std::vector<MultChar> enumerate_X(long long p, int k);

/// Smallest M so that all values chi(x)psi(y x) with chi mod p^a and
/// psi-denominators up to p^b live in Q(zeta_M).
long long cyclo_field_order(long long p, int a, int b);

/// G_l(y, chi) = integral of chi(x) psi(y x) over 1 + p^l Z_p, unit Haar
/// measure on Z_p. Brute finite sum at precision max(a, l, -v(y)).
Complex gauss_G(int l, const TruncatedPAdic& y, const MultChar& chi);
Cyclo gauss_G_exact(int l, const TruncatedPAdic& y, const MultChar& chi,
                    long long M);

/// Complete Gauss sum g(chi) = sum over units x mod p^a of chi(x)psi(x/p^a).
Cyclo gauss_complete_exact(const MultChar& chi, long long M);
Complex gauss_complete(const MultChar& chi);

/// Normalized epsilon factor p^{-a/2} g(chi); modulus 1 for primitive chi.
Complex epsilon_factor(const MultChar& chi);

/// The unit b mod p^{floor(a/2)} with chi(1+u) = psi(b u / p^a) for
/// u in p^{ceil(a/2)} Z_p. Requires a(chi) >= 2; unique, found by search.
long long b_of_chi(const MultChar& chi);

/// Closed form for G_l(p^k z, chi) by case split on l against a(chi).
Complex gauss_G_closed_form(int l, int k, long long z, const MultChar& chi);
Cyclo gauss_G_closed_form_exact(int l, int k, long long z, const MultChar& chi,
                                long long M);

}  // namespace supnorm
