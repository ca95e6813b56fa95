#include "supnorm/mult_char.hpp"

#include <boost/integer/common_factor.hpp>
#include <map>
#include <mutex>

namespace supnorm {

namespace {

std::shared_ptr<const UnitGroup> unit_group_cached(long long p, int m) {
  static std::map<std::pair<long long, int>, std::shared_ptr<const UnitGroup>> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lk(mu);
  auto key = std::make_pair(p, m);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  auto g = std::make_shared<UnitGroup>(unit_group(p, m));
  cache[key] = g;
  return g;
}

int conductor_of(long long p, int m, long long e_exp, const UnitGroup& U) {
  if (e_exp == 0) return 0;
  for (int k = 1; k < m; ++k) {
    long long gen = mod_floor(1 + powll(p, k), U.modulus);
    if (mod_floor(e_exp * U.log_of(gen), U.order) == 0) return k;
  }
  return m;
}

}  // namespace

Complex MultChar::eval(const TruncatedPAdic& y) const {
  return unit_circle(Rat(exact_exponent(y), phi()));
}

long long MultChar::exact_exponent(const TruncatedPAdic& y) const {
  if (e_exp == 0) return 0;
  if (y.N < cond)
    throw PrecisionError("MultChar: unit needed mod p^" + std::to_string(cond));
  long long u = y.unit_mod(std::min(y.N, m));
  return exact_exponent(u);
}

MultChar MultChar::bar() const {
  return make_char(p, m, mod_floor(-e_exp, phi()));
}

MultChar MultChar::times(const MultChar& o) const {
  if (p != o.p || m != o.m)
    throw std::invalid_argument("MultChar::times: mismatched modulus");
  return make_char(p, m, mod_floor(e_exp + o.e_exp, phi()));
}

MultChar make_char(long long p, int m, long long e_exp) {
  MultChar c;
  c.p = p;
  c.m = m;
  c.units = unit_group_cached(p, m);
  c.e_exp = mod_floor(e_exp, c.units->order);
  c.cond = conductor_of(p, m, c.e_exp, *c.units);
  return c;
}

std::vector<MultChar> enumerate_X(long long p, int k) {
  long long phi = euler_phi_pk(p, k);
  std::vector<MultChar> out;
  out.reserve(phi);
  for (long long e = 0; e < phi; ++e) out.push_back(make_char(p, k, e));
  return out;
}

long long cyclo_field_order(long long p, int a, int b) {
  long long phi = euler_phi_pk(p, std::max(a, 1));
  long long q = powll(p, std::max(b, 1));
  return phi / boost::integer::gcd(phi, q) * q;
}

Complex gauss_G(int l, const TruncatedPAdic& y, const MultChar& chi) {
  if (l < 1) throw std::invalid_argument("gauss_G: l must be >= 1");
  if (y.p != chi.p) throw std::invalid_argument("gauss_G: prime mismatch");
  int N = std::max({chi.cond, l, -y.v, 1});
  if (y.N < std::max({chi.cond, l, -y.v}))
    throw PrecisionError("gauss_G: y carries too few digits");
  long long pN = powll(y.p, N);
  long long pl = powll(y.p, l);
  long long qden = y.v < 0 ? powll(y.p, -y.v) : 1;
  long long yu = y.v < 0 ? y.unit_mod(-y.v) : 0;
  Complex s{0.0, 0.0};
  for (long long x = 1; x < pN; x += pl) {
    Complex term = chi.eval(x);
    if (y.v < 0)
      term *= unit_circle(Rat(mulmod(yu, x % qden, qden), qden));
    s += term;
  }
  return s / (double)pN;
}

Cyclo gauss_G_exact(int l, const TruncatedPAdic& y, const MultChar& chi,
                    long long M) {
  if (l < 1) throw std::invalid_argument("gauss_G_exact: l must be >= 1");
  int N = std::max({chi.cond, l, -y.v, 1});
  if (y.N < std::max({chi.cond, l, -y.v}))
    throw PrecisionError("gauss_G_exact: y carries too few digits");
  long long phi = chi.phi();
  if (M % phi != 0)
    throw std::invalid_argument("gauss_G_exact: M not divisible by phi(p^m)");
  long long pN = powll(y.p, N);
  if (M % pN != 0 && y.v < 0)
    throw std::invalid_argument("gauss_G_exact: M misses additive denominators");
  long long pl = powll(y.p, l);
  long long qden = y.v < 0 ? powll(y.p, -y.v) : 1;
  long long yu = y.v < 0 ? y.unit_mod(-y.v) : 0;
  RootSum acc(M);
  for (long long x = 1; x < pN; x += pl) {
    long long idx = chi.exact_exponent(x) * (M / phi);
    if (y.v < 0)
      idx += mulmod(yu, x % qden, qden) * (M / qden);
    acc.add(idx);
  }
  return acc.finish(Rat(1, pN));
}

Cyclo gauss_complete_exact(const MultChar& chi, long long M) {
  int a = chi.cond;
  if (a < 1) throw std::domain_error("gauss_complete: ramified chi required");
  long long phi = chi.phi();
  long long pa = powll(chi.p, a);
  if (M % phi != 0 || M % pa != 0)
    throw std::invalid_argument("gauss_complete_exact: field too small");
  RootSum acc(M);
  for (long long x = 1; x < pa; ++x) {
    if (x % chi.p == 0) continue;
    acc.add(chi.exact_exponent(x) * (M / phi) + x * (M / pa));
  }
  return acc.finish(Rat(1));
}

Complex gauss_complete(const MultChar& chi) {
  int a = chi.cond;
  if (a < 1) throw std::domain_error("gauss_complete: ramified chi required");
  long long pa = powll(chi.p, a);
  Complex s{0.0, 0.0};
  for (long long x = 1; x < pa; ++x) {
    if (x % chi.p == 0) continue;
    s += chi.eval(x) * unit_circle(Rat(x, pa));
  }
  return s;
}

Complex epsilon_factor(const MultChar& chi) {
  int a = chi.cond;
  if (a < 1) throw std::domain_error("epsilon_factor: ramified chi required");
  return gauss_complete(chi) * std::pow((double)chi.p, -0.5 * a);
}

long long b_of_chi(const MultChar& chi) {
  int a = chi.cond;
  if (a < 2) throw std::domain_error("b_of_chi: conductor must be >= 2");
  int ce = (a + 1) / 2, fl = a / 2;
  long long pce = powll(chi.p, ce), pfl = powll(chi.p, fl);
  long long phi = chi.phi();
  long long found = -1;
  for (long long b = 1; b < pfl; ++b) {
    if (b % chi.p == 0) continue;
    bool ok = true;
    for (long long t = 0; t < pfl && ok; ++t) {
      long long lhs = chi.exact_exponent(1 + pce * t);
      // chi(1 + p^ce t) must equal e(b t / p^fl)
      ok = Rat(lhs, phi) == Rat(mod_floor(b * t, pfl), pfl);
    }
    if (ok) {
      if (found != -1) throw std::logic_error("b_of_chi: not unique");
      found = b;
    }
  }
  if (found == -1) throw std::logic_error("b_of_chi: no candidate matched");
  return found;
}

Complex gauss_G_closed_form(int l, int k, long long z, const MultChar& chi) {
  long long M = cyclo_field_order(chi.p, chi.m, std::max({chi.cond, l, -k}) + 1);
  return cyc_to_complex(gauss_G_closed_form_exact(l, k, z, chi, M));
}

Cyclo gauss_G_closed_form_exact(int l, int k, long long z, const MultChar& chi,
                                long long M) {
  if (l < 1) throw std::invalid_argument("gauss_G_closed_form: l must be >= 1");
  if (z % chi.p == 0)
    throw std::domain_error("gauss_G_closed_form: z must be a unit");
  long long p = chi.p;
  int a = chi.cond;
  long long phi = chi.phi();
  Rat pml = rat_pow(Rat(p), -l);
  auto psi_zpk = [&](int kk) {
    // psi(z p^kk) as an exact root of unity
    if (kk >= 0) return cyc_rat(M, Rat(1));
    long long q = powll(p, -kk);
    if (M % q != 0)
      throw std::invalid_argument("gauss_G_closed_form_exact: field too small");
    return cyc_root(M, mod_floor(z, q) * (M / q));
  };
  if (l >= a) {
    // chi is trivial on 1 + p^l Z_p, only the additive integral remains
    if (k < -l) return cyc_zero(M);
    return cyc_scale(psi_zpk(k), pml);
  }
  if (k != -a) return cyc_zero(M);
  int ce = (a + 1) / 2;
  if (l >= ce) {
    long long b = b_of_chi(chi);
    long long q = powll(p, a - l);
    if (mod_floor(z + b, q) != 0) return cyc_zero(M);
    return cyc_scale(psi_zpk(-a), pml);
  }
  // Shallow domain: expand over twists of conductor at most l.
  long long phil = euler_phi_pk(p, l);
  long long step = phi / phil;
  Cyclo sum = cyc_zero(M);
  if (M % phi != 0)
    throw std::invalid_argument("gauss_G_closed_form_exact: field too small");
  for (long long j = 0; j < phil; ++j) {
    MultChar tw = make_char(p, chi.m, mod_floor(chi.e_exp + j * step, phi));
    long long inv_exp = mod_floor(-tw.exact_exponent(z), phi);
    Cyclo term = cyc_mul(cyc_root(M, inv_exp * (M / phi)),
                         gauss_complete_exact(tw, M));
    sum = cyc_add(sum, term);
  }
  return cyc_scale(sum, rat_pow(Rat(p), -a) / Rat(phil));
}

}  // namespace supnorm
