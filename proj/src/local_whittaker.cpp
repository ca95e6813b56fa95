#include "supnorm/local_whittaker.hpp"

#include <cmath>
#include <map>
#include <tuple>

namespace supnorm {

namespace {

Complex cplx_pow_of_p(long long p, Complex exponent) {
  // p^exponent for complex exponent
  return std::exp(exponent * std::log((double)p));
}

void require_unitary(Complex rho) {
  if (std::abs(rho.real()) > 1e-12)
    throw std::domain_error("principal series: rho must be purely imaginary");
}

// Cached Gauss sums G_l(w, chi_bar) keyed by (l, v(w), unit digits of w).
struct PSEngine {
  long long p;
  int m;
  MultChar chibar;
  double sqrt_d;
  Complex g_bar;  // complete Gauss sum of chi^{-1}
  std::map<std::tuple<int, int, long long>, Complex> cache;

  explicit PSEngine(const LocalRepDescriptor& d_)
      : p(d_.p), m(d_.m), chibar(d_.chi->bar()),
        sqrt_d(std::sqrt(rat_to_double(d_.d))),
        g_bar(gauss_complete(chibar)) {}

  Complex gauss(int l, const TruncatedPAdic& w) {
    long long digits = w.v < 0 ? w.unit_mod(std::min(w.N, -w.v)) : 0;
    auto key = std::make_tuple(l, w.v, digits);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    Complex val = gauss_G(l, w, chibar);
    cache[key] = val;
    return val;
  }
};

}  // namespace

LocalRepDescriptor describe_ps(const MultChar& chi, Complex rho) {
  require_unitary(rho);
  if (chi.cond < 1)
    throw std::domain_error("describe_ps: inducing character must be ramified");
  LocalRepDescriptor d;
  d.tag = RepCase::PrincipalSeries;
  d.p = chi.p;
  d.m = chi.cond;
  d.n = chi.cond;
  d.d = Rat(powll(chi.p, d.m) + powll(chi.p, d.m - 1));
  d.chi = chi;
  d.rho = rho;
  return d;
}

LocalRepDescriptor describe_steinberg(long long p) {
  if (p < 3 || !is_prime(p))
    throw std::domain_error("describe_steinberg: odd prime required");
  LocalRepDescriptor d;
  d.tag = RepCase::Steinberg;
  d.p = p;
  d.m = 1;
  d.n = 1;
  d.d = Rat(p);
  return d;
}

LocalRepDescriptor describe_supercuspidal(long long p, int m, bool even) {
  if (p < 3 || !is_prime(p))
    throw std::domain_error("describe_supercuspidal: odd prime required");
  if (m < 1) throw std::domain_error("describe_supercuspidal: m must be >= 1");
  LocalRepDescriptor d;
  d.p = p;
  d.m = m;
  if (even) {
    d.tag = RepCase::SupercuspidalEven;
    d.n = 2 * m;
    d.d = Rat(powll(p, m) - powll(p, m - 1));
  } else {
    // odd conductor 2m-1 needs m >= 2: p^m(1-1/p^2) is not an integer at m=1
    if (m < 2)
      throw std::domain_error(
          "describe_supercuspidal: odd parity requires m >= 2");
    d.tag = RepCase::SupercuspidalOdd;
    d.n = 2 * m - 1;
    d.d = Rat(powll(p, m) - powll(p, m - 2));
  }
  return d;
}

std::vector<CosetRep> coset_reps(long long p, int m) {
  if (m < 1) throw std::invalid_argument("coset_reps: m must be >= 1");
  std::vector<CosetRep> out;
  long long pm = powll(p, m);
  for (long long a = 0; a < pm; ++a) out.push_back({0, a});
  for (int i = 1; i < m; ++i) {
    long long q = powll(p, m - i);
    for (long long a = 1; a < q; ++a)
      if (a % p != 0) out.push_back({i, a});
  }
  out.push_back({m, 0});
  return out;
}

std::array<long long, 4> coset_rep_matrix(const CosetRep& r, long long p, int m) {
  if (r.i == 0) return {0, -1, 1, r.a};
  if (r.i == m) return {1, 0, 0, 1};
  return {1, 0, r.a * powll(p, r.i), 1};
}

bool coset_cover_check(long long p, int m) {
  long long pm = powll(p, m);
  auto reps = coset_reps(p, m);
  // inverses mod p^m of each representative
  std::vector<std::array<long long, 4>> inv;
  for (const auto& r : reps) {
    auto g = coset_rep_matrix(r, p, m);
    long long det = mod_floor(g[0] * g[3] - g[1] * g[2], pm);
    long long di = invmod(det, pm);
    inv.push_back({mod_floor(g[3] * di, pm), mod_floor(-g[1] * di, pm),
                   mod_floor(-g[2] * di, pm), mod_floor(g[0] * di, pm)});
  }
  auto is_unit = [&](long long x) { return x % p != 0; };
  for (long long a = 0; a < pm; ++a)
    for (long long b = 0; b < pm; ++b)
      for (long long c = 0; c < pm; ++c)
        for (long long d = 0; d < pm; ++d) {
          if (!is_unit(mod_floor(a * d - b * c, pm))) continue;
          int hits = 0;
          for (const auto& gi : inv) {
            // g * gamma^{-1} upper triangular <=> g in B * gamma
            long long c21 = mod_floor(c * gi[0] + d * gi[2], pm);
            if (c21 != 0) continue;
            long long e11 = mod_floor(a * gi[0] + b * gi[2], pm);
            long long e22 = mod_floor(c * gi[1] + d * gi[3], pm);
            if (is_unit(e11) && is_unit(e22)) ++hits;
          }
          if (hits != 1) return false;
        }
  return true;
}

Complex ps_whittaker(const LocalRepDescriptor& desc, const CosetRep& rep,
                     const TruncatedPAdic& y) {
  if (desc.tag != RepCase::PrincipalSeries || !desc.chi)
    throw std::invalid_argument("ps_whittaker: principal-series descriptor required");
  require_unitary(desc.rho);
  // one engine per descriptor identity; cache keyed by (p, m, e, rho)
  static std::map<std::tuple<long long, int, long long, double>,
                  std::unique_ptr<PSEngine>> engines;
  auto key = std::make_tuple(desc.p, desc.m, desc.chi->e_exp, desc.rho.imag());
  auto it = engines.find(key);
  if (it == engines.end())
    it = engines.emplace(key, std::make_unique<PSEngine>(desc)).first;
  PSEngine& eng = *it->second;

  long long p = desc.p;
  int m = desc.m, v = y.v;
  if (v < -m) return {0.0, 0.0};
  if (y.N < std::max(1, -v))
    throw PrecisionError("ps_whittaker: y carries too few digits");
  const MultChar& chi = *desc.chi;
  Complex rho = desc.rho;
  Complex pref = cplx_pow_of_p(p, Complex(-(double)v, 0.0) * (Complex(0.5, 0.0) - rho));
  double dm = std::pow((double)p, -m);

  if (rep.i == 0) {
    // psi(a y)^{-1} survives from the w n(a) block
    Complex psi{1.0, 0.0};
    if (v < 0) {
      long long q = powll(p, -v);
      psi = unit_circle(Rat(mod_floor(rep.a * y.unit_mod(-v), q), q));
    }
    return pref * dm * std::conj(psi) * eng.sqrt_d;
  }
  if (rep.i == m) {
    if (v < 0) return {0.0, 0.0};
    Complex rhofac = cplx_pow_of_p(p, -2.0 * rho * (double)(v + m));
    long long pm = powll(p, m);
    Complex chival = chi.eval(mod_floor(-y.unit_mod(m), pm));
    return pref * eng.sqrt_d * rhofac * dm * chival * eng.g_bar;
  }
  int l = m - rep.i;
  TruncatedPAdic arg(p, v - rep.i, -rep.a * y.unit, y.N);
  Complex G = eng.gauss(l, arg);
  Complex rhofac = cplx_pow_of_p(p, -2.0 * rho * (double)rep.i);
  return pref * rhofac * chi.eval(rep.a) * eng.sqrt_d * G;
}

double ps_partial_average(const LocalRepDescriptor& desc, int i,
                          const TruncatedPAdic& y) {
  if (i < 0 || i > desc.m)
    throw std::invalid_argument("ps_partial_average: level out of range");
  if (y.v < -desc.m) return 0.0;
  double s = 0.0;
  for (const auto& r : coset_reps(desc.p, desc.m)) {
    if (r.i != i) continue;
    s += std::norm(ps_whittaker(desc, r, y));
  }
  return s / (1.0 + 1.0 / (double)desc.p);
}

double ps_whittaker_norm(const LocalRepDescriptor& desc, const CosetRep& rep) {
  long long p = desc.p;
  int m = desc.m;
  int vmax = (int)std::ceil(14.0 * std::log(10.0) / std::log((double)p));
  double shell = 1.0 - 1.0 / (double)p;
  double total = 0.0;
  for (int v = -m; v <= vmax; ++v) {
    // W(p^v u) depends on u through at most this many digits
    int K = std::max({m, m - 1 - v, -v, 1});
    long long pk = powll(p, K);
    double acc = 0.0;
    long long cnt = 0;
    for (long long u = 1; u < pk; ++u) {
      if (u % p == 0) continue;
      acc += std::norm(ps_whittaker(desc, rep, TruncatedPAdic(p, v, u, K)));
      ++cnt;
    }
    total += shell * acc / (double)cnt;
  }
  return total;
}

Complex ps_tail_integral_oracle(const LocalRepDescriptor& desc,
                                const TruncatedPAdic& y) {
  // shell-by-shell sum of int_{p^m Z_p} chi(x)|x|^{2 rho} psi(x^{-1} y)^{-1} dx/|x|
  const MultChar& chi = *desc.chi;
  long long p = desc.p;
  int m = desc.m;
  Complex rho = desc.rho;
  Complex total{0.0, 0.0};
  int lmax = std::max(y.v + m + 2, m + 2);
  for (int l = m; l <= lmax; ++l) {
    int Nu = std::max({m, l - y.v, 1});
    long long pn = powll(p, Nu);
    Complex sh{0.0, 0.0};
    long long cnt = 0;
    for (long long u = 1; u < pn; ++u) {
      if (u % p == 0) continue;
      ++cnt;
      Complex term = chi.eval(u);
      int w_v = y.v - l;
      if (w_v < 0) {
        long long q = powll(p, -w_v);
        long long uy = y.unit_mod(std::min(y.N, -w_v));
        long long uinv = invmod(u % q, q);
        // psi(- p^{-l} u^{-1} y), conjugation already applied via the minus
        term *= unit_circle(Rat(mod_floor(-mulmod(uinv, uy % q, q), q), q));
      }
      sh += term;
    }
    total += cplx_pow_of_p(p, -2.0 * rho * (double)l) * sh / (double)cnt *
             (1.0 - 1.0 / (double)p);
  }
  return total;
}

Rat steinberg_SV(long long p, int v) {
  Rat absy = rat_pow(Rat(p), -v);
  Rat s(0);
  if (v >= -1) s += Rat(1);
  if (v >= 0) s += rat_pow(Rat(p), -2) * absy;
  if (v >= 1) s += Rat(1, p) * absy - Rat(1, p);
  return absy * s;
}

Rat steinberg_oracle(long long p, int v) {
  Rat absy = rat_pow(Rat(p), -v);
  // i = 1..p blocks: each contributes p^{-1} * [v(y) >= -1]
  Rat stable(0);
  for (long long i = 1; i <= p; ++i)
    if (v >= -1) stable += Rat(1, p);
  // i = 0 block: product of the two weighted tails at frequency p*y
  TruncatedPAdic py(p, v + 1, 1, std::max(1, v + 4));
  int cutoff = std::abs(v) + 4;
  Rat a = steinberg_tail_A_oracle(p, py, cutoff);
  Rat b = steinberg_tail_B_oracle(p, py, cutoff);
  return absy * (stable + a * b);
}

Rat sc_average(const LocalRepDescriptor& desc, int v) {
  long long p = desc.p;
  int m = desc.m;
  Rat s(0);
  if (desc.tag == RepCase::SupercuspidalEven ||
      desc.tag == RepCase::SupercuspidalOdd) {
    if (v == -m) s += Rat(euler_phi_pk(p, m));
  } else {
    throw std::invalid_argument("sc_average: supercuspidal descriptor required");
  }
  if (desc.tag == RepCase::SupercuspidalOdd && v == 1 - m)
    s += Rat(euler_phi_pk(p, m - 1));
  return s;
}

Rat sc_kirillov_oracle(const LocalRepDescriptor& desc, const TruncatedPAdic& y) {
  if (desc.tag != RepCase::SupercuspidalEven &&
      desc.tag != RepCase::SupercuspidalOdd)
    throw std::invalid_argument("sc_kirillov_oracle: supercuspidal required");
  long long p = desc.p;
  // one basis layer per shell: X_k lives on v(y) = -k
  auto layer = [&](int k) {
    Rat acc(0);
    if (y.v != -k) return acc;
    for (const auto& chi : enumerate_X(p, k)) {
      (void)chi.exact_exponent(y);  // evaluates chi(y); |chi(y)|^2 = 1
      acc += Rat(1);
    }
    return acc;
  };
  Rat s = layer(desc.m);
  if (desc.tag == RepCase::SupercuspidalOdd) s += layer(desc.m - 1);
  return s;
}

bool sc_orthonormality_check(long long p, int m) {
  // inner products on the shell v = -m, multiplicative measure with unit mass
  auto chars = enumerate_X(p, m);
  long long phi = euler_phi_pk(p, m);
  long long pm = powll(p, m);
  for (size_t i = 0; i < chars.size(); ++i)
    for (size_t j = i; j < chars.size(); ++j) {
      RootSum acc((long long)phi);
      for (long long u = 1; u < pm; ++u) {
        if (u % p == 0) continue;
        acc.add(chars[i].exact_exponent(u) - chars[j].exact_exponent(u));
      }
      Rat inner = cyc_to_rational(acc.finish(Rat(1, phi)));
      if (inner != (i == j ? Rat(1) : Rat(0))) return false;
    }
  return true;
}

double local_average(const LocalRepDescriptor& desc, const TruncatedPAdic& y) {
  switch (desc.tag) {
    case RepCase::PrincipalSeries: {
      double s = 0.0;
      for (int i = 0; i <= desc.m; ++i)
        s += ps_partial_average(desc, i, y);
      return s;
    }
    case RepCase::Steinberg:
      return rat_to_double(steinberg_SV(desc.p, y.v));
    case RepCase::SupercuspidalEven:
    case RepCase::SupercuspidalOdd:
      return rat_to_double(sc_average(desc, y.v));
  }
  throw std::logic_error("local_average: unhandled case");
}

bool local_bound_check(const LocalRepDescriptor& desc, const TruncatedPAdic& y,
                       double* ratio) {
  double S = local_average(desc, y.scale_p(-desc.m));
  double rhs = 2.0 * std::pow(rat_to_double(desc.d), 1.01) *
               std::pow((double)desc.p, -y.v);
  double r = S / rhs;
  if (ratio) *ratio = r;
  return r <= 1.0 + 1e-12;
}

}  // namespace supnorm
