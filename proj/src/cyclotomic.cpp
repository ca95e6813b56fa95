#include "supnorm/cyclotomic.hpp"

#include <boost/integer/common_factor.hpp>
#include <map>
#include <numeric>
#include <sstream>

namespace supnorm {

namespace {

// Exact division of integer polynomials, quotient known to be integral.
std::vector<long long> poly_divide(std::vector<long long> num,
                                   const std::vector<long long>& den) {
  int dn = (int)num.size() - 1, dd = (int)den.size() - 1;
  if (den.back() != 1 && den.back() != -1)
    throw std::logic_error("poly_divide: divisor not monic up to sign");
  std::vector<long long> q(dn - dd + 1, 0);
  for (int i = dn; i >= dd; --i) {
    long long f = num[i] / den[dd];
    q[i - dd] = f;
    if (f == 0) continue;
    for (int j = 0; j <= dd; ++j) num[i - dd + j] -= f * den[j];
  }
  for (long long r : num)
    if (r != 0) throw std::logic_error("poly_divide: nonzero remainder");
  return q;
}

std::map<long long, std::vector<long long>>& phi_cache() {
  static std::map<long long, std::vector<long long>> cache;
  return cache;
}

// Reduce an integer polynomial mod Phi_M; returns vector of size deg(Phi_M).
std::vector<long long> reduce_mod_phi(std::vector<long long> poly, long long M) {
  const auto& phi = cyclotomic_poly(M);
  int deg = (int)phi.size() - 1;
  for (int i = (int)poly.size() - 1; i >= deg; --i) {
    long long f = poly[i];  // phi is monic
    if (f == 0) continue;
    for (int j = 0; j <= deg; ++j) poly[i - deg + j] -= f * phi[j];
  }
  poly.resize(deg, 0);
  return poly;
}

Cyclo canonicalize(long long M, std::vector<long long> c, Rat scale) {
  long long g = 0;
  for (long long x : c) g = boost::integer::gcd(g, x < 0 ? -x : x);
  if (g == 0 || scale == Rat(0)) return cyc_zero(M);
  if (g != 1)
    for (long long& x : c) x /= g;
  scale *= Rat(g);
  if (scale < Rat(0)) {
    scale = -scale;
    for (long long& x : c) x = -x;
  }
  Cyclo out;
  out.M = M;
  out.scale = scale;
  out.c = std::move(c);
  return out;
}

void check_same_field(const Cyclo& a, const Cyclo& b) {
  if (a.M != b.M)
    throw std::invalid_argument("cyclotomic arithmetic: mismatched root orders");
}

}  // namespace

const std::vector<long long>& cyclotomic_poly(long long M) {
  auto& cache = phi_cache();
  auto it = cache.find(M);
  if (it != cache.end()) return it->second;
  if (M < 1) throw std::invalid_argument("cyclotomic_poly: M must be positive");
  // x^M - 1 divided by the product of Phi_d over proper divisors d.
  std::vector<long long> num(M + 1, 0);
  num[0] = -1;
  num[M] = 1;
  for (long long d = 1; d < M; ++d) {
    if (M % d != 0) continue;
    num = poly_divide(std::move(num), cyclotomic_poly(d));
  }
  return cache.emplace(M, std::move(num)).first->second;
}

Cyclo cyc_zero(long long M) {
  Cyclo z;
  z.M = M;
  z.scale = Rat(0);
  z.c.assign(cyclotomic_poly(M).size() - 1, 0);
  return z;
}

Cyclo cyc_rat(long long M, const Rat& r) {
  auto c = std::vector<long long>(cyclotomic_poly(M).size() - 1, 0);
  if (c.empty()) throw std::logic_error("cyc_rat: degree-zero field");
  c[0] = 1;
  return canonicalize(M, std::move(c), r);
}

Cyclo cyc_root(long long M, long long k) {
  k = mod_floor(k, M);
  std::vector<long long> poly(k + 1, 0);
  poly[k] = 1;
  return canonicalize(M, reduce_mod_phi(std::move(poly), M), Rat(1));
}

Cyclo cyc_add(const Cyclo& a, const Cyclo& b) {
  check_same_field(a, b);
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  // Common scale 1/lcm of the denominators times gcd of the numerators.
  long long an = a.scale.numerator(), ad = a.scale.denominator();
  long long bn = b.scale.numerator(), bd = b.scale.denominator();
  long long gn = boost::integer::gcd(an, bn);
  long long ld = ad / boost::integer::gcd(ad, bd) * bd;
  Rat common(gn, ld);
  long long fa = (a.scale / common).numerator();  // integral by construction
  long long fb = (b.scale / common).numerator();
  std::vector<long long> c(a.c.size());
  for (size_t i = 0; i < c.size(); ++i) c[i] = fa * a.c[i] + fb * b.c[i];
  return canonicalize(a.M, std::move(c), common);
}

Cyclo cyc_sub(const Cyclo& a, const Cyclo& b) {
  return cyc_add(a, cyc_scale(b, Rat(-1)));
}

Cyclo cyc_mul(const Cyclo& a, const Cyclo& b) {
  check_same_field(a, b);
  if (a.is_zero() || b.is_zero()) return cyc_zero(a.M);
  std::vector<long long> prod(a.c.size() + b.c.size() - 1, 0);
  for (size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i] == 0) continue;
    for (size_t j = 0; j < b.c.size(); ++j) prod[i + j] += a.c[i] * b.c[j];
  }
  return canonicalize(a.M, reduce_mod_phi(std::move(prod), a.M),
                      a.scale * b.scale);
}

Cyclo cyc_scale(const Cyclo& a, const Rat& r) {
  if (a.is_zero() || r == Rat(0)) return cyc_zero(a.M);
  return canonicalize(a.M, a.c, a.scale * r);
}

Cyclo cyc_conj(const Cyclo& a) {
  if (a.is_zero()) return a;
  std::vector<long long> poly(a.M, 0);
  for (size_t j = 0; j < a.c.size(); ++j) {
    if (a.c[j] == 0) continue;
    poly[(a.M - (long long)j) % a.M] += a.c[j];
  }
  return canonicalize(a.M, reduce_mod_phi(std::move(poly), a.M), a.scale);
}

bool cyc_eq(const Cyclo& a, const Cyclo& b) {
  check_same_field(a, b);
  return a.scale == b.scale && a.c == b.c;
}

Complex cyc_to_complex(const Cyclo& a) {
  if (a.is_zero()) return {0.0, 0.0};
  Complex s{0.0, 0.0};
  for (size_t j = 0; j < a.c.size(); ++j) {
    if (a.c[j] == 0) continue;
    double t = 2.0 * kPi * (double)j / (double)a.M;
    s += (double)a.c[j] * Complex{std::cos(t), std::sin(t)};
  }
  return rat_to_double(a.scale) * s;
}

Rat cyc_to_rational(const Cyclo& a) {
  if (a.is_zero()) return Rat(0);
  for (size_t j = 1; j < a.c.size(); ++j)
    if (a.c[j] != 0)
      throw std::domain_error("cyc_to_rational: value is irrational");
  return a.scale * Rat(a.c[0]);
}

std::string cyc_to_string(const Cyclo& a) {
  std::ostringstream os;
  if (a.is_zero()) return "0";
  os << "(" << a.scale.numerator() << "/" << a.scale.denominator() << ")*[";
  for (size_t j = 0; j < a.c.size(); ++j) {
    if (j) os << ",";
    os << a.c[j];
  }
  os << "]@" << a.M;
  return os.str();
}

Cyclo RootSum::finish(const Rat& scale) const {
  std::vector<long long> poly(tally.begin(), tally.end());
  return canonicalize(M, reduce_mod_phi(std::move(poly), M), scale);
}

}  // namespace supnorm
