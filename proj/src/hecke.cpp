#include "supnorm/hecke.hpp"

#include <algorithm>

namespace supnorm {

namespace {

std::map<long long, int> factorize(long long r) {
  std::map<long long, int> f;
  for (long long q = 2; q * q <= r; ++q)
    while (r % q == 0) {
      f[q]++;
      r /= q;
    }
  if (r > 1) f[r]++;
  return f;
}

void prune(HeckeElement& h) {
  for (auto it = h.begin(); it != h.end();)
    it = std::abs(it->second) < 1e-14 ? h.erase(it) : std::next(it);
}

}  // namespace

HeckeElement kappa(long long r) {
  if (r < 1) throw std::invalid_argument("kappa: index must be positive");
  return {{r, Complex{1.0, 0.0}}};
}

HeckeElement convolve(const HeckeElement& h1, const HeckeElement& h2,
                      long long p) {
  HeckeElement out;
  for (const auto& [r, cr] : h1)
    for (const auto& [s, cs] : h2) {
      if (p > 0 && (r % p == 0 || s % p == 0))
        throw std::domain_error("convolve: index not coprime to p");
      auto fr = factorize(r), fs = factorize(s);
      // per-prime exponent lists, then the cartesian product of the
      // single-prime expansions kappa_{l^a} kappa_{l^b} = sum kappa_{l^{a+b-2j}}
      std::vector<std::vector<long long>> parts;
      std::map<long long, std::pair<int, int>> exps;
      for (auto& [l, a] : fr) exps[l].first = a;
      for (auto& [l, b] : fs) exps[l].second = b;
      std::vector<long long> indices{1};
      for (auto& [l, ab] : exps) {
        auto [a, b] = ab;
        std::vector<long long> next;
        for (int j = 0; j <= std::min(a, b); ++j) {
          long long pw = powll(l, a + b - 2 * j);
          for (long long base : indices) next.push_back(base * pw);
        }
        indices = std::move(next);
      }
      for (long long idx : indices) out[idx] += cr * cs;
    }
  prune(out);
  if (out.empty()) out[1] = Complex{0.0, 0.0};
  return out;
}

HeckeElement adjoint(const HeckeElement& h) {
  HeckeElement out;
  for (const auto& [r, c] : h) out[r] = std::conj(c);
  return out;
}

std::vector<long long> admissible_primes(
    long long p, std::pair<long long, long long> window) {
  std::vector<long long> kept;
  for (long long l : primes_in(std::max<long long>(2, window.first),
                               window.second)) {
    if (l == p || l % p == 1) continue;
    bool ok = true;
    auto pairs_ok = [&](long long l2) {
      long long prod = mulmod(l % p, l2 % p, p);
      return prod != 1 && mulmod(prod, prod, p) != 1;
    };
    if (!pairs_ok(l)) ok = false;
    for (long long l2 : kept)
      if (ok && !pairs_ok(l2)) ok = false;
    if (ok) kept.push_back(l);
  }
  return kept;
}

std::vector<long long> build_S(long long p, long long Lambda,
                               std::pair<long long, long long> window) {
  if (Lambda < 10) throw std::invalid_argument("build_S: Lambda must be >= 10");
  if (window.second <= window.first) window = {Lambda / 2, 3 * Lambda};
  auto kept = admissible_primes(p, window);
  if (kept.empty())
    throw std::domain_error("build_S: degenerate amplifier, no admissible primes");
  return kept;
}

HeckeElement build_f_ur(const std::vector<long long>& S,
                        const LambdaSource& lambda, long long p) {
  HeckeElement h1, h2;
  auto c_of = [&](long long r) -> Complex {
    Complex lam = lambda(r);
    if (std::abs(lam) < 1e-14) return {0.0, 0.0};
    return std::abs(lam) / lam;
  };
  for (long long l : S) {
    Complex c1 = c_of(l), c2 = c_of(l * l);
    if (std::abs(c1) > 0) h1[l] = c1;
    if (std::abs(c2) > 0) h2[l * l] = c2;
  }
  if (h1.empty() && h2.empty())
    throw std::domain_error("build_f_ur: all lambda values vanish");
  HeckeElement f;
  if (!h1.empty()) f = convolve(h1, adjoint(h1), p);
  if (!h2.empty()) {
    HeckeElement f2 = convolve(h2, adjoint(h2), p);
    for (const auto& [r, c] : f2) f[r] += c;
  }
  prune(f);
  return f;
}

std::vector<std::array<long long, 4>> hecke_coset_reps(long long l) {
  if (!is_prime(l) || l > 100)
    throw std::invalid_argument("hecke_coset_reps: prime l <= 100 required");
  std::vector<std::array<long long, 4>> reps;
  for (long long b = 0; b < l; ++b) reps.push_back({1, b, 0, l});
  reps.push_back({l, 0, 0, 1});
  return reps;
}

bool hecke_convolution_check(long long l) {
  auto reps = hecke_coset_reps(l);
  // all products are upper triangular; Hermite reduction is b mod d
  std::map<std::array<long long, 3>, long long> mult;  // (a, b mod d, d)
  for (const auto& A : reps)
    for (const auto& B : reps) {
      long long a = A[0] * B[0];
      long long b = A[0] * B[1] + A[1] * B[3];
      long long d = A[3] * B[3];
      mult[{a, mod_floor(b, d), d}]++;
    }
  long long scalar = 0, nonscalar_classes = 0;
  bool uniform = true;
  for (const auto& [key, cnt] : mult) {
    if (key[0] == l && key[1] == 0 && key[2] == l) {
      scalar = cnt;
    } else {
      ++nonscalar_classes;
      uniform = uniform && cnt == 1;
    }
  }
  // kappa_{l^2} picks up the scalar class once; the remaining l scalar
  // occurrences divided by l give the kappa_1 coefficient
  bool counts = nonscalar_classes == l * l + l && scalar == l + 1;
  bool algebra = (scalar - 1) % l == 0 && (scalar - 1) / l == 1;
  return uniform && counts && algebra;
}

}  // namespace supnorm
