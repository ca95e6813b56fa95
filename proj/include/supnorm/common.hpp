#pragma once

#include <boost/rational.hpp>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace supnorm {

using Rat = boost::rational<long long>;
using Complex = std::complex<double>;

inline constexpr double kTol = 1e-9;
inline constexpr double kPi = 3.14159265358979323846;

// Operation asked for more p-adic digits than the operand carries.
struct PrecisionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Enumeration would exceed the configured element budget.
struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Numeric routine could not reach its accuracy target.
struct AccuracyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline long long powll(long long b, int e) {
  long long r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

inline long long mod_floor(long long a, long long m) {
  long long r = a % m;
  return r < 0 ? r + m : r;
}

inline long long mulmod(long long a, long long b, long long m) {
  return static_cast<long long>(
      static_cast<unsigned long long>(static_cast<__int128>(a) * b % m));
}

inline long long powmod(long long b, long long e, long long m) {
  long long r = 1 % m;
  b = mod_floor(b, m);
  while (e > 0) {
    if (e & 1) r = mulmod(r, b, m);
    b = mulmod(b, b, m);
    e >>= 1;
  }
  return r;
}

// Extended Euclid; requires gcd(a, m) = 1.
inline long long invmod(long long a, long long m) {
  long long t = 0, nt = 1, r = m, nr = mod_floor(a, m);
  while (nr != 0) {
    long long q = r / nr;
    long long tmp = t - q * nt;
    t = nt; nt = tmp;
    tmp = r - q * nr;
    r = nr; nr = tmp;
  }
  if (r != 1) throw std::domain_error("invmod: arguments not coprime");
  return mod_floor(t, m);
}

inline bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline std::vector<long long> primes_in(long long lo, long long hi) {
  std::vector<long long> out;
  for (long long n = lo; n < hi; ++n)
    if (is_prime(n)) out.push_back(n);
  return out;
}

inline double rat_to_double(const Rat& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

inline Rat rat_pow(const Rat& b, int e) {
  if (e >= 0) {
    Rat r(1);
    for (int i = 0; i < e; ++i) r *= b;
    return r;
  }
  Rat r(1);
  for (int i = 0; i < -e; ++i) r /= b;
  return r;
}

}  // namespace supnorm
