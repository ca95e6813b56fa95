#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "supnorm/padic_oscillatory.hpp"

using namespace supnorm;

namespace {
TruncatedPAdic at(long long p, int v, long long u = 1) {
  int N = std::max(1, -v) + 2;
  return TruncatedPAdic(p, v, mod_floor(u, powll(p, N)) % p == 0
                                  ? 1
                                  : mod_floor(u, powll(p, N)),
                        N);
}
}  // namespace

TEST_CASE("shell integrals: closed form equals the root-of-unity oracle") {
  for (long long p : {3LL, 5LL, 7LL})
    for (int k : {0, 1, 2})
      for (int v = -4; v <= 2; ++v)
        for (long long u : {1LL, 2LL})
          CHECK(shell_psi_integral(k, at(p, v, u)) ==
                shell_psi_integral_oracle(k, at(p, v, u)));
}

TEST_CASE("shell integral spot values") {
  // v >= -k: full shell mass p^{-k}(1 - 1/p)
  CHECK(shell_psi_integral(0, at(5, 0)) == Rat(4, 5));
  CHECK(shell_psi_integral(1, at(5, -1)) == Rat(4, 25));
  // boundary shell v = -k-1 contributes the negative spike
  CHECK(shell_psi_integral(0, at(5, -1)) == Rat(-1, 5));
  CHECK(shell_psi_integral(2, at(3, -3)) == Rat(-1, 27));
  // deeper shells vanish
  CHECK(shell_psi_integral(0, at(5, -2)) == Rat(0));
}

TEST_CASE("steinberg tails: closed forms equal truncated series") {
  for (long long p : {3LL, 5LL, 7LL})
    for (int v = -3; v <= 4; ++v) {
      int cutoff = std::abs(v) + 4;
      CHECK(steinberg_tail_A(p, v) ==
            steinberg_tail_A_oracle(p, at(p, v), cutoff));
      CHECK(steinberg_tail_B(p, v) ==
            steinberg_tail_B_oracle(p, at(p, v), cutoff));
    }
}

TEST_CASE("tail spot values") {
  CHECK(steinberg_tail_A(5, 0) == Rat(0));
  CHECK(steinberg_tail_A(5, 1) == Rat(-1));
  CHECK(steinberg_tail_A(5, 3) == Rat(-1));
  CHECK(steinberg_tail_B(5, 0) == Rat(0));
  // v = 1: only the l = 1 spike survives: -p^{-1} * p^{-1}
  CHECK(steinberg_tail_B(5, 1) == Rat(-1, 25));
  // v = 2: (1/p - 1/p^2) - 1/p^3
  CHECK(steinberg_tail_B(5, 2) == Rat(1, 5) - Rat(1, 25) - Rat(1, 125));
}
