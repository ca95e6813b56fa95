#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "supnorm/mult_char.hpp"

using namespace supnorm;

TEST_CASE("conductors") {
  CHECK(make_char(5, 2, 0).cond == 0);
  CHECK(make_char(5, 2, 1).cond == 2);
  // exponent 5 kills the order-5 part 1+5Z_5: chi factors through (Z/5)^x
  CHECK(make_char(5, 2, 5).cond == 1);
  CHECK(make_char(3, 2, 1).cond == 2);
  CHECK(make_char(3, 2, 3).cond == 1);
  CHECK(make_char(3, 2, 2).cond == 2);
}

TEST_CASE("character multiplicativity and inversion") {
  MultChar chi = make_char(3, 2, 1);
  for (long long u : {1LL, 2LL, 4LL, 5LL, 7LL, 8LL})
    for (long long w : {2LL, 5LL}) {
      Complex lhs = chi.eval(u) * chi.eval(w);
      Complex rhs = chi.eval(mod_floor(u * w, 9));
      CHECK(std::abs(lhs - rhs) < 1e-12);
    }
  MultChar inv = chi.bar();
  for (long long u : {2LL, 5LL, 7LL})
    CHECK(std::abs(chi.eval(u) * inv.eval(u) - Complex{1, 0}) < 1e-12);
  CHECK(chi.times(inv).e_exp == 0);
}

TEST_CASE("enumerate_X sizes") {
  CHECK(enumerate_X(3, 1).size() == 2);
  CHECK(enumerate_X(3, 2).size() == 6);
  CHECK(enumerate_X(5, 2).size() == 20);
  int primitive = 0;
  for (const auto& chi : enumerate_X(5, 2))
    if (chi.cond == 2) ++primitive;
  CHECK(primitive == 16);
}

TEST_CASE("complete gauss sum magnitude and epsilon factor") {
  for (long long p : {3LL, 5LL})
    for (int a : {1, 2})
      for (const MultChar& chi : enumerate_X(p, a)) {
        if (chi.cond != a) continue;
        Complex eps = epsilon_factor(chi);
        CHECK(std::abs(std::abs(eps) - 1.0) < 1e-9);
        // g(chi) g(bar chi) = chi(-1) p^a
        Complex lhs = gauss_complete(chi) * gauss_complete(chi.bar());
        Complex rhs = chi.at_minus_one() * (double)powll(p, a);
        CHECK(std::abs(lhs - rhs) < 1e-7);
      }
}

TEST_CASE("exact complete gauss sum against the numeric one") {
  for (const MultChar& chi : enumerate_X(3, 2)) {
    if (chi.cond != 2) continue;
    long long M = cyclo_field_order(3, 2, 2);
    Complex exact = cyc_to_complex(gauss_complete_exact(chi, M));
    CHECK(std::abs(exact - gauss_complete(chi)) < 1e-9);
  }
}

TEST_CASE("post-conductor parameter b and the linearized character") {
  for (long long p : {3LL, 5LL}) {
    for (const MultChar& chi : enumerate_X(p, 2)) {
      if (chi.cond != 2) continue;
      long long b = b_of_chi(chi);
      CHECK(b % p != 0);
      // chi(1 + p t) = e(b t / p) for every t
      for (long long t = 0; t < p; ++t) {
        Complex lhs = chi.eval(mod_floor(1 + p * t, p * p));
        Complex rhs = unit_circle(Rat(mod_floor(b * t, p), p));
        CHECK(std::abs(lhs - rhs) < 1e-12);
      }
    }
  }
}

TEST_CASE("closed form matches brute force including the twist expansion") {
  // depth l below ceil(a/2): a=3, l=1 exercises the twist branch
  long long p = 3;
  for (const MultChar& chi : enumerate_X(p, 3)) {
    if (chi.cond != 3) continue;
    for (int k : {-3, -2}) {
      int l = 1;
      int N = std::max({3, l, -k});
      long long M = cyclo_field_order(p, 3, N);
      for (long long z = 1; z < powll(p, N); ++z) {
        if (z % p == 0) continue;
        TruncatedPAdic y(p, k, z, N);
        CHECK(cyc_eq(gauss_G_exact(l, y, chi, M),
                     gauss_G_closed_form_exact(l, k, z, chi, M)));
      }
    }
  }
}

TEST_CASE("precision errors propagate") {
  MultChar chi = make_char(5, 2, 1);
  TruncatedPAdic shallow(5, 0, 2, 1);
  CHECK_THROWS_AS((void)chi.exact_exponent(shallow), PrecisionError);
  CHECK_THROWS_AS(gauss_G(2, TruncatedPAdic(5, -3, 1, 1), chi), PrecisionError);
}
