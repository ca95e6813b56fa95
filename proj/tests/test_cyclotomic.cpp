#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "supnorm/cyclotomic.hpp"

using namespace supnorm;

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_poly(1) == std::vector<long long>{-1, 1});
  CHECK(cyclotomic_poly(3) == std::vector<long long>{1, 1, 1});
  CHECK(cyclotomic_poly(4) == std::vector<long long>{1, 0, 1});
  CHECK(cyclotomic_poly(9) == std::vector<long long>{1, 0, 0, 1, 0, 0, 1});
  // phi(12) = 4: x^4 - x^2 + 1
  CHECK(cyclotomic_poly(12) == std::vector<long long>{1, 0, -1, 0, 1});
}

TEST_CASE("roots of unity sum to zero") {
  for (long long M : {3LL, 9LL, 12LL, 54LL}) {
    Cyclo s = cyc_zero(M);
    for (long long k = 0; k < M; ++k) s = cyc_add(s, cyc_root(M, k));
    CHECK(s.is_zero());
    CHECK(cyc_to_rational(s) == Rat(0));
  }
}

TEST_CASE("arithmetic identities") {
  long long M = 12;
  Cyclo z = cyc_root(M, 1);
  // zeta^6 = -1
  Cyclo z6 = cyc_mul(cyc_mul(z, z), cyc_mul(cyc_mul(z, z), cyc_mul(z, z)));
  CHECK(cyc_eq(z6, cyc_rat(M, Rat(-1))));
  // zeta * conj(zeta) = 1
  CHECK(cyc_eq(cyc_mul(z, cyc_conj(z)), cyc_rat(M, Rat(1))));
  // (1 + zeta_3)(1 + zeta_3^2) = 1 since 1 + z + z^2 = 0
  Cyclo a = cyc_add(cyc_rat(3, Rat(1)), cyc_root(3, 1));
  Cyclo b = cyc_add(cyc_rat(3, Rat(1)), cyc_root(3, 2));
  CHECK(cyc_to_rational(cyc_mul(a, b)) == Rat(1));
}

TEST_CASE("rational extraction guards") {
  Cyclo z = cyc_root(9, 1);
  CHECK_THROWS_AS(cyc_to_rational(z), std::domain_error);
  Cyclo r = cyc_scale(cyc_rat(9, Rat(3, 4)), Rat(2));
  CHECK(cyc_to_rational(r) == Rat(3, 2));
}

TEST_CASE("complex embedding agrees") {
  long long M = 54;
  Cyclo v = cyc_add(cyc_root(M, 5), cyc_scale(cyc_root(M, 31), Rat(2, 3)));
  Complex direct = std::polar(1.0, 2 * kPi * 5 / 54.0) +
                   2.0 / 3.0 * std::polar(1.0, 2 * kPi * 31 / 54.0);
  CHECK(std::abs(cyc_to_complex(v) - direct) < 1e-12);
}

TEST_CASE("root sum accumulator matches elementwise addition") {
  long long M = 20;
  RootSum acc(M);
  Cyclo direct = cyc_zero(M);
  long long ks[] = {3, 7, 7, 13, 19, 3, 3};
  for (long long k : ks) {
    acc.add(k);
    direct = cyc_add(direct, cyc_root(M, k));
  }
  CHECK(cyc_eq(acc.finish(Rat(1, 4)), cyc_scale(direct, Rat(1, 4))));
}

TEST_CASE("gauss sum square in Q(zeta_5): g^2 = 5 for the quadratic character") {
  // chi(k) = legendre symbol mod 5: chi(1)=chi(4)=1, chi(2)=chi(3)=-1
  long long M = 5;
  Cyclo g = cyc_zero(M);
  int leg[5] = {0, 1, -1, -1, 1};
  for (long long x = 1; x < 5; ++x)
    g = cyc_add(g, cyc_scale(cyc_root(M, x), Rat(leg[x])));
  CHECK(cyc_to_rational(cyc_mul(g, g)) == Rat(5));
}
