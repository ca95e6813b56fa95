#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "supnorm/residue_padic.hpp"

using namespace supnorm;

TEST_CASE("rings reject even or composite characteristic") {
  CHECK_THROWS_AS(ResidueRing(2, 1), std::invalid_argument);
  CHECK_THROWS_AS(ResidueRing(9, 1), std::invalid_argument);
  CHECK_NOTHROW(ResidueRing(3, 2));
}

TEST_CASE("truncated scalars normalize and multiply") {
  TruncatedPAdic a(5, 1, 7, 2);
  CHECK(a.abs_p() == Rat(1, 5));
  TruncatedPAdic b(5, -2, 3, 2);
  TruncatedPAdic c = a.times(b);
  CHECK(c.v == -1);
  CHECK(c.unit == 21 % 25);
  CHECK(c.N == 2);
  CHECK_THROWS_AS(TruncatedPAdic(5, 0, 10, 2), std::domain_error);
}

TEST_CASE("precision is tracked, not invented") {
  TruncatedPAdic a(3, 0, 2, 1);
  CHECK(a.unit_mod(1) == 2);
  CHECK_THROWS_AS(a.unit_mod(2), PrecisionError);
  TruncatedPAdic inv = a.inverse();
  CHECK(mod_floor(inv.unit * a.unit, 3) == 1);
}

TEST_CASE("decompose matches valuation and unit") {
  TruncatedPAdic y = decompose(18, 5, 3, 2);
  CHECK(y.v == 2);
  // 18/5 = 9 * (2/5); 2 * inv(5) = 2 * 2 = 4 mod 9
  CHECK(y.unit == 4);
  TruncatedPAdic w = decompose(-1, 7, 5, 2);
  CHECK(w.v == 0);
  CHECK(mod_floor(w.unit * 7, 25) == mod_floor(-1, 25));
}

TEST_CASE("additive character fractional parts") {
  // psi(1/9) = e(1/9)
  TruncatedPAdic x(3, -2, 1, 2);
  CHECK(additive_char_frac(x) == Rat(1, 9));
  // integral argument is trivial
  TruncatedPAdic z(3, 0, 2, 1);
  CHECK(additive_char_frac(z) == Rat(0));
  // negative unit: psi(-1/3) = e(2/3)
  TruncatedPAdic n(3, -1, 2, 1);
  CHECK(additive_char_frac(n) == Rat(2, 3));
  CHECK(additive_char_frac(7, 9, 3) == Rat(7, 9));
  CHECK(additive_char_frac(1, 2, 3) == Rat(0));
}

TEST_CASE("additive character is a character") {
  // psi(x)psi(y) = psi(x+y) on sampled rationals with p-power denominators
  for (long long a : {1LL, 2LL, 4LL})
    for (long long b : {1LL, 3LL, 8LL}) {
      Complex lhs = additive_char(a, 9, 3) * additive_char(b, 9, 3);
      Complex rhs = additive_char(a + b, 9, 3);
      CHECK(std::abs(lhs - rhs) < 1e-12);
    }
}

TEST_CASE("unit group structure") {
  UnitGroup U5 = unit_group(5, 1);
  CHECK(U5.generator == 2);
  CHECK(U5.order == 4);
  CHECK(U5.elements[0] == 1);
  CHECK(U5.log_of(4) == 2);

  UnitGroup U9 = unit_group(3, 2);
  CHECK(U9.generator == 2);
  CHECK(U9.order == 6);
  // cyclic: every unit appears exactly once
  std::vector<long long> sorted = U9.elements;
  std::sort(sorted.begin(), sorted.end());
  CHECK(sorted == std::vector<long long>{1, 2, 4, 5, 7, 8});
  CHECK(euler_phi_pk(3, 2) == 6);
  CHECK(euler_phi_pk(7, 0) == 1);
}
