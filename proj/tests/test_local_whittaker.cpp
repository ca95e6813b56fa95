#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "supnorm/local_whittaker.hpp"

using namespace supnorm;

TEST_CASE("descriptor table") {
  LocalRepDescriptor ps = describe_ps(make_char(5, 2, 1), Complex{0, 0});
  CHECK(ps.n == 2);
  CHECK(ps.d == Rat(30));

  LocalRepDescriptor st = describe_steinberg(5);
  CHECK(st.n == 1);
  CHECK(st.d == Rat(5));
  CHECK_THROWS_AS(describe_steinberg(2), std::domain_error);
  CHECK_THROWS_AS(describe_steinberg(9), std::domain_error);

  LocalRepDescriptor se = describe_supercuspidal(5, 2, true);
  CHECK(se.n == 4);
  CHECK(se.d == Rat(20));
  LocalRepDescriptor so = describe_supercuspidal(5, 2, false);
  CHECK(so.n == 3);
  CHECK(so.d == Rat(24));
  CHECK_THROWS_AS(describe_supercuspidal(5, 1, false), std::domain_error);
  // unramified inducing character has no newform level here
  CHECK_THROWS_AS(describe_ps(make_char(5, 2, 0), Complex{0, 0}),
                  std::domain_error);
}

TEST_CASE("coset representatives: counts and exhaustive cover") {
  CHECK(coset_reps(3, 1).size() == 4);
  CHECK(coset_reps(3, 2).size() == 12);
  CHECK(coset_reps(5, 2).size() == 30);
  CHECK(coset_cover_check(3, 1));
  CHECK(coset_cover_check(3, 2));
  CHECK(coset_cover_check(5, 1));
}

TEST_CASE("steinberg averages agree with the tail-product assembly") {
  for (long long p : {3LL, 5LL, 7LL})
    for (int v = -3; v <= 4; ++v)
      CHECK(steinberg_SV(p, v) == steinberg_oracle(p, v));
}

TEST_CASE("steinberg spot values and total mass") {
  CHECK(steinberg_SV(5, -1) == Rat(5));
  CHECK(steinberg_SV(5, -2) == Rat(0));
  CHECK(steinberg_SV(5, 0) == Rat(1) + Rat(1, 25));
  // sum over shells with weight (1 - 1/p) recovers the formal dimension p;
  // the partial sum stops before the rational denominators overflow
  for (long long p : {3LL, 7LL}) {
    int V = p == 3 ? 15 : 9;
    Rat mass(0);
    for (int v = -1; v <= V; ++v)
      mass += Rat(p - 1, p) * steinberg_SV(p, v);
    double tail = 2.0 * std::pow((double)p, -V);
    CHECK(std::abs(rat_to_double(mass) - (double)p) < tail);
  }
}

TEST_CASE("supercuspidal averages: closed form equals the kirillov assembly") {
  for (auto [p, m, even] : {std::tuple<long long, int, bool>{5, 1, true},
                            {3, 2, true},
                            {3, 2, false}}) {
    LocalRepDescriptor d = describe_supercuspidal(p, m, even);
    for (int v = -m - 2; v <= 2; ++v) {
      TruncatedPAdic y(p, v, 1, std::max(1, -v) + m);
      CHECK(sc_average(d, v) == sc_kirillov_oracle(d, y));
    }
  }
}

TEST_CASE("supercuspidal spot values, mass, and orthonormality") {
  LocalRepDescriptor e51 = describe_supercuspidal(5, 1, true);
  CHECK(sc_average(e51, -1) == Rat(4));
  CHECK(sc_average(e51, 0) == Rat(0));

  LocalRepDescriptor o32 = describe_supercuspidal(3, 2, false);
  CHECK(sc_average(o32, -2) == Rat(6));
  CHECK(sc_average(o32, -1) == Rat(2));
  CHECK(sc_average(o32, 0) == Rat(0));

  // shell-weight-1 mass equals the formal dimension
  for (const auto& d : {e51, o32, describe_supercuspidal(3, 2, true)}) {
    Rat mass(0);
    for (int v = -d.m - 1; v <= 1; ++v) mass += sc_average(d, v);
    CHECK(mass == d.d);
  }

  CHECK(sc_orthonormality_check(3, 1));
  CHECK(sc_orthonormality_check(5, 1));
  CHECK(sc_orthonormality_check(3, 2));
}

TEST_CASE("principal series: basis vectors are unit vectors") {
  LocalRepDescriptor d = describe_ps(make_char(3, 2, 1), Complex{0.0, 0.5});
  double expect = 1.0 + 1.0 / 3.0;
  for (CosetRep r : {CosetRep{0, 0}, CosetRep{0, 4}, CosetRep{1, 1},
                     CosetRep{2, 0}})
    CHECK(ps_whittaker_norm(d, r) == doctest::Approx(expect).epsilon(1e-9));
}

TEST_CASE("principal series: partial averages sit on the predicted shells") {
  LocalRepDescriptor d = describe_ps(make_char(3, 2, 1), Complex{0.0, 0.25});
  int m = d.m;
  for (int v = -m - 1; v <= 1; ++v)
    for (long long u : {1LL, 2LL}) {
      TruncatedPAdic y(3, v, u, m + std::max(1, -v) + 2);
      double absy = std::pow(3.0, -v);
      // bottom level carries |y| on every supported shell
      double s0 = ps_partial_average(d, 0, y);
      CHECK(s0 == doctest::Approx(v >= -m ? absy : 0.0).epsilon(1e-9));
      // middle levels are sharp: level i fires only at v = -(m - i)
      for (int i = 1; i < m; ++i) {
        double si = ps_partial_average(d, i, y);
        CHECK(si == doctest::Approx(v == i - m ? absy : 0.0).epsilon(1e-9));
      }
      // top level needs integral y
      double sm = ps_partial_average(d, m, y);
      CHECK(sm == doctest::Approx(v >= 0 ? absy : 0.0).epsilon(1e-9));
    }
}

TEST_CASE("principal series: top-level value equals the tail integral") {
  LocalRepDescriptor d = describe_ps(make_char(5, 2, 1), Complex{0.0, 0.3});
  for (int v = -1; v <= 2; ++v)
    for (long long u : {1LL, 3LL}) {
      TruncatedPAdic y(5, v, u, d.m + std::max(1, -v) + 2);
      Complex pref = std::exp(Complex(-(double)v, 0.0) *
                              (Complex(0.5, 0.0) - d.rho) * std::log(5.0));
      Complex expect =
          pref * std::sqrt(rat_to_double(d.d)) * ps_tail_integral_oracle(d, y);
      Complex got = ps_whittaker(d, CosetRep{d.m, 0}, y);
      CHECK(std::abs(got - expect) < 1e-9);
    }
}

TEST_CASE("master local bound") {
  TruncatedPAdic y0(3, 0, 1, 4);
  TruncatedPAdic ym(3, -1, 2, 4);
  for (const auto& d : {describe_ps(make_char(3, 2, 1), Complex{0.0, 0.0}),
                        describe_steinberg(3),
                        describe_supercuspidal(3, 2, false)}) {
    double ratio = 0.0;
    CHECK(local_bound_check(d, y0, &ratio));
    CHECK(ratio > 0.0);
    CHECK(local_bound_check(d, ym));
  }
}

TEST_CASE("shallow inputs are rejected, not silently truncated") {
  LocalRepDescriptor d = describe_ps(make_char(3, 2, 1), Complex{0.0, 0.0});
  TruncatedPAdic shallow(3, -2, 1, 1);
  CHECK_THROWS_AS((void)ps_whittaker(d, CosetRep{0, 1}, shallow),
                  PrecisionError);
}
