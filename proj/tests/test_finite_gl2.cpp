#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "supnorm/finite_gl2.hpp"

using namespace supnorm;

TEST_CASE("group orders") {
  CHECK(gl2_order(3, 1) == 48);
  CHECK(gl2_order(5, 1) == 480);
  CHECK(gl2_order(3, 2) == 3888);
}

TEST_CASE("matrix arithmetic") {
  ResidueMatrix g(3, 2, {1, 3, 0, 4});
  ResidueMatrix gi = g.inv();
  ResidueMatrix prod = g.mul(gi);
  CHECK(prod.e == std::array<long long, 4>{1, 0, 0, 1});
  CHECK_THROWS_AS(ResidueMatrix(3, 2, {1, 1, 1, 1}).inv(), std::domain_error);
}

TEST_CASE("enumeration partitions the group into conjugacy classes") {
  for (auto [p, m, classes] : {std::tuple<long long, int, int>{3, 1, 8},
                               {5, 1, 24}}) {
    GL2Group G = enumerate_gl2(p, m);
    CHECK(G.order == gl2_order(p, m));
    CHECK((long long)G.elems.size() == G.order);
    CHECK(G.r() == classes);
    CHECK(std::accumulate(G.csize.begin(), G.csize.end(), 0LL) == G.order);
    // inverse-class map is an involution
    for (int i = 0; i < G.r(); ++i) CHECK(G.inv_class[G.inv_class[i]] == i);
  }
  GL2Group G9 = enumerate_gl2(3, 2);
  CHECK(G9.order == 3888);
  CHECK(std::accumulate(G9.csize.begin(), G9.csize.end(), 0LL) == 3888);
  // class membership is constant under conjugation (spot sample)
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    uint32_t g = G9.elems[rng() % G9.elems.size()];
    uint32_t x = G9.elems[rng() % G9.elems.size()];
    uint32_t conj = G9.mul_codes(G9.mul_codes(x, g), G9.inv_code(x));
    CHECK(G9.cls[conj] == G9.cls[g]);
  }
}

TEST_CASE("enumeration refuses to exceed its budget") {
  CHECK_THROWS_AS(enumerate_gl2(7, 2, 1000), ResourceError);
}

TEST_CASE("depth of a class: distance from the center") {
  ResidueMatrix id(3, 2, {1, 0, 0, 1});
  CHECK(level_of(id).central);
  CHECK(level_of(ResidueMatrix(3, 2, {2, 0, 0, 2})).central);
  CHECK(level_of(ResidueMatrix(3, 2, {1, 3, 0, 1})).lambda == 1);
  CHECK(level_of(ResidueMatrix(3, 2, {1, 0, 0, 4})).lambda == 1);
  CHECK(level_of(ResidueMatrix(3, 2, {1, 1, 1, 2})).lambda == 0);
  CHECK_FALSE(level_of(ResidueMatrix(3, 2, {1, 3, 0, 1})).central);

  // invariant under conjugation
  GL2Group G = enumerate_gl2(3, 2);
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    uint32_t g = G.elems[rng() % G.elems.size()];
    uint32_t x = G.elems[rng() % G.elems.size()];
    uint32_t conj = G.mul_codes(G.mul_codes(x, g), G.inv_code(x));
    LevelResult a = level_of(ResidueMatrix(3, 2, G.unpack(g)));
    LevelResult b = level_of(ResidueMatrix(3, 2, G.unpack(conj)));
    CHECK(a.lambda == b.lambda);
    CHECK(a.central == b.central);
  }
}

namespace {
void check_table_consistency(const CharacterTable& t) {
  long long sum_sq = 0;
  for (long long d : t.dims) sum_sq += d * d;
  CHECK(sum_sq == t.group_order);
  CHECK(table_orthogonality_residual(t) < 1e-8);

  // identity column carries the dimensions
  int id_class = -1;
  for (size_t c = 0; c < t.class_reps.size(); ++c)
    if (t.class_reps[c] == std::array<long long, 4>{1, 0, 0, 1}) id_class = (int)c;
  REQUIRE(id_class >= 0);
  for (size_t i = 0; i < t.dims.size(); ++i)
    CHECK(std::abs(t.values[i][id_class] - Complex((double)t.dims[i], 0.0)) <
          1e-8);

  // a trivial character exists: dimension 1, all values 1
  bool found_trivial = false;
  for (size_t i = 0; i < t.dims.size(); ++i) {
    if (t.dims[i] != 1) continue;
    bool all_one = true;
    for (const Complex& v : t.values[i])
      if (std::abs(v - Complex{1, 0}) > 1e-8) all_one = false;
    if (all_one) found_trivial = true;
  }
  CHECK(found_trivial);

  // exact mode: root-of-unity multiplicities reproduce the numeric values
  REQUIRE(t.mults.size() == t.dims.size());
  for (size_t i = 0; i < t.dims.size(); ++i)
    for (size_t c = 0; c < t.class_sizes.size(); ++c) {
      Complex z{0, 0};
      for (long long k = 0; k < t.exponent; ++k) {
        long long mult = t.mults[i][c][(size_t)k];
        CHECK(mult >= 0);
        CHECK(mult <= t.dims[i]);
        if (mult)
          z += (double)mult * std::polar(1.0, 2 * kPi * (double)k / (double)t.exponent);
      }
      CHECK(std::abs(z - t.values[i][c]) < 1e-8);
    }
}
}  // namespace

TEST_CASE("character table of GL2 over a prime field") {
  for (long long p : {3LL, 5LL}) {
    GL2Group G = enumerate_gl2(p, 1);
    CharacterTable t = character_table(G, 1);
    check_table_consistency(t);
    std::vector<long long> dims = t.dims;
    std::sort(dims.begin(), dims.end());
    // known dimension multiset: 1 and q appear q-1 times each,
    // q-1 appears q(q-1)/2 times, q+1 appears (q-1)(q-2)/2 times
    long long q = p;
    CHECK(std::count(dims.begin(), dims.end(), 1LL) == q - 1);
    CHECK(std::count(dims.begin(), dims.end(), q) == q - 1);
    CHECK(std::count(dims.begin(), dims.end(), q - 1) == q * (q - 1) / 2);
    CHECK(std::count(dims.begin(), dims.end(), q + 1) == (q - 1) * (q - 2) / 2);
  }
}

TEST_CASE("character table is deterministic in the seed") {
  GL2Group G = enumerate_gl2(3, 1);
  CharacterTable a = character_table(G, 42);
  CharacterTable b = character_table(G, 42);
  CHECK(a.dims == b.dims);
  for (size_t i = 0; i < a.values.size(); ++i)
    for (size_t c = 0; c < a.values[i].size(); ++c)
      CHECK(std::abs(a.values[i][c] - b.values[i][c]) < 1e-14);
}

TEST_CASE("character table at depth two") {
  GL2Group G = enumerate_gl2(3, 2);
  CharacterTable t = character_table(G, 1);
  check_table_consistency(t);
  // levels recorded per class: central classes marked, others in [0, m)
  for (size_t c = 0; c < t.class_level.size(); ++c) {
    if (t.class_level[c] == -1) continue;
    CHECK(t.class_level[c] >= 0);
    CHECK(t.class_level[c] < t.m);
  }
  // bound report machinery: generous constant always passes
  long long dmax = *std::max_element(t.dims.begin(), t.dims.end());
  CharBoundReport r = verify_character_bound(t, dmax, false);
  CHECK(r.rows_scanned > 0);
  CHECK(r.worst_ratio > 0.0);
  CHECK(r.within(1e6));
  CHECK((int)r.max_ratio_per_lambda.size() == t.m);
  CHECK_THROWS_AS(verify_character_bound(t, 9999, false), std::domain_error);
}
