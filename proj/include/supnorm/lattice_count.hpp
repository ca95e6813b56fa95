#pragma once

#include <functional>

#include "supnorm/finite_gl2.hpp"
#include "supnorm/hecke.hpp"

namespace supnorm {

struct UpperHalfPoint {
  double x;
  double y;
};

/// |x| <= 1/2 and |z| >= 1, boundary inclusive.
bool in_fundamental_domain(const UpperHalfPoint& z);

/// Standard hyperbolic point-pair invariant |z1-z2|^2 / (y1 y2).
double point_pair_u(const UpperHalfPoint& z1, const UpperHalfPoint& z2);

/// Entrywise congruence A = res mod q; q = 1 disables the filter.
struct CongruenceSpec {
  long long q = 1;
  std::array<long long, 4> res = {0, 0, 0, 0};
};

struct CountResult {
  long long count = 0;
  std::vector<std::array<long long, 4>> matrices;  // filled when requested
};

/// Integer matrices A with det A = r, A = cs.res mod cs.q, u(Az, z) <= 1.
/// Enumerates by c-columns with a unipotent translation parameter; parallel
/// over c. Throws ResourceError when the scan box exceeds the budget.
CountResult count_lattice(long long r, const CongruenceSpec& cs,
                          const UpperHalfPoint& z, bool want_list = false,
                          long long budget = 200'000'000);

/// Four-loop box scan over the same set; serial reference.
CountResult count_lattice_naive(long long r, const CongruenceSpec& cs,
                                const UpperHalfPoint& z,
                                bool want_list = false);

CountResult count_M(long long r, const ResidueMatrix& g,
                    const UpperHalfPoint& z, bool want_list = false,
                    long long budget = 200'000'000);

CountResult count_M_lambda(long long r, int lambda, long long p,
                           const UpperHalfPoint& z, bool want_list = false,
                           long long budget = 200'000'000);

using LevelEnvelope = std::function<double(int)>;

/// p^lambda, or p^{(m+lambda)/2} in weak mode; lambda = m means central.
LevelEnvelope lemma_envelope(long long p, int m, bool weak);
/// Largest |chi| over the table's classes at each level.
LevelEnvelope table_envelope(const CharacterTable& t);

/// sum_r |y_r|/sqrt(r) * sum_{lambda=0}^{m} env(lambda) * #M^(lambda)(r).
double geometric_side(const UpperHalfPoint& z, const HeckeElement& f_ur,
                      const LevelEnvelope& env, long long p, int m,
                      long long budget = 200'000'000);

struct ScalingFit {
  std::vector<long long> grid;
  std::vector<double> blocks;
  double slope;
};

/// Growth of the lambda = 0 block of the geometric side in the amplifier
/// length; least-squares slope on the log-log grid.
ScalingFit lambda0_scaling(long long p, const UpperHalfPoint& z,
                           std::vector<long long> grid = {2, 4, 6, 8},
                           long long budget = 200'000'000);

}  // namespace supnorm
