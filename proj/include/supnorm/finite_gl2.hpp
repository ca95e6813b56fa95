#pragma once

#include <array>
#include <cstdint>
#include <map>

#include "supnorm/cyclotomic.hpp"
#include "supnorm/residue_padic.hpp"

namespace supnorm {

/// 2x2 matrix over Z/p^mZ.
struct ResidueMatrix {
  long long p;
  int m;
  long long mod;
  std::array<long long, 4> e;  // row major: a b / c d

  ResidueMatrix(long long p_, int m_, std::array<long long, 4> e_);
  long long det() const;
  bool invertible() const { return det() % p != 0; }
  ResidueMatrix mul(const ResidueMatrix& o) const;
  ResidueMatrix inv() const;  // throws domain_error when singular
};

long long gl2_order(long long p, int m);

/// The group with its conjugacy-class partition; elements packed densely.
struct GL2Group {
  long long p;
  int m;
  long long mod;
  long long order;
  std::vector<uint32_t> elems;     // packed codes of invertible matrices
  std::vector<int32_t> cls;        // packed code -> class id (-1 off-group)
  std::vector<uint32_t> rep;       // class id -> packed code of representative
  std::vector<long long> csize;    // class sizes
  std::vector<int> inv_class;      // class of the inverses
  int r() const { return (int)rep.size(); }

  uint32_t pack(const std::array<long long, 4>& e) const;
  std::array<long long, 4> unpack(uint32_t code) const;
  uint32_t mul_codes(uint32_t x, uint32_t y) const;
  uint32_t inv_code(uint32_t x) const;
};

GL2Group enumerate_gl2(long long p, int m, long long budget = 10'000'000);

/// Largest lambda with z*g = 1 mod p^lambda for some scalar z; m means central.
struct LevelResult {
  int lambda;
  bool central;
};
LevelResult level_of(const ResidueMatrix& g);

struct CharacterTable {
  long long p;
  int m;
  long long group_order;
  long long exponent;          // exp(G)
  std::vector<long long> class_sizes;
  std::vector<std::array<long long, 4>> class_reps;
  std::vector<int> class_level;     // level of each class; -1 for central
  std::vector<long long> dims;      // one per irreducible row
  std::vector<std::vector<Complex>> values;  // rows x classes
  // exact values: multiplicity of each exponent-of-G root of unity,
  // only stored when exact mode is requested (else empty)
  std::vector<std::vector<std::vector<long long>>> mults;
};

CharacterTable character_table(const GL2Group& G, uint64_t seed,
                               bool exact = true);

struct CharBoundReport {
  long long dim_class;
  bool weak_exponent;                 // compare against p^{(m+lambda)/2}
  int rows_scanned;
  std::vector<double> max_ratio_per_lambda;  // indexed by level 0..m-1
  double worst_ratio;
  bool within(double C) const { return worst_ratio <= C; }
};

CharBoundReport verify_character_bound(const CharacterTable& t,
                                       long long dim_class,
                                       bool weak_exponent);

/// Row/column orthogonality residuals; max absolute deviation.
double table_orthogonality_residual(const CharacterTable& t);

}  // namespace supnorm
