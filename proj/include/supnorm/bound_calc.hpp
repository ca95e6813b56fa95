#pragma once

#include <string>

#include "supnorm/common.hpp"

namespace supnorm {

/// One monomial d^a T^b y^c Lam^e with rational exponents.
struct Monomial {
  Rat d{0}, T{0}, y{0}, Lam{0};
  bool operator==(const Monomial& o) const = default;
};

/// Max-plus combination of monomials; eps carried as an additive tag that
/// never enters domination decisions.
struct BoundExpr {
  std::vector<Monomial> ms;
  int eps = 0;
};

BoundExpr make_expr(std::vector<Monomial> ms, int eps = 0);
BoundExpr canonicalize(BoundExpr e);
bool expr_eq(const BoundExpr& a, const BoundExpr& b);

BoundExpr combine(const BoundExpr& a, const BoundExpr& b);
BoundExpr multiply(const BoundExpr& a, const BoundExpr& b);
/// q > 0 distributes over the max; q <= 0 only on single-monomial input.
BoundExpr power(const BoundExpr& e, const Rat& q);
/// Lam -> d^alpha.
BoundExpr substitute_Lambda(const BoundExpr& e, const Rat& alpha);

/// Numeric max over the monomials at a positive assignment.
double eval_expr(const BoundExpr& e, double d, double T, double y, double L);

struct OptResult {
  bool unbounded = false;   // every line slopes downward; flagged, not an error
  Rat alpha{0};
  Rat exponent{0};          // min over alpha >= 0 of max_i (d_i + alpha Lam_i + beta y_i)
};

/// Exact piecewise-linear minimization over alpha >= 0 with y capped at d^beta;
/// T exponents are ignored (no T-aspect optimization).
OptResult optimize_Lambda(const BoundExpr& e, const Rat& beta);

struct CrossoverResult {
  bool crossed = false;
  Rat beta_star{0};
  Rat phi_exponent{0};      // the Phi-exponent (pretrace chain is Phi^2 scale)
  bool whittaker_within = false;
  Rat whittaker_exponent{0};
};

/// pretrace_sq: Phi^2-scale bound after the Lambda substitution, monomials in
/// {d, y}; whittaker: Phi-scale bound with a negative y exponent. beta_star
/// balances the dominant y-free and y-carrying pretrace monomials.
CrossoverResult crossover(const BoundExpr& whittaker, const BoundExpr& pretrace_sq);

struct DerivationStep {
  std::string label;
  BoundExpr expr;
};

struct ExponentDerivation {
  std::string case_name;
  std::vector<DerivationStep> steps;
  Rat alpha;
  Rat beta_star;
  Rat phi_exponent;
};

/// "main" (exponent 5/6) or "sc-odd" (Case 3.2, exponent 11/12).
ExponentDerivation derive_exponents(const std::string& case_name);

std::string expr_to_string(const BoundExpr& e);

}  // namespace supnorm
