#include "supnorm/bound_calc.hpp"

#include <algorithm>
#include <sstream>

namespace supnorm {

namespace {

bool rat_lt(const Rat& a, const Rat& b) { return a < b; }

bool mono_less(const Monomial& a, const Monomial& b) {
  if (a.d != b.d) return rat_lt(a.d, b.d);
  if (a.T != b.T) return rat_lt(a.T, b.T);
  if (a.y != b.y) return rat_lt(a.y, b.y);
  return rat_lt(a.Lam, b.Lam);
}

bool dominated(const Monomial& a, const Monomial& b) {
  return a.d <= b.d && a.T <= b.T && a.y <= b.y && a.Lam <= b.Lam;
}

std::string rat_str(const Rat& r) {
  std::ostringstream os;
  os << r.numerator();
  if (r.denominator() != 1) os << "/" << r.denominator();
  return os.str();
}

}  // namespace

BoundExpr make_expr(std::vector<Monomial> ms, int eps) {
  return canonicalize(BoundExpr{std::move(ms), eps});
}

BoundExpr canonicalize(BoundExpr e) {
  std::sort(e.ms.begin(), e.ms.end(), mono_less);
  e.ms.erase(std::unique(e.ms.begin(), e.ms.end()), e.ms.end());
  std::vector<Monomial> kept;
  for (size_t i = 0; i < e.ms.size(); ++i) {
    bool dom = false;
    for (size_t j = 0; j < e.ms.size() && !dom; ++j)
      dom = i != j && dominated(e.ms[i], e.ms[j]) && !(e.ms[j] == e.ms[i]);
    if (!dom) kept.push_back(e.ms[i]);
  }
  e.ms = std::move(kept);
  return e;
}

bool expr_eq(const BoundExpr& a, const BoundExpr& b) {
  return canonicalize(a).ms == canonicalize(b).ms;
}

BoundExpr combine(const BoundExpr& a, const BoundExpr& b) {
  BoundExpr out = a;
  out.ms.insert(out.ms.end(), b.ms.begin(), b.ms.end());
  out.eps = std::max(a.eps, b.eps);
  return canonicalize(out);
}

BoundExpr multiply(const BoundExpr& a, const BoundExpr& b) {
  BoundExpr out;
  out.eps = a.eps + b.eps;
  for (const auto& ma : a.ms)
    for (const auto& mb : b.ms)
      out.ms.push_back({ma.d + mb.d, ma.T + mb.T, ma.y + mb.y, ma.Lam + mb.Lam});
  return canonicalize(out);
}

BoundExpr power(const BoundExpr& e, const Rat& q) {
  if (q <= Rat(0) && e.ms.size() > 1)
    throw std::domain_error("power: nonpositive exponent on a multi-monomial expression");
  BoundExpr out;
  out.eps = e.eps;
  for (const auto& m : e.ms)
    out.ms.push_back({m.d * q, m.T * q, m.y * q, m.Lam * q});
  return canonicalize(out);
}

BoundExpr substitute_Lambda(const BoundExpr& e, const Rat& alpha) {
  BoundExpr out;
  out.eps = e.eps;
  for (const auto& m : e.ms)
    out.ms.push_back({m.d + alpha * m.Lam, m.T, m.y, Rat(0)});
  return canonicalize(out);
}

double eval_expr(const BoundExpr& e, double d, double T, double y, double L) {
  double best = 0.0;
  for (const auto& m : e.ms)
    best = std::max(best, std::pow(d, rat_to_double(m.d)) *
                              std::pow(T, rat_to_double(m.T)) *
                              std::pow(y, rat_to_double(m.y)) *
                              std::pow(L, rat_to_double(m.Lam)));
  return best;
}

OptResult optimize_Lambda(const BoundExpr& e, const Rat& beta) {
  if (e.ms.empty()) throw std::invalid_argument("optimize_Lambda: empty expression");
  // lines value(alpha) = (d + beta y) + alpha * Lam
  std::vector<std::pair<Rat, Rat>> lines;  // (intercept, slope)
  for (const auto& m : e.ms) lines.push_back({m.d + beta * m.y, m.Lam});
  bool any_nonneg = false;
  for (auto& [c, s] : lines) any_nonneg = any_nonneg || s >= Rat(0);
  OptResult res;
  if (!any_nonneg) {
    res.unbounded = true;
    return res;
  }
  auto objective = [&](const Rat& a) {
    Rat best = lines[0].first + a * lines[0].second;
    for (auto& [c, s] : lines) best = std::max(best, c + a * s);
    return best;
  };
  std::vector<Rat> cands{Rat(0)};
  for (size_t i = 0; i < lines.size(); ++i)
    for (size_t j = i + 1; j < lines.size(); ++j) {
      if (lines[i].second == lines[j].second) continue;
      Rat a = (lines[j].first - lines[i].first) /
              (lines[i].second - lines[j].second);
      if (a >= Rat(0)) cands.push_back(a);
    }
  res.alpha = cands[0];
  res.exponent = objective(cands[0]);
  for (const Rat& a : cands) {
    Rat v = objective(a);
    if (v < res.exponent || (v == res.exponent && a < res.alpha)) {
      res.exponent = v;
      res.alpha = a;
    }
  }
  return res;
}

CrossoverResult crossover(const BoundExpr& whittaker,
                          const BoundExpr& pretrace_sq) {
  CrossoverResult res;
  BoundExpr pre = canonicalize(pretrace_sq);
  bool have_free = false, have_y = false;
  Rat d0(0);
  for (const auto& m : pre.ms)
    if (m.y == Rat(0)) {
      d0 = have_free ? std::max(d0, m.d) : m.d;
      have_free = true;
    }
  Rat beta;
  for (const auto& m : pre.ms)
    if (m.y > Rat(0) && have_free) {
      Rat b = (d0 - m.d) / m.y;
      beta = have_y ? std::min(beta, b) : b;
      have_y = true;
    }
  if (!have_free || !have_y || beta < Rat(0) || beta > Rat(2)) return res;
  res.crossed = true;
  res.beta_star = beta;
  res.phi_exponent = d0 / Rat(2);
  Rat w = whittaker.ms.empty() ? Rat(0)
                               : whittaker.ms[0].d + beta * whittaker.ms[0].y;
  for (const auto& m : whittaker.ms)
    w = std::max(w, m.d + beta * m.y);
  res.whittaker_exponent = w;
  res.whittaker_within = w <= res.phi_exponent;
  return res;
}

ExponentDerivation derive_exponents(const std::string& case_name) {
  ExponentDerivation out;
  out.case_name = case_name;
  BoundExpr counting, prefactor;
  Rat beta;
  if (case_name == "main") {
    // Lam y^{1/2} + Lam^{5/2} y + Lam^4 + Lam d, times T d Lam^{-2}
    counting = make_expr({{Rat(0), Rat(0), Rat(1, 2), Rat(1)},
                          {Rat(0), Rat(0), Rat(1), Rat(5, 2)},
                          {Rat(0), Rat(0), Rat(0), Rat(4)},
                          {Rat(1), Rat(0), Rat(0), Rat(1)}});
    prefactor = make_expr({{Rat(1), Rat(1), Rat(0), Rat(-2)}}, 1);
    beta = Rat(1, 2);
  } else if (case_name == "sc-odd") {
    // d^{1/2}Lam^4 + d^{1/2}Lam^{5/2} y + Lam d + d^{1/2}Lam y^{1/2},
    // times T d Lam^{-2}
    counting = make_expr({{Rat(1, 2), Rat(0), Rat(0), Rat(4)},
                          {Rat(1, 2), Rat(0), Rat(1), Rat(5, 2)},
                          {Rat(1), Rat(0), Rat(0), Rat(1)},
                          {Rat(1, 2), Rat(0), Rat(1, 2), Rat(1)}});
    prefactor = make_expr({{Rat(1), Rat(1), Rat(0), Rat(-2)}}, 1);
    beta = Rat(1, 4);
  } else {
    throw std::invalid_argument("derive_exponents: unknown case " + case_name);
  }
  out.steps.push_back({"counting bound", counting});
  BoundExpr chain = multiply(counting, prefactor);
  out.steps.push_back({"pre-trace chain (Phi^2 scale)", chain});
  OptResult opt = optimize_Lambda(chain, beta);
  if (opt.unbounded)
    throw std::logic_error("derive_exponents: unexpected unbounded direction");
  out.alpha = opt.alpha;
  BoundExpr substituted = substitute_Lambda(chain, opt.alpha);
  out.steps.push_back({"after Lambda = d^" + rat_str(opt.alpha), substituted});
  BoundExpr whit = make_expr({{Rat(1, 2), Rat(1, 6), Rat(0), Rat(0)},
                              {Rat(1), Rat(1, 2), Rat(-1, 2), Rat(0)}});
  out.steps.push_back({"Whittaker regime (Phi scale)", whit});
  CrossoverResult cr = crossover(whit, substituted);
  if (!cr.crossed)
    throw std::logic_error("derive_exponents: regimes failed to cross");
  out.beta_star = cr.beta_star;
  out.phi_exponent = cr.phi_exponent;
  if (cr.beta_star != beta)
    throw std::logic_error("derive_exponents: y-cap self-consistency failed");
  return out;
}

std::string expr_to_string(const BoundExpr& e) {
  std::ostringstream os;
  bool first = true;
  for (const auto& m : e.ms) {
    if (!first) os << " + ";
    first = false;
    bool any = false;
    auto emit = [&](const char* name, const Rat& r) {
      if (r == Rat(0)) return;
      if (any) os << "*";
      os << name;
      if (r != Rat(1)) os << "^" << rat_str(r);
      any = true;
    };
    emit("d", m.d);
    emit("T", m.T);
    emit("y", m.y);
    emit("Lam", m.Lam);
    if (!any) os << "1";
  }
  if (e.ms.empty()) os << "0";
  if (e.eps > 0) os << "  [*X^eps]";
  return os.str();
}

}  // namespace supnorm
