#include "supnorm/verify.hpp"

#include <chrono>
#include <iomanip>
#include <random>
#include <sstream>

#include <json.hpp>

#include "supnorm/arch_whittaker.hpp"
#include "supnorm/bound_calc.hpp"
#include "supnorm/finite_gl2.hpp"
#include "supnorm/hecke.hpp"
#include "supnorm/lattice_count.hpp"
#include "supnorm/local_whittaker.hpp"

namespace supnorm {

namespace {

std::string fmt(double v) {
  std::ostringstream os;
  os << std::setprecision(12) << v;
  return os.str();
}

std::string fmt(const Rat& r) {
  std::ostringstream os;
  os << r.numerator();
  if (r.denominator() != 1) os << "/" << r.denominator();
  return os.str();
}

struct SuiteBuilder {
  VerificationReport rep;
  const VerifyConfig& cfg;

  explicit SuiteBuilder(const std::string& name, const VerifyConfig& c)
      : cfg(c) {
    rep.name = name;
    rep.status = "pass";
  }
  void check(bool ok, const std::string& what) {
    if (!ok) {
      rep.status = "fail";
      rep.failures.push_back(what);
    }
  }
  void measure(const std::string& key, const std::string& val) {
    rep.measured.push_back({key, val});
  }
  void flag(const std::string& note) {
    rep.flags.push_back(note);
    if (rep.status == "pass") rep.status = "flagged";
  }
  void param(const std::string& k, const std::string& v) { rep.params[k] = v; }
};

// sum_{v >= v0} q^v for 0 < q < 1
Rat geometric_from(const Rat& q, int v0) {
  return rat_pow(q, v0) / (Rat(1) - q);
}

Rat steinberg_total_mass(long long p) {
  Rat q(1, p);
  Rat shell = Rat(p - 1, p);
  Rat s = geometric_from(q, -1);                     // sum |y|
  s += rat_pow(q, 2) * geometric_from(q * q, 0);     // p^{-2} |y|^2 part
  s += q * geometric_from(q * q, 1);                 // p^{-1} |y|^2 part
  s -= q * geometric_from(q, 1);                     // -p^{-1} |y| part
  return shell * s;
}

TruncatedPAdic padic_at(long long p, int v, int m, long long unit = 1) {
  int K = std::max({m, m - 1 - v, -v, 1}) + 1;
  long long pk = powll(p, K);
  long long u = mod_floor(unit, pk);
  if (u % p == 0) u = 1;
  return TruncatedPAdic(p, v, u, K);
}

void suite_dimension(SuiteBuilder& b) {
  b.param("p", "3,5,7");
  b.param("m", "1,2");
  for (long long p : {3LL, 5LL, 7LL}) {
    for (int m : {1, 2}) {
      MultChar chi = make_char(p, m, 1);
      auto ps = describe_ps(chi, Complex{0.0, 0.0});
      b.check(ps.n == m, "ps conductor p=" + std::to_string(p));
      b.check(ps.d == Rat(powll(p, m) + powll(p, m - 1)),
              "ps dimension p=" + std::to_string(p) + " m=" + std::to_string(m));
      b.check((long long)coset_reps(p, m).size() ==
                  powll(p, m) + powll(p, m - 1),
              "ps dimension equals coset count p=" + std::to_string(p));
      auto sce = describe_supercuspidal(p, m, true);
      b.check(sce.n == 2 * m && sce.d == Rat(powll(p, m) - powll(p, m - 1)),
              "sc even descriptor p=" + std::to_string(p));
      Rat mass(0);
      for (int v = -m - 2; v <= 2; ++v) mass += sc_average(sce, v);
      b.check(mass == sce.d, "sc even shell mass equals dimension");
    }
    auto st = describe_steinberg(p);
    b.check(st.n == 1 && st.d == Rat(p), "steinberg descriptor");
    b.check(steinberg_total_mass(p) == Rat(p),
            "steinberg mass equals dimension p=" + std::to_string(p));
    auto sco = describe_supercuspidal(p, 2, false);
    b.check(sco.n == 3 && sco.d == Rat(powll(p, 2) - 1),
            "sc odd descriptor p=" + std::to_string(p));
    Rat mass(0);
    for (int v = -4; v <= 2; ++v) mass += sc_average(sco, v);
    b.check(mass == sco.d, "sc odd shell mass equals dimension");
    bool rejected = false;
    try {
      describe_supercuspidal(p, 1, false);
    } catch (const std::domain_error&) {
      rejected = true;
    }
    b.check(rejected, "sc odd m=1 rejected (non-integral dimension)");
  }
}

void suite_cosets(SuiteBuilder& b) {
  const std::pair<long long, int> grid[] = {{3, 1}, {3, 2}, {5, 1}};
  for (auto [p, m] : grid) {
    b.check((long long)coset_reps(p, m).size() == powll(p, m) + powll(p, m - 1),
            "coset count (" + std::to_string(p) + "," + std::to_string(m) + ")");
    b.check(coset_cover_check(p, m),
            "coset cover (" + std::to_string(p) + "," + std::to_string(m) + ")");
  }
}

void suite_steinberg(SuiteBuilder& b) {
  int exact_hits = 0;
  for (long long p : {3LL, 5LL, 7LL}) {
    for (int v = -3; v <= 3; ++v) {
      bool eq = steinberg_SV(p, v) == steinberg_oracle(p, v);
      b.check(eq, "steinberg value vs oracle p=" + std::to_string(p) +
                      " v=" + std::to_string(v));
      if (eq) ++exact_hits;
    }
    b.check(steinberg_SV(p, -1) == Rat(p), "spot value v=-1 equals p");
    b.check(steinberg_SV(p, -2) == Rat(0), "spot value v=-2 vanishes");
    b.check(steinberg_total_mass(p) == Rat(p), "total mass equals p");
  }
  b.measure("exact_equalities", std::to_string(exact_hits));
}

void suite_supercuspidal(SuiteBuilder& b) {
  const std::pair<long long, int> grid[] = {{3, 1}, {3, 2}, {5, 1}, {5, 2}};
  for (auto [p, m] : grid) {
    for (bool even : {true, false}) {
      if (!even && m == 1) {
        bool rejected = false;
        try {
          describe_supercuspidal(p, 1, false);
        } catch (const std::domain_error&) {
          rejected = true;
        }
        b.check(rejected, "odd m=1 rejected p=" + std::to_string(p));
        continue;
      }
      auto desc = describe_supercuspidal(p, m, even);
      for (int v = -m - 1; v <= 1; ++v) {
        TruncatedPAdic y = padic_at(p, v, m);
        b.check(sc_average(desc, v) == sc_kirillov_oracle(desc, y),
                "average vs kirillov oracle p=" + std::to_string(p) + " m=" +
                    std::to_string(m) + (even ? " even" : " odd") + " v=" +
                    std::to_string(v));
      }
    }
    b.check(sc_orthonormality_check(p, m),
            "kirillov orthonormality (" + std::to_string(p) + "," +
                std::to_string(m) + ")");
  }
  auto spot = describe_supercuspidal(5, 1, true);
  b.check(sc_average(spot, -1) == Rat(4), "spot: p=5 m=1 shell value 4");
  b.measure("spot_p5_m1_shell", fmt(sc_average(spot, -1)));
}

void suite_principal_series(SuiteBuilder& b) {
  double worst_norm = 0.0, worst_onshell = 0.0, worst_mid = 0.0;
  double edge_support = 0.0;
  for (long long p : {3LL, 5LL}) {
    for (int m : {1, 2}) {
      for (const MultChar& chi : enumerate_X(p, m)) {
        if (chi.cond != m || chi.e_exp == 0) continue;
        for (double t : {0.0, 0.7}) {
          auto desc = describe_ps(chi, Complex{0.0, t});
          for (const CosetRep& rep : coset_reps(p, m)) {
            double n = ps_whittaker_norm(desc, rep);
            double err = std::abs(n - (1.0 + 1.0 / (double)p));
            worst_norm = std::max(worst_norm, err);
            b.check(err <= 1e-9, "whittaker norm p=" + std::to_string(p) +
                                     " m=" + std::to_string(m) + " i=" +
                                     std::to_string(rep.i));
          }
          for (int i = 0; i <= m; ++i)
            for (int v = -m; v <= m + 2; ++v) {
              double s = ps_partial_average(desc, i, padic_at(p, v, m));
              double ay = std::pow((double)p, -v);
              if (v == i - m) {
                double err = std::abs(s - ay);
                worst_onshell = std::max(worst_onshell, err);
                b.check(err <= 1e-9, "on-shell partial average i=" +
                                         std::to_string(i));
              } else if (i > 0 && i < m) {
                worst_mid = std::max(worst_mid, std::abs(s));
                b.check(std::abs(s) <= 1e-9, "off-shell vanishing 0<i<m");
              } else {
                edge_support = std::max(edge_support, std::abs(s));
              }
            }
        }
      }
    }
  }
  b.measure("worst_norm_error", fmt(worst_norm));
  b.measure("worst_onshell_error", fmt(worst_onshell));
  b.measure("worst_middle_offshell", fmt(worst_mid));
  b.measure("edge_level_offshell_max", fmt(edge_support));
  b.flag("partial averages at levels 0 and m keep the value |y| on every "
         "shell their defining formula supports (all v >= -m at level 0, all "
         "v >= 0 at level m); the sharp one-shell support statement holds "
         "only for the middle levels");
}

void suite_gauss(SuiteBuilder& b, const VerifyConfig& cfg) {
  long long instances = 0;
  double worst = 0.0;
  for (long long p : {3LL, 5LL}) {
    for (int a = 0; a <= 2; ++a) {
      std::vector<MultChar> chars;
      if (a == 0) {
        chars.push_back(make_char(p, 1, 0));
      } else {
        for (const MultChar& chi : enumerate_X(p, a))
          if (chi.cond == a) chars.push_back(chi);
      }
      for (const MultChar& chi : chars)
        for (int l = 1; l <= a + 1; ++l)
          for (int k = -a - 1; k <= 1; ++k) {
            int N = std::max({a, l, -k, 1});
            long long pN = powll(p, N);
            long long M = cyclo_field_order(p, std::max(a, 1), N);
            for (long long z = 1; z < pN; ++z) {
              if (z % p == 0) continue;
              TruncatedPAdic y(p, k, z, N);
              Complex brute = gauss_G(l, y, chi);
              Complex closed = gauss_G_closed_form(l, k, z, chi);
              worst = std::max(worst, std::abs(brute - closed));
              ++instances;
              if (cfg.exact) {
                bool eq = cyc_eq(gauss_G_exact(l, y, chi, M),
                                 gauss_G_closed_form_exact(l, k, z, chi, M));
                b.check(eq, "exact gauss mismatch p=" + std::to_string(p) +
                                " a=" + std::to_string(a) + " l=" +
                                std::to_string(l) + " k=" + std::to_string(k) +
                                " z=" + std::to_string(z));
              }
            }
          }
    }
  }
  b.check(worst <= 1e-9, "numeric closed form agreement");
  b.measure("instances", std::to_string(instances));
  b.measure("worst_numeric_gap", fmt(worst));
}

void suite_local_bound(SuiteBuilder& b) {
  double worst = 0.0;
  std::vector<LocalRepDescriptor> descs;
  for (long long p : {3LL, 5LL})
    for (int m : {1, 2})
      for (double t : {0.0, 0.7})
        descs.push_back(describe_ps(make_char(p, m, 1), Complex{0.0, t}));
  for (long long p : {3LL, 5LL, 7LL}) descs.push_back(describe_steinberg(p));
  for (long long p : {3LL, 5LL}) {
    descs.push_back(describe_supercuspidal(p, 1, true));
    descs.push_back(describe_supercuspidal(p, 2, true));
    descs.push_back(describe_supercuspidal(p, 2, false));
  }
  for (const auto& desc : descs)
    for (int v = -1; v <= 5; ++v) {
      double ratio = 0.0;
      bool ok = local_bound_check(desc, padic_at(desc.p, v, desc.m), &ratio);
      worst = std::max(worst, ratio);
      b.check(ok, "master bound case tag=" +
                      std::to_string((int)desc.tag) + " p=" +
                      std::to_string(desc.p) + " v=" + std::to_string(v));
    }
  b.measure("worst_ratio", fmt(worst));
}

void suite_charbound(SuiteBuilder& b, const VerifyConfig& cfg) {
  // small sanity layer on GL2(F_3)
  auto G1 = enumerate_gl2(3, 1);
  b.check(G1.order == 48, "group order (3,1)");
  b.check(G1.r() == 8, "class count (3,1)");
  auto T1 = character_table(G1, cfg.seed, cfg.exact);
  bool has4 = false, has2 = false;
  for (long long d : T1.dims) {
    has4 = has4 || d == 4;
    has2 = has2 || d == 2;
  }
  b.check(has4 && has2, "GL2(F_3) dimensions include p+1 and p-1");
  for (size_t row = 0; row < T1.dims.size(); ++row)
    if (T1.dims[row] == 2)
      for (size_t i = 0; i < T1.values[row].size(); ++i)
        b.check(std::abs(T1.values[row][i]) <= 2.0 + 1e-9,
                "GL2(F_3) dim-2 rows bounded by 2");

  auto G = enumerate_gl2(3, 2);
  b.check(G.order == 3888, "group order (3,2)");
  auto T = character_table(G, cfg.seed, cfg.exact);
  b.measure("classes_p3_m2", std::to_string(T.class_sizes.size()));
  b.measure("exponent_p3_m2", std::to_string(T.exponent));
  double orth = table_orthogonality_residual(T);
  b.check(orth <= 1e-6, "row orthogonality");
  b.measure("orthogonality_residual", fmt(orth));
  bool has12 = false;
  for (long long d : T.dims) has12 = has12 || d == 12;
  b.check(has12, "dimension 12 = p^2(1+1/p) occurs");

  for (long long dim : {12LL, 6LL}) {
    auto repdim = verify_character_bound(T, dim, false);
    b.check(repdim.within(4.0),
            "level bound |chi| <= 4 p^lambda for dimension " +
                std::to_string(dim));
    b.measure("max_ratio_dim" + std::to_string(dim), fmt(repdim.worst_ratio));
  }
  bool has8 = false;
  for (long long d : T.dims) has8 = has8 || d == 8;
  b.check(has8, "dimension 8 = p^2(1-1/p^2) occurs");
  auto rep8w = verify_character_bound(T, 8, true);
  b.check(rep8w.within(4.0),
          "weak bound |chi| <= 4 p^{(m+lambda)/2} for dimension 8");
  b.measure("max_ratio_dim8_weak", fmt(rep8w.worst_ratio));
  auto rep8s = verify_character_bound(T, 8, false);
  b.measure("max_ratio_dim8_strong", fmt(rep8s.worst_ratio));
  b.flag("whether the dimension-8 rows also meet the strong p^lambda "
         "envelope is reported (max_ratio_dim8_strong), not asserted; the "
         "constituent cancellation is only known at level one");
  // |chi(g)| <= dim with equality exactly on central classes
  for (size_t row = 0; row < T.dims.size(); ++row)
    for (size_t i = 0; i < T.class_level.size(); ++i) {
      double v = std::abs(T.values[row][i]);
      b.check(v <= (double)T.dims[row] + 1e-8, "character values within dim");
    }
}

void suite_hecke(SuiteBuilder& b, const VerifyConfig& cfg) {
  for (long long l : {2LL, 3LL, 5LL})
    b.check(hecke_convolution_check(l),
            "double-coset multiplicities l=" + std::to_string(l));
  auto near = [](const HeckeElement& a, const HeckeElement& e) {
    if (a.size() != e.size()) return false;
    for (const auto& [r, c] : e) {
      auto it = a.find(r);
      if (it == a.end() || std::abs(it->second - c) > 1e-12) return false;
    }
    return true;
  };
  b.check(near(convolve(kappa(2), kappa(3)), {{6, 1.0}}), "kappa_2 * kappa_3");
  b.check(near(convolve(kappa(2), kappa(2)), {{1, 1.0}, {4, 1.0}}),
          "kappa_2 * kappa_2");
  b.check(near(convolve(kappa(1), kappa(10)), {{10, 1.0}}), "identity");
  std::mt19937_64 rng(cfg.seed);
  std::uniform_int_distribution<int> pick(0, 4);
  const long long idx[5] = {1, 2, 3, 4, 9};
  for (int trial = 0; trial < 20; ++trial) {
    HeckeElement h1, h2, h3;
    for (int j = 0; j < 3; ++j) {
      h1[idx[pick(rng)]] += Complex(1.0, (double)pick(rng));
      h2[idx[pick(rng)]] += Complex((double)pick(rng), -1.0);
      h3[idx[pick(rng)]] += Complex(1.0, 0.0);
    }
    b.check(near(convolve(h1, h2), convolve(h2, h1)), "commutativity");
    b.check(near(convolve(convolve(h1, h2), h3),
                 convolve(h1, convolve(h2, h3))),
            "associativity");
    b.check(near(adjoint(adjoint(h1)), h1), "adjoint involution");
  }
  HeckeElement f = build_f_ur({2}, [](long long) { return Complex{1, 0}; });
  b.check(near(f, {{1, 2.0}, {4, 2.0}, {16, 1.0}}),
          "single-prime f_ur expansion");
}

void suite_amplifier(SuiteBuilder& b) {
  auto S = build_S(11, 100);
  b.measure("S_size_p11_L100", std::to_string(S.size()));
  b.check((long long)S.size() >= 15, "|S| >= 15 at p=11, Lambda=100");
  for (size_t i = 0; i < S.size(); ++i) {
    b.check(mod_floor(S[i], 11) != 1, "l != 1 mod p");
    for (size_t j = 0; j < S.size(); ++j) {
      long long prod = mod_floor(S[i] * S[j], 11);
      b.check(prod != 1, "l1 l2 != 1 mod p");
      b.check(mod_floor(prod * prod, 11) != 1, "(l1 l2)^2 != 1 mod p");
    }
  }
  HeckeElement f = build_f_ur(S, [](long long) { return Complex{1, 0}; }, 11);
  double y1 = 0.0;
  bool all_real = true;
  std::vector<long long> support;
  for (const auto& [r, c] : f) {
    all_real = all_real && std::abs(c.imag()) <= 1e-12;
    if (r == 1) y1 = c.real();
    support.push_back(r);
  }
  b.check(all_real, "f_ur coefficients real");
  b.check(y1 >= (double)S.size() - 1e-9, "y_1 >= |S_eff|");
  b.measure("y1", fmt(y1));
  bool bare_prime = false;
  for (long long r : support)
    for (long long l : S) bare_prime = bare_prime || r == l;
  b.check(!bare_prime, "no bare-prime index in the expansion");
  b.flag("the stated support list includes bare l_1, which the normalized "
         "algebra never produces; the expansion's support is {1, l1 l2, "
         "(l1 l2)^2} patterns only");
  auto S3 = admissible_primes(3, {50, 300});
  b.check((long long)S3.size() <= 1, "p=3 degenerate amplifier");
  b.measure("S_size_p3", std::to_string(S3.size()));
}

void suite_counting(SuiteBuilder& b, const VerifyConfig& cfg) {
  UpperHalfPoint zi{0.0, 1.0}, z2i{0.0, 2.0};
  b.check(std::abs(point_pair_u(zi, z2i) - 0.5) <= 1e-12, "u(i,2i) = 1/2");
  b.check(point_pair_u(z2i, z2i) == 0.0, "u(z,z) = 0");
  {
    UpperHalfPoint zb{0.7, 2.0};
    double u = point_pair_u({zb.x + 3.0, zb.y}, zb);
    b.check(std::abs(u - 9.0 / 4.0) <= 1e-12, "u(n(b)z, z) = b^2/y^2");
  }

  std::mt19937_64 rng(cfg.seed + 17);
  std::uniform_int_distribution<long long> rdist(1, 50);
  std::uniform_real_distribution<double> ydist(1.0, 5.0), xdist(-0.5, 0.5);
  std::uniform_int_distribution<int> mdist(0, 1);
  long long agree = 0;
  for (int inst = 0; inst < 50; ++inst) {
    long long r = rdist(rng);
    UpperHalfPoint z{xdist(rng), ydist(rng)};
    long long p = mdist(rng) ? 3 : 5;
    long long q = p * p;
    std::array<long long, 4> ge;
    do {
      std::uniform_int_distribution<long long> e(0, q - 1);
      ge = {e(rng), e(rng), e(rng), e(rng)};
    } while (mod_floor(ge[0] * ge[3] - ge[1] * ge[2], q) % p == 0);
    CongruenceSpec cs{q, ge};
    auto fast = count_lattice(r, cs, z, true);
    auto slow = count_lattice_naive(r, cs, z, true);
    std::sort(fast.matrices.begin(), fast.matrices.end());
    std::sort(slow.matrices.begin(), slow.matrices.end());
    bool eq = fast.count == slow.count && fast.matrices == slow.matrices;
    if (eq) ++agree;
    b.check(eq, "optimized vs naive instance " + std::to_string(inst) + " r=" +
                    std::to_string(r));
  }
  b.measure("oracle_agreements", std::to_string(agree) + "/50");

  for (auto [p, lam] : std::vector<std::pair<long long, int>>{
           {5, 1}, {3, 2}, {7, 1}}) {
    if (powll(p, lam) < 4) continue;
    auto res = count_M_lambda(1, lam, p, z2i, true);
    for (const auto& A : res.matrices)
      b.check(A[2] == 0, "upper-triangular members for p^lambda >= 4");
  }
  b.check(count_M_lambda(1, 1, 5, zi).count == 1,
          "count_M_lambda(1,1,z=i,p=5) = 1");
  {
    ResidueMatrix id(3, 2, {1, 0, 0, 1});
    b.check(count_M(1, id, z2i).count >= 1, "identity counted at r=1");
  }

  auto fit = lambda0_scaling(101, z2i);
  b.measure("lambda0_fit_slope", fmt(fit.slope));
  for (size_t i = 0; i < fit.grid.size(); ++i)
    b.measure("block_L" + std::to_string(fit.grid[i]), fmt(fit.blocks[i]));
  b.check(fit.slope <= 4.2, "lambda0 growth exponent <= 4.2");
  if (fit.slope < 2.3)
    b.flag("lambda0 fit slope below the 2.3 end of the expected window");
  double twelfth = std::round(fit.slope * 12.0) / 12.0;
  b.measure("fit_slope_nearest_twelfth", fmt(twelfth));
  if (twelfth < 2.5 || twelfth > 4.0)
    b.flag("rounded fit slope outside the symbolic window [5/2, 4]");

  // exact-count comparison against both candidate envelopes for #M^(lambda)(1)
  std::string held = "sqrt";
  for (int lam : {1, 2})
    for (double y : {2.0, 4.0, 9.0, 16.0}) {
      long long c = count_M_lambda(1, lam, 3, {0.0, y}).count;
      double env_sqrt = 1.0 + std::sqrt(y) * std::pow(3.0, -lam);
      double env_lin = 1.0 + y * std::pow(3.0, -lam);
      if ((double)c > 2.0 * env_sqrt + 1e-9) held = "linear-only";
      b.measure("M1_l" + std::to_string(lam) + "_y" + fmt(y),
                std::to_string(c) + "|" + fmt(env_sqrt) + "|" + fmt(env_lin));
    }
  b.flag("counts of M^(lambda)(1) are reported against both the 1+sqrt(y) "
         "p^-lambda and 1+y p^-lambda envelopes (" + held +
         " held within factor 2 on the grid); the intended envelope is left "
         "open");
}

void suite_exponents(SuiteBuilder& b) {
  auto main_d = derive_exponents("main");
  b.check(main_d.alpha == Rat(1, 3), "main: alpha = 1/3");
  b.check(main_d.beta_star == Rat(1, 2), "main: beta* = 1/2");
  b.check(main_d.phi_exponent == Rat(5, 6), "main: Phi exponent 5/6");
  b.measure("main_exponent", fmt(main_d.phi_exponent));
  auto odd_d = derive_exponents("sc-odd");
  b.check(odd_d.alpha == Rat(1, 6), "sc-odd: alpha = 1/6");
  b.check(odd_d.beta_star == Rat(1, 4), "sc-odd: beta* = 1/4");
  b.check(odd_d.phi_exponent == Rat(11, 12), "sc-odd: Phi exponent 11/12");
  b.measure("sc_odd_exponent", fmt(odd_d.phi_exponent));

  // spec'd algebra spot checks
  BoundExpr sq = power(make_expr({{Rat(2, 3), Rat(0), Rat(0), Rat(0)},
                                  {Rat(1, 6), Rat(0), Rat(1), Rat(0)}}),
                       Rat(1, 2));
  b.check(expr_eq(sq, make_expr({{Rat(1, 3), Rat(0), Rat(0), Rat(0)},
                                 {Rat(1, 12), Rat(0), Rat(1, 2), Rat(0)}})),
          "power distributes over max");
  BoundExpr sub = substitute_Lambda(
      make_expr({{Rat(0), Rat(0), Rat(0), Rat(2)},
                 {Rat(1), Rat(0), Rat(0), Rat(-1)}}),
      Rat(1, 3));
  b.check(expr_eq(sub, make_expr({{Rat(2, 3), Rat(0), Rat(0), Rat(0)}})),
          "(Lam^4 + Lam d) Lam^-2 at Lam = d^(1/3) collapses to d^(2/3)");

  // optimality of the chosen alpha against +-1/100 perturbations
  for (const char* name : {"main", "sc-odd"}) {
    auto der = derive_exponents(name);
    const BoundExpr& chain = der.steps[1].expr;
    Rat beta = name == std::string("main") ? Rat(1, 2) : Rat(1, 4);
    auto objective = [&](const Rat& a) {
      Rat best = chain.ms[0].d + beta * chain.ms[0].y + a * chain.ms[0].Lam;
      for (const auto& m : chain.ms)
        best = std::max(best, m.d + beta * m.y + a * m.Lam);
      return best;
    };
    Rat at = objective(der.alpha);
    b.check(objective(der.alpha + Rat(1, 100)) >= at,
            std::string(name) + ": alpha + 1/100 not better");
    if (der.alpha >= Rat(1, 100))
      b.check(objective(der.alpha - Rat(1, 100)) >= at,
              std::string(name) + ": alpha - 1/100 not better");
  }
}

void suite_archimedean(SuiteBuilder& b) {
  double worst_rel = 0.0;
  for (double t : {0.0, 1.0, 5.0})
    for (double x : {0.1, 1.0, 10.0}) {
      double q = bessel_K(t, x), s = bessel_K_series(t, x);
      double rel = std::abs(q - s) / std::max(std::abs(s), 1e-300);
      worst_rel = std::max(worst_rel, rel);
      b.check(rel <= 1e-7, "bessel cross-validation t=" + fmt(t) + " x=" + fmt(x));
    }
  b.measure("bessel_worst_rel", fmt(worst_rel));
  b.check(std::abs(bessel_K(0.0, 1.0) - 0.4210244382) <= 1e-8, "K_0(1)");
  b.check(bessel_K(0.0, 5.0) < bessel_K(0.0, 1.0), "K_0 decreasing");
  b.check(bessel_K(1.0, 2.0) == bessel_K(-1.0, 2.0), "even in the order");

  for (double t : {0.0, 1.0, 5.0}) {
    double mass = w_infty_mass(t);
    b.measure("mass_t" + fmt(t), fmt(mass));
    b.check(mass >= 0.99 && mass <= 1.0 + 1e-6,
            "normalization mass t=" + fmt(t));
  }

  auto st = describe_steinberg(3);
  auto lam1 = [](long long) { return 1.0; };
  auto g1 = whittaker_global_bound(1.0, st, 0.0, lam1);
  auto g2 = whittaker_global_bound(1.0, st, 0.0, lam1);
  b.check(g1.value > 0 && std::isfinite(g1.value), "finite positive value");
  b.check(g1.value == g2.value, "bit-for-bit reproducible");
  b.check(std::abs(g1.value - g1.alt_value) <= 1e-9 * std::abs(g1.value),
          "coprime-indexed and all-n enumerations agree");
  b.measure("global_bound_st3_y1", fmt(g1.value));

  auto sc = describe_supercuspidal(3, 1, true);
  auto gs = whittaker_global_bound(1.0, sc, 0.0, lam1);
  b.check(gs.k_terms == 1, "supercuspidal k-sum collapses to one shell");

  double prev = -1.0;
  int wiggles = 0;
  double grid_worst = 0.0;
  for (double y = std::sqrt(3.0) / 2.0; y <= 100.0; y *= 1.4) {
    double v = whittaker_global_bound(y, st, 0.0, lam1).value;
    if (prev >= 0 && v > prev * (1.0 + 1e-9))
      ++wiggles, grid_worst = std::max(grid_worst, v / prev - 1.0);
    prev = v;
  }
  if (wiggles > 0)
    b.flag("monotonicity in y shows " + std::to_string(wiggles) +
           " wiggle(s) of relative size <= " + fmt(grid_worst) +
           " on the grid");
  else
    b.measure("monotone_in_y", "yes");
  b.flag("the expansion's sgn(n)^rho factor has modulus one and is ignored "
         "inside the absolute-value bound");
}

void dispatch(const std::string& name, SuiteBuilder& b,
              const VerifyConfig& cfg) {
  if (name == "dimension") suite_dimension(b);
  else if (name == "cosets") suite_cosets(b);
  else if (name == "steinberg") suite_steinberg(b);
  else if (name == "supercuspidal") suite_supercuspidal(b);
  else if (name == "principal_series") suite_principal_series(b);
  else if (name == "gauss") suite_gauss(b, cfg);
  else if (name == "local_bound") suite_local_bound(b);
  else if (name == "charbound") suite_charbound(b, cfg);
  else if (name == "hecke") suite_hecke(b, cfg);
  else if (name == "amplifier") suite_amplifier(b);
  else if (name == "counting") suite_counting(b, cfg);
  else if (name == "exponents") suite_exponents(b);
  else if (name == "archimedean") suite_archimedean(b);
  else throw std::invalid_argument("unknown suite: " + name);
}

}  // namespace

std::vector<std::string> suite_names() {
  return {"dimension",  "cosets",    "steinberg", "supercuspidal",
          "principal_series", "gauss", "local_bound", "charbound",
          "hecke",      "amplifier", "counting",  "exponents",
          "archimedean"};
}

VerificationReport run_suite(const std::string& name, const VerifyConfig& cfg) {
  SuiteBuilder b(name, cfg);
  auto t0 = std::chrono::steady_clock::now();
  try {
    dispatch(name, b, cfg);
  } catch (const std::exception& e) {
    b.rep.status = "fail";
    b.rep.failures.push_back(std::string("exception: ") + e.what());
  }
  b.rep.runtime_sec =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  return b.rep;
}

AggregateReport verify_all(const VerifyConfig& cfg) {
  AggregateReport agg;
  for (const std::string& name : suite_names()) {
    agg.suites.push_back(run_suite(name, cfg));
    agg.all_pass = agg.all_pass && agg.suites.back().status != "fail";
    agg.total_runtime_sec += agg.suites.back().runtime_sec;
  }
  return agg;
}

std::string report_to_json(const AggregateReport& agg, const VerifyConfig& cfg) {
  nlohmann::json root;
  root["schema_version"] = 1;
  root["seed"] = cfg.seed;
  root["exact"] = cfg.exact;
  nlohmann::json suites = nlohmann::json::array();
  for (const auto& s : agg.suites) {
    nlohmann::json js;
    js["name"] = s.name;
    js["status"] = s.status;
    js["params"] = s.params;
    nlohmann::json meas = nlohmann::json::array();
    for (const auto& [k, v] : s.measured) meas.push_back({{k, v}});
    js["measured"] = meas;
    js["failures"] = s.failures;
    js["flags"] = s.flags;
    suites.push_back(js);
  }
  root["suites"] = suites;
  root["all_pass"] = agg.all_pass;
  return root.dump(2) + "\n";
}

std::string report_to_text(const AggregateReport& agg) {
  std::ostringstream os;
  for (const auto& s : agg.suites) {
    os << std::left << std::setw(18) << s.name << " " << std::setw(8)
       << s.status << " (" << std::fixed << std::setprecision(2)
       << s.runtime_sec << "s)\n";
    for (const auto& f : s.failures) os << "    FAIL " << f << "\n";
    for (const auto& f : s.flags) os << "    flag " << f << "\n";
  }
  os << (agg.all_pass ? "ALL PASS" : "FAILURES PRESENT") << " in "
     << std::fixed << std::setprecision(2) << agg.total_runtime_sec << "s\n";
  return os.str();
}

}  // namespace supnorm
