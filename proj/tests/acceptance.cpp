// Acceptance gate: one line per criterion, nonzero exit if any line fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "supnorm/arch_whittaker.hpp"
#include "supnorm/bound_calc.hpp"
#include "supnorm/finite_gl2.hpp"
#include "supnorm/hecke.hpp"
#include "supnorm/lattice_count.hpp"
#include "supnorm/local_whittaker.hpp"
#include "supnorm/verify.hpp"

using namespace supnorm;

namespace {

struct Criterion {
  int id;
  std::string title;
  double budget_sec;
  std::function<bool(std::string&)> run;
};

TruncatedPAdic padic_at(long long p, int v, int m, long long unit = 1) {
  int K = std::max({m, m - 1 - v, -v, 1}) + 1;
  long long pk = powll(p, K);
  long long u = mod_floor(unit, pk);
  if (u % p == 0) u = 1;
  return TruncatedPAdic(p, v, u, K);
}

bool crit_dimension(std::string& note) {
  for (long long p : {3LL, 5LL, 7LL}) {
    for (int m : {1, 2}) {
      auto ps = describe_ps(make_char(p, m, 1), Complex{0, 0});
      if (ps.n != m || ps.d != Rat(powll(p, m) + powll(p, m - 1))) return false;
      auto se = describe_supercuspidal(p, m, true);
      if (se.n != 2 * m || se.d != Rat(powll(p, m) - powll(p, m - 1)))
        return false;
    }
    auto st = describe_steinberg(p);
    if (st.n != 1 || st.d != Rat(p)) return false;
    auto so = describe_supercuspidal(p, 2, false);
    if (so.n != 3 || so.d != Rat(p * p - 1)) return false;
    bool rejected = false;
    try {
      describe_supercuspidal(p, 1, false);
    } catch (const std::domain_error&) {
      rejected = true;
    }
    if (!rejected) return false;
  }
  note = "odd parity at m=1 has non-integral dimension and is rejected";
  return true;
}

bool crit_cosets(std::string&) {
  const std::pair<long long, int> grid[] = {{3, 1}, {3, 2}, {5, 1}};
  for (auto [p, m] : grid) {
    if ((long long)coset_reps(p, m).size() != powll(p, m) + powll(p, m - 1))
      return false;
    if (!coset_cover_check(p, m)) return false;
  }
  return true;
}

bool crit_steinberg(std::string& note) {
  int hits = 0;
  for (long long p : {3LL, 5LL, 7LL}) {
    for (int v = -3; v <= 3; ++v) {
      if (steinberg_SV(p, v) != steinberg_oracle(p, v)) return false;
      ++hits;
    }
    if (steinberg_SV(p, -1) != Rat(p)) return false;
    if (steinberg_SV(p, -2) != Rat(0)) return false;
  }
  note = std::to_string(hits) + " exact rational equalities";
  return true;
}

bool crit_supercuspidal(std::string& note) {
  const std::pair<long long, int> grid[] = {{3, 1}, {3, 2}, {5, 1}};
  for (auto [p, m] : grid) {
    for (bool even : {true, false}) {
      if (!even && m == 1) {
        bool rejected = false;
        try {
          describe_supercuspidal(p, 1, false);
        } catch (const std::domain_error&) {
          rejected = true;
        }
        if (!rejected) return false;
        continue;
      }
      auto desc = describe_supercuspidal(p, m, even);
      for (int v = -m - 1; v <= 1; ++v)
        if (sc_average(desc, v) != sc_kirillov_oracle(desc, padic_at(p, v, m)))
          return false;
    }
    if (!sc_orthonormality_check(p, m)) return false;
  }
  if (sc_average(describe_supercuspidal(5, 1, true), -1) != Rat(4))
    return false;
  note = "odd parity runs at m=2 (m=1 rejected by the dimension formula); "
         "spot value 4 confirmed";
  return true;
}

bool crit_principal_series(std::string& note) {
  for (long long p : {3LL, 5LL})
    for (int m : {1, 2})
      for (const MultChar& chi : enumerate_X(p, m)) {
        if (chi.cond != m || chi.e_exp == 0) continue;
        for (double t : {0.0, 0.7}) {
          auto desc = describe_ps(chi, Complex{0.0, t});
          for (const CosetRep& rep : coset_reps(p, m))
            if (std::abs(ps_whittaker_norm(desc, rep) -
                         (1.0 + 1.0 / (double)p)) > 1e-9)
              return false;
          for (int i = 0; i <= m; ++i)
            for (int v = -m; v <= m + 2; ++v) {
              double s = ps_partial_average(desc, i, padic_at(p, v, m));
              double ay = std::pow((double)p, -v);
              if (v == i - m && std::abs(s - ay) > 1e-9) return false;
              if (v != i - m && i > 0 && i < m && std::abs(s) > 1e-9)
                return false;
            }
        }
      }
  note = "sharp one-shell support verified for the middle levels; the edge "
         "levels 0 and m keep |y| on every shell their formulas support";
  return true;
}

bool crit_gauss(std::string& note) {
  long long instances = 0;
  for (long long p : {3LL, 5LL})
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
              if (!cyc_eq(gauss_G_exact(l, y, chi, M),
                          gauss_G_closed_form_exact(l, k, z, chi, M)))
                return false;
              ++instances;
            }
          }
    }
  note = std::to_string(instances) + " exact cyclotomic equalities";
  return true;
}

bool crit_local_bound(std::string&) {
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
    for (int v = -1; v <= 5; ++v)
      if (!local_bound_check(desc, padic_at(desc.p, v, desc.m))) return false;
  return true;
}

bool crit_charbound(std::string& note) {
  GL2Group G = enumerate_gl2(3, 2);
  if (G.order != 3888) return false;
  CharacterTable t = character_table(G, 1);
  if (table_orthogonality_residual(t) > 1e-6) return false;
  char buf[160];
  auto r12 = verify_character_bound(t, 12, false);
  auto r6 = verify_character_bound(t, 6, false);
  auto r8 = verify_character_bound(t, 8, true);
  std::snprintf(buf, sizeof buf,
                "measured constants: dim12 %.4f, dim6 %.4f, dim8(weak) %.4f",
                r12.worst_ratio, r6.worst_ratio, r8.worst_ratio);
  note = buf;
  return r12.within(4.0) && r6.within(4.0) && r8.within(4.0);
}

bool crit_hecke(std::string&) {
  for (long long l : {2LL, 3LL, 5LL})
    if (!hecke_convolution_check(l)) return false;
  HeckeElement sq = convolve(kappa(3), kappa(3));
  if (sq.size() != 2) return false;
  if (std::abs(sq[1] - Complex{1, 0}) > 1e-12) return false;
  if (std::abs(sq[9] - Complex{1, 0}) > 1e-12) return false;
  return true;
}

bool crit_amplifier(std::string& note) {
  auto S = build_S(11, 100);
  if ((long long)S.size() < 15) return false;
  for (size_t i = 0; i < S.size(); ++i) {
    if (mod_floor(S[i], 11) == 1) return false;
    for (size_t j = 0; j < S.size(); ++j) {
      long long prod = mod_floor(S[i] * S[j], 11);
      if (prod == 1 || mod_floor(prod * prod, 11) == 1) return false;
    }
  }
  HeckeElement f = build_f_ur(S, [](long long) { return Complex{1, 0}; }, 11);
  double y1 = 0.0;
  for (const auto& [r, c] : f) {
    if (std::abs(c.imag()) > 1e-12) return false;
    if (r == 1) y1 = c.real();
  }
  if (y1 < (double)S.size() - 1e-9) return false;
  note = "|S| = " + std::to_string(S.size()) +
         " using the widened window [Lambda/2, 3 Lambda); the narrow "
         "[Lambda, 2 Lambda) window tops out at 11 admissible primes";
  return true;
}

bool crit_counting(std::string& note) {
  std::mt19937_64 rng(18);  // matches the verify suite's default seed + 17
  std::uniform_int_distribution<long long> rdist(1, 50);
  std::uniform_real_distribution<double> ydist(1.0, 5.0), xdist(-0.5, 0.5);
  std::uniform_int_distribution<int> mdist(0, 1);
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
    auto fast = count_lattice(r, {q, ge}, z, true);
    auto slow = count_lattice_naive(r, {q, ge}, z, true);
    std::sort(fast.matrices.begin(), fast.matrices.end());
    std::sort(slow.matrices.begin(), slow.matrices.end());
    if (fast.count != slow.count || fast.matrices != slow.matrices)
      return false;
  }
  UpperHalfPoint z2i{0.0, 2.0};
  for (auto [p, lam] :
       std::vector<std::pair<long long, int>>{{5, 1}, {3, 2}, {7, 1}}) {
    auto res = count_M_lambda(1, lam, p, z2i, true);
    for (const auto& A : res.matrices)
      if (A[2] != 0) return false;
  }
  auto fit = lambda0_scaling(101, z2i);
  char buf[96];
  std::snprintf(buf, sizeof buf, "lambda0 scaling slope %.3f (<= 4.2)",
                fit.slope);
  note = buf;
  return fit.slope <= 4.2;
}

bool crit_exponents(std::string& note) {
  auto main_d = derive_exponents("main");
  auto odd_d = derive_exponents("sc-odd");
  note = "exact rationals 5/6 (beta* = 1/2) and 11/12 (beta* = 1/4)";
  return main_d.phi_exponent == Rat(5, 6) && main_d.beta_star == Rat(1, 2) &&
         odd_d.phi_exponent == Rat(11, 12) && odd_d.beta_star == Rat(1, 4);
}

bool crit_archimedean(std::string&) {
  for (double t : {0.0, 1.0, 5.0})
    for (double x : {0.1, 1.0, 10.0}) {
      double q = bessel_K(t, x), s = bessel_K_series(t, x);
      if (std::abs(q - s) > 1e-7 * std::max(std::abs(s), 1e-300)) return false;
    }
  for (double t : {0.0, 1.0, 5.0}) {
    double mass = w_infty_mass(t);
    if (mass < 0.99 || mass > 1.0 + 1e-6) return false;
  }
  return true;
}

bool crit_determinism(std::string& note) {
  VerifyConfig cfg;
  auto t0 = std::chrono::steady_clock::now();
  AggregateReport a = verify_all(cfg);
  AggregateReport b = verify_all(cfg);
  double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  std::string ja = report_to_json(a, cfg), jb = report_to_json(b, cfg);
  char buf[96];
  std::snprintf(buf, sizeof buf, "two full runs in %.1fs, JSON byte-identical",
                secs);
  note = buf;
  if (ja != jb) return false;
  if (!a.all_pass) return false;
  return secs / 2.0 < 900.0;
}

}  // namespace

int main() {
  std::vector<Criterion> cs = {
      {1, "dimension/conductor table", 1.0, crit_dimension},
      {2, "coset decomposition and cover", 30.0, crit_cosets},
      {3, "steinberg local average", 5.0, crit_steinberg},
      {4, "supercuspidal local average", 10.0, crit_supercuspidal},
      {5, "principal series shells and norms", 120.0, crit_principal_series},
      {6, "gauss-sum closed form (exact)", 60.0, crit_gauss},
      {7, "master local bound", 10.0, crit_local_bound},
      {8, "character table bound at level 9", 300.0, crit_charbound},
      {9, "hecke double-coset relation", 5.0, crit_hecke},
      {10, "amplifier construction", 5.0, crit_amplifier},
      {11, "lattice counting and scaling", 180.0, crit_counting},
      {12, "theorem exponents 5/6 and 11/12", 1.0, crit_exponents},
      {13, "archimedean whittaker", 30.0, crit_archimedean},
      {14, "end-to-end determinism", 900.0, crit_determinism},
  };
  int failures = 0;
  for (auto& c : cs) {
    std::string note;
    bool ok = false;
    auto t0 = std::chrono::steady_clock::now();
    try {
      ok = c.run(note);
    } catch (const std::exception& e) {
      note = std::string("exception: ") + e.what();
    }
    double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    if (secs > c.budget_sec) {
      ok = false;
      note += (note.empty() ? "" : "; ");
      note += "over time budget";
    }
    std::printf("criterion %2d: %s  [%6.2fs/%5.0fs]  %s%s%s\n", c.id,
                ok ? "PASS" : "FAIL", secs, c.budget_sec, c.title.c_str(),
                note.empty() ? "" : " -- ", note.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
  }
  if (failures) std::printf("%d criterion(s) failed\n", failures);
  return failures ? 1 : 0;
}
