#include "supnorm/lattice_count.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace supnorm {

namespace {

constexpr double kSlack = 1e-9;
// |cz+d|^2 <= ((3+sqrt5)/2) r when u <= 1; small pad for the tolerance
constexpr double kCD2 = 2.6181;

// single predicate shared by the optimized and naive enumerations
bool u_le_one(long long a, long long b, long long c, long long d,
              double x, double y, long long r) {
  double re = -(double)c * (x * x - y * y) + (double)(a - d) * x + (double)b;
  double im = y * ((double)(a - d) - 2.0 * (double)c * x);
  return re * re + im * im <= (double)r * y * y * (1.0 + kSlack) + kSlack;
}

bool cong_ok(long long v, long long res, long long q) {
  return q <= 1 || mod_floor(v - res, q) == 0;
}

long long extgcd(long long a, long long b, long long& x, long long& y) {
  if (b == 0) {
    x = a >= 0 ? 1 : -1;
    y = 0;
    return std::abs(a);
  }
  long long x1, y1;
  long long g = extgcd(b, a % b, x1, y1);
  x = y1;
  y = x1 - (a / b) * y1;
  return g;
}

void check_c_bound(long long c, double y, long long r) {
  if ((double)std::abs(c) > 2.8285 * std::sqrt((double)r) / y + 1.0)
    throw std::logic_error("count: c exceeds the 2^{3/2} sqrt(r)/y bound");
}

// matrices for one column (c, d); appended in t order
void scan_column(long long r, const CongruenceSpec& cs, double x, double y,
                 long long c, long long d, CountResult& out, bool want_list) {
  long long g = std::gcd(std::abs(c), std::abs(d));
  if (g == 0 || r % g != 0) return;
  long long x0, y0;
  extgcd(d, c, x0, y0);
  long long a0 = x0 * (r / g);
  long long b0 = -y0 * (r / g);
  // solutions step by the primitive direction (c/g, d/g)
  long long sc = c / g, sd = d / g;
  // recenter the unipotent parameter to keep magnitudes small
  if (sc != 0) {
    long long k = (long long)std::llround((double)a0 / (double)sc);
    a0 -= k * sc;
    b0 -= k * sd;
  }
  double den = ((double)c * x + d) * ((double)c * x + d) + (double)c * c * y * y;
  double wre = (((double)a0 * x + b0) * ((double)c * x + d) +
                (double)a0 * (double)c * y * y) / den;
  double wim = (double)r * y / den;
  double rad2 = (double)r * y * y * (1.0 + kSlack) / den + kSlack -
                (wim - y) * (wim - y);
  if (rad2 < 0) return;
  double rad = std::sqrt(rad2);
  // Az = w + t/g, so the admissible t window scales with g
  long long tlo = (long long)std::floor((double)g * (x - wre - rad)) - 1;
  long long thi = (long long)std::ceil((double)g * (x - wre + rad)) + 1;
  for (long long t = tlo; t <= thi; ++t) {
    long long a = a0 + t * sc;
    long long b = b0 + t * sd;
    if (!cong_ok(a, cs.res[0], cs.q) || !cong_ok(b, cs.res[1], cs.q)) continue;
    if (!u_le_one(a, b, c, d, x, y, r)) continue;
    check_c_bound(c, y, r);
    out.count++;
    if (want_list) out.matrices.push_back({a, b, c, d});
  }
}

void scan_c_zero(long long r, const CongruenceSpec& cs, double x, double y,
                 CountResult& out, bool want_list) {
  if (!cong_ok(0, cs.res[2], cs.q)) return;
  std::vector<long long> divisors;
  for (long long e = 1; e * e <= r; ++e)
    if (r % e == 0) {
      divisors.push_back(e);
      if (e != r / e) divisors.push_back(r / e);
    }
  std::sort(divisors.begin(), divisors.end());
  double lim = (double)r * y * y * (1.0 + kSlack) + kSlack;
  for (long long e : divisors)
    for (int sgn = 0; sgn < 2; ++sgn) {
      long long a = sgn ? -e : e;
      long long d = r / a;
      if (!cong_ok(a, cs.res[0], cs.q) || !cong_ok(d, cs.res[3], cs.q)) continue;
      double im = y * (double)(a - d);
      if (im * im > lim) continue;
      double B = std::sqrt(lim - im * im);
      long long blo = (long long)std::floor(-(double)(a - d) * x - B) - 1;
      long long bhi = (long long)std::ceil(-(double)(a - d) * x + B) + 1;
      for (long long b = blo; b <= bhi; ++b) {
        if (!cong_ok(b, cs.res[1], cs.q)) continue;
        if (!u_le_one(a, b, 0, d, x, y, r)) continue;
        out.count++;
        if (want_list) out.matrices.push_back({a, b, 0, d});
      }
    }
}

double fit_slope(const std::vector<double>& lx, const std::vector<double>& ly) {
  double n = (double)lx.size(), sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (size_t i = 0; i < lx.size(); ++i) {
    sx += lx[i];
    sy += ly[i];
    sxx += lx[i] * lx[i];
    sxy += lx[i] * ly[i];
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace

bool in_fundamental_domain(const UpperHalfPoint& z) {
  return std::abs(z.x) <= 0.5 + kSlack &&
         z.x * z.x + z.y * z.y >= 1.0 - kSlack;
}

double point_pair_u(const UpperHalfPoint& z1, const UpperHalfPoint& z2) {
  if (z1.y <= 0 || z2.y <= 0)
    throw std::domain_error("point_pair_u: points must be in the upper half plane");
  double dx = z1.x - z2.x, dy = z1.y - z2.y;
  return (dx * dx + dy * dy) / (z1.y * z2.y);
}

CountResult count_lattice(long long r, const CongruenceSpec& cs,
                          const UpperHalfPoint& z, bool want_list,
                          long long budget) {
  if (r < 1) throw std::invalid_argument("count_lattice: r must be >= 1");
  if (z.y <= 0) throw std::domain_error("count_lattice: z not in upper half plane");
  double x = z.x, y = z.y;
  long long q = std::max<long long>(1, cs.q);
  long long cmax = (long long)std::floor(std::sqrt(kCD2 * (double)r) / y) + 1;
  double dspan = 2.0 * std::sqrt(kCD2 * (double)r);
  double est = (2.0 * cmax / q + 1.0) * (dspan / q + 2.0);
  if (est > (double)budget)
    throw ResourceError("count_lattice: scan box c in [-" + std::to_string(cmax) +
                        "," + std::to_string(cmax) + "], d span " +
                        std::to_string((long long)dspan) + " exceeds budget " +
                        std::to_string(budget));

  std::vector<long long> cvals;
  for (long long c = -cmax; c <= cmax; ++c)
    if (c != 0 && cong_ok(c, cs.res[2], q)) cvals.push_back(c);

  std::vector<CountResult> parts(cvals.size());
#pragma omp parallel for schedule(dynamic) if (!want_list)
  for (size_t ci = 0; ci < cvals.size(); ++ci) {
    long long c = cvals[ci];
    double s2 = kCD2 * (double)r - (double)c * c * y * y;
    if (s2 < 0) continue;
    double s = std::sqrt(s2);
    long long dlo = (long long)std::floor(-(double)c * x - s) - 1;
    long long dhi = (long long)std::ceil(-(double)c * x + s) + 1;
    for (long long d = dlo; d <= dhi; ++d) {
      if (!cong_ok(d, cs.res[3], q)) continue;
      scan_column(r, cs, x, y, c, d, parts[ci], want_list);
    }
  }
  CountResult out;
  scan_c_zero(r, cs, x, y, out, want_list);
  for (auto& part : parts) {
    out.count += part.count;
    if (want_list)
      out.matrices.insert(out.matrices.end(), part.matrices.begin(),
                          part.matrices.end());
  }
  return out;
}

CountResult count_lattice_naive(long long r, const CongruenceSpec& cs,
                                const UpperHalfPoint& z, bool want_list) {
  if (r < 1) throw std::invalid_argument("count_lattice_naive: r must be >= 1");
  if (z.y <= 0)
    throw std::domain_error("count_lattice_naive: z not in upper half plane");
  double x = z.x, y = z.y;
  double sr = std::sqrt((double)r);
  long long Cc = (long long)std::floor(std::sqrt(kCD2 * (double)r) / y) + 1;
  long long Dd = (long long)std::floor(std::sqrt(kCD2 * (double)r) +
                                       (double)Cc * std::abs(x)) + 1;
  long long Aa = Dd + 2 * Cc * (long long)std::ceil(std::abs(x)) +
                 (long long)std::ceil(sr) + 2;
  CountResult out;
  for (long long c = -Cc; c <= Cc; ++c)
    for (long long d = -Dd; d <= Dd; ++d)
      for (long long a = -Aa; a <= Aa; ++a) {
        double bmid = -(-(double)c * (x * x - y * y) + (double)(a - d) * x);
        double bpad = std::sqrt((double)r) * y + 1.0;
        long long blo = (long long)std::floor(bmid - bpad) - 1;
        long long bhi = (long long)std::ceil(bmid + bpad) + 1;
        for (long long b = blo; b <= bhi; ++b) {
          if (a * d - b * c != r) continue;
          if (!cong_ok(a, cs.res[0], cs.q) || !cong_ok(b, cs.res[1], cs.q) ||
              !cong_ok(c, cs.res[2], cs.q) || !cong_ok(d, cs.res[3], cs.q))
            continue;
          if (!u_le_one(a, b, c, d, x, y, r)) continue;
          check_c_bound(c, y, r);
          out.count++;
          if (want_list) out.matrices.push_back({a, b, c, d});
        }
      }
  return out;
}

CountResult count_M(long long r, const ResidueMatrix& g,
                    const UpperHalfPoint& z, bool want_list, long long budget) {
  CongruenceSpec cs;
  cs.q = g.mod;
  cs.res = g.e;
  return count_lattice(r, cs, z, want_list, budget);
}

CountResult count_M_lambda(long long r, int lambda, long long p,
                           const UpperHalfPoint& z, bool want_list,
                           long long budget) {
  if (lambda < 0) throw std::invalid_argument("count_M_lambda: lambda >= 0");
  CongruenceSpec cs;
  cs.q = lambda == 0 ? 1 : powll(p, lambda);
  cs.res = {1, 0, 0, 1};
  return count_lattice(r, cs, z, want_list, budget);
}

LevelEnvelope lemma_envelope(long long p, int m, bool weak) {
  return [p, m, weak](int lambda) {
    return weak ? std::pow((double)p, 0.5 * (m + lambda))
                : std::pow((double)p, (double)lambda);
  };
}

LevelEnvelope table_envelope(const CharacterTable& t) {
  std::vector<double> env(t.m + 1, 0.0);
  for (size_t row = 0; row < t.dims.size(); ++row)
    for (size_t i = 0; i < t.class_level.size(); ++i) {
      int lam = t.class_level[i] < 0 ? t.m : t.class_level[i];
      env[lam] = std::max(env[lam], std::abs(t.values[row][i]));
    }
  return [env](int lambda) { return env.at(lambda); };
}

double geometric_side(const UpperHalfPoint& z, const HeckeElement& f_ur,
                      const LevelEnvelope& env, long long p, int m,
                      long long budget) {
  double total = 0.0;
  for (const auto& [r, yr] : f_ur) {
    double w = std::abs(yr) / std::sqrt((double)r);
    if (w < 1e-14) continue;
    for (int lambda = 0; lambda <= m; ++lambda)
      total += w * env(lambda) *
               (double)count_M_lambda(r, lambda, p, z, false, budget).count;
  }
  return total;
}

ScalingFit lambda0_scaling(long long p, const UpperHalfPoint& z,
                           std::vector<long long> grid, long long budget) {
  ScalingFit fit;
  fit.grid = grid;
  std::vector<double> lx, ly;
  for (long long L : grid) {
    auto S = admissible_primes(p, {std::max<long long>(2, L / 2), 3 * L});
    if (S.empty())
      throw std::domain_error("lambda0_scaling: empty amplifier window");
    HeckeElement f = build_f_ur(S, [](long long) { return Complex{1, 0}; }, p);
    double block = 0.0;
    for (const auto& [r, yr] : f) {
      double w = std::abs(yr) / std::sqrt((double)r);
      if (w < 1e-14) continue;
      block += w * (double)count_lattice(r, {}, z, false, budget).count;
    }
    fit.blocks.push_back(block);
    lx.push_back(std::log((double)L));
    ly.push_back(std::log(std::max(block, 1e-12)));
  }
  fit.slope = fit_slope(lx, ly);
  return fit;
}

}  // namespace supnorm
