#include "supnorm/finite_gl2.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <random>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace supnorm {

namespace {

long long lcmll(long long a, long long b) { return a / std::gcd(a, b) * b; }

// F_q helpers (q < 2^31, products fit in long long)
struct Fq {
  long long q;
  long long add(long long a, long long b) const { return (a + b) % q; }
  long long sub(long long a, long long b) const { return (a - b % q + q) % q; }
  long long mul(long long a, long long b) const { return a * b % q; }
  long long inv(long long a) const { return invmod(a, q); }
  long long pw(long long b, long long e) const { return powmod(b, e, q); }
};

using Vec = std::vector<long long>;
using Mat = std::vector<Vec>;

// Reduce rows to RREF in place; returns pivot columns. Zero rows dropped.
std::vector<int> rref(Mat& rows, const Fq& F) {
  std::vector<int> pivots;
  size_t rr = 0;
  size_t cols = rows.empty() ? 0 : rows[0].size();
  for (size_t c = 0; c < cols && rr < rows.size(); ++c) {
    size_t sel = rr;
    while (sel < rows.size() && rows[sel][c] == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[rr], rows[sel]);
    long long iv = F.inv(rows[rr][c]);
    for (auto& x : rows[rr]) x = F.mul(x, iv);
    for (size_t t = 0; t < rows.size(); ++t) {
      if (t == rr || rows[t][c] == 0) continue;
      long long f = rows[t][c];
      for (size_t cc = 0; cc < cols; ++cc)
        rows[t][cc] = F.sub(rows[t][cc], F.mul(f, rows[rr][cc]));
    }
    pivots.push_back((int)c);
    ++rr;
  }
  rows.resize(rr);
  return pivots;
}

// Characteristic polynomial via Hessenberg reduction; coefficients low->high.
Vec char_poly(Mat A, const Fq& F) {
  int n = (int)A.size();
  for (int c = 0; c < n - 2; ++c) {
    int piv = -1;
    for (int r2 = c + 1; r2 < n; ++r2)
      if (A[r2][c] != 0) { piv = r2; break; }
    if (piv == -1) continue;
    std::swap(A[piv], A[c + 1]);
    for (int r2 = 0; r2 < n; ++r2) std::swap(A[r2][piv], A[r2][c + 1]);
    long long iv = F.inv(A[c + 1][c]);
    for (int r2 = c + 2; r2 < n; ++r2) {
      if (A[r2][c] == 0) continue;
      long long f = F.mul(A[r2][c], iv);
      for (int cc = 0; cc < n; ++cc) A[r2][cc] = F.sub(A[r2][cc], F.mul(f, A[c + 1][cc]));
      for (int rr2 = 0; rr2 < n; ++rr2) A[rr2][c + 1] = F.add(A[rr2][c + 1], F.mul(f, A[rr2][r2]));
    }
  }
  // p_k(x) = det(xI - H_k) recurrence over leading principal minors
  std::vector<Vec> P(n + 1);
  P[0] = {1};
  for (int k = 1; k <= n; ++k) {
    Vec cur(k + 1, 0);
    // (x - H[k-1][k-1]) * P[k-1]
    for (int d = 0; d < (int)P[k - 1].size(); ++d) {
      cur[d + 1] = F.add(cur[d + 1], P[k - 1][d]);
      cur[d] = F.sub(cur[d], F.mul(A[k - 1][k - 1], P[k - 1][d]));
    }
    long long prod = 1;
    for (int i = k - 2; i >= 0; --i) {
      prod = F.mul(prod, A[i + 1][i]);
      long long coef = F.mul(A[i][k - 1], prod);
      for (int d = 0; d < (int)P[i].size(); ++d)
        cur[d] = F.sub(cur[d], F.mul(coef, P[i][d]));
    }
    P[k] = std::move(cur);
  }
  return P[n];
}

long long poly_eval(const Vec& c, long long x, const Fq& F) {
  long long v = 0;
  for (int i = (int)c.size() - 1; i >= 0; --i) v = F.add(F.mul(v, x), c[i]);
  return v;
}

}  // namespace

ResidueMatrix::ResidueMatrix(long long p_, int m_, std::array<long long, 4> e_)
    : p(p_), m(m_), mod(powll(p_, m_)) {
  if (p < 3 || !is_prime(p))
    throw std::invalid_argument("ResidueMatrix: odd prime required");
  if (m < 1) throw std::invalid_argument("ResidueMatrix: m must be >= 1");
  for (int i = 0; i < 4; ++i) e[i] = mod_floor(e_[i], mod);
}

long long ResidueMatrix::det() const {
  return mod_floor(e[0] * e[3] - e[1] * e[2], mod);
}

ResidueMatrix ResidueMatrix::mul(const ResidueMatrix& o) const {
  return ResidueMatrix(p, m,
      {e[0] * o.e[0] + e[1] * o.e[2], e[0] * o.e[1] + e[1] * o.e[3],
       e[2] * o.e[0] + e[3] * o.e[2], e[2] * o.e[1] + e[3] * o.e[3]});
}

ResidueMatrix ResidueMatrix::inv() const {
  long long d = det();
  if (d % p == 0) throw std::domain_error("ResidueMatrix::inv: singular");
  long long di = invmod(d, mod);
  return ResidueMatrix(p, m, {e[3] * di, -e[1] * di, -e[2] * di, e[0] * di});
}

long long gl2_order(long long p, int m) {
  return powll(p, 4 * (m - 1)) * (p * p - 1) * (p * p - p);
}

uint32_t GL2Group::pack(const std::array<long long, 4>& e) const {
  return (uint32_t)(((e[0] * mod + e[1]) * mod + e[2]) * mod + e[3]);
}

std::array<long long, 4> GL2Group::unpack(uint32_t code) const {
  std::array<long long, 4> e;
  e[3] = code % mod; code /= (uint32_t)mod;
  e[2] = code % mod; code /= (uint32_t)mod;
  e[1] = code % mod; code /= (uint32_t)mod;
  e[0] = code;
  return e;
}

uint32_t GL2Group::mul_codes(uint32_t x, uint32_t y) const {
  auto a = unpack(x), b = unpack(y);
  return pack({mod_floor(a[0] * b[0] + a[1] * b[2], mod),
               mod_floor(a[0] * b[1] + a[1] * b[3], mod),
               mod_floor(a[2] * b[0] + a[3] * b[2], mod),
               mod_floor(a[2] * b[1] + a[3] * b[3], mod)});
}

uint32_t GL2Group::inv_code(uint32_t x) const {
  auto a = unpack(x);
  long long d = mod_floor(a[0] * a[3] - a[1] * a[2], mod);
  long long di = invmod(d, mod);
  return pack({mod_floor(a[3] * di, mod), mod_floor(-a[1] * di, mod),
               mod_floor(-a[2] * di, mod), mod_floor(a[0] * di, mod)});
}

GL2Group enumerate_gl2(long long p, int m, long long budget) {
  GL2Group G;
  G.p = p;
  G.m = m;
  G.mod = powll(p, m);
  G.order = gl2_order(p, m);
  if (G.order > budget)
    throw ResourceError("enumerate_gl2: group order " + std::to_string(G.order) +
                        " exceeds budget " + std::to_string(budget));
  long long total = G.mod * G.mod * G.mod * G.mod;
  G.cls.assign(total, -1);
  std::vector<uint8_t> member(total, 0);
  for (long long code = 0; code < total; ++code) {
    auto e = G.unpack((uint32_t)code);
    if (mod_floor(e[0] * e[3] - e[1] * e[2], G.mod) % p != 0) {
      member[code] = 1;
      G.elems.push_back((uint32_t)code);
    }
  }
  if ((long long)G.elems.size() != G.order)
    throw std::logic_error("enumerate_gl2: order formula mismatch");

  // conjugating generators: elementary unipotents and a diagonal torus element
  long long g = unit_group(p, m).generator;
  std::vector<uint32_t> gens = {
      G.pack({1, 1, 0, 1}), G.pack({1, 0, 1, 1}), G.pack({g, 0, 0, 1})};
  {
    std::vector<uint32_t> invs;
    for (auto c : gens) invs.push_back(G.inv_code(c));
    gens.insert(gens.end(), invs.begin(), invs.end());
  }

  for (uint32_t start : G.elems) {
    if (G.cls[start] != -1) continue;
    int id = (int)G.rep.size();
    G.rep.push_back(start);
    G.cls[start] = id;
    long long size = 1;
    std::queue<uint32_t> bfs;
    bfs.push(start);
    while (!bfs.empty()) {
      uint32_t x = bfs.front();
      bfs.pop();
      for (size_t gi = 0; gi < gens.size() / 2; ++gi) {
        uint32_t y = G.mul_codes(gens[gi + gens.size() / 2],
                                 G.mul_codes(x, gens[gi]));
        if (G.cls[y] == -1) {
          G.cls[y] = id;
          ++size;
          bfs.push(y);
        }
      }
    }
    G.csize.push_back(size);
  }
  long long check = 0;
  for (long long s : G.csize) check += s;
  if (check != G.order) throw std::logic_error("enumerate_gl2: classes miss elements");
  G.inv_class.resize(G.r());
  for (int i = 0; i < G.r(); ++i) G.inv_class[i] = G.cls[G.inv_code(G.rep[i])];
  return G;
}

LevelResult level_of(const ResidueMatrix& g) {
  if (!g.invertible()) throw std::domain_error("level_of: singular matrix");
  // scalar mod p^m => central
  if (g.e[1] == 0 && g.e[2] == 0 && g.e[0] == g.e[3]) return {g.m, true};
  int best = 0;
  for (int lam = 1; lam < g.m; ++lam) {
    long long q = powll(g.p, lam);
    if (g.e[1] % q == 0 && g.e[2] % q == 0 &&
        mod_floor(g.e[0] - g.e[3], q) == 0 && g.e[0] % g.p != 0)
      best = lam;
    else
      break;
  }
  return {best, false};
}

CharacterTable character_table(const GL2Group& G, uint64_t seed, bool exact) {
  const int r = G.r();
  CharacterTable T;
  T.p = G.p;
  T.m = G.m;
  T.group_order = G.order;
  T.class_sizes = G.csize;
  for (int i = 0; i < r; ++i) {
    T.class_reps.push_back(G.unpack(G.rep[i]));
    ResidueMatrix M(G.p, G.m, T.class_reps.back());
    auto lv = level_of(M);
    T.class_level.push_back(lv.central ? -1 : lv.lambda);
  }

  // element orders per class and the group exponent
  uint32_t id_code = G.pack({1, 0, 0, 1});
  int id_class = G.cls[id_code];
  std::vector<long long> ord(r);
  std::vector<std::vector<int>> pw(r);  // class of rep^t, t = 0..ord-1
  long long e = 1;
  for (int i = 0; i < r; ++i) {
    uint32_t x = id_code;
    do {
      pw[i].push_back(G.cls[x]);
      x = G.mul_codes(x, G.rep[i]);
    } while (x != id_code);
    ord[i] = (long long)pw[i].size();
    e = lcmll(e, ord[i]);
  }
  T.exponent = e;

  // split prime q = 1 mod e, q > 2 sqrt(|G|)
  long long q = e + 1;
  double lim = 2.0 * std::sqrt((double)G.order);
  while (!(is_prime(q) && (double)q > lim && G.order % q != 0)) q += e;
  Fq F{q};
  long long gq = 2;
  while (true) {
    bool prim = true;
    for (long long d2 = 2; d2 * d2 <= q - 1; ++d2) {
      if ((q - 1) % d2 != 0) continue;
      if (F.pw(gq, (q - 1) / d2) == 1 || F.pw(gq, d2) == 1) {
        // checking both cofactors; refine below
      }
    }
    prim = true;
    for (long long d2 = 2; d2 * d2 <= q - 1; ++d2) {
      if ((q - 1) % d2 == 0) {
        if (F.pw(gq, (q - 1) / d2) == 1) { prim = false; break; }
        if (d2 * d2 != q - 1 && F.pw(gq, d2) == 1 && (q - 1) / d2 != d2) {
          // handled by the cofactor test above
        }
      }
    }
    if (prim) break;
    ++gq;
  }
  long long z = F.pw(gq, (q - 1) / e);  // primitive e-th root

  // class coefficient matrices: (M_i)[j][k] = #{x in C_i : x^{-1} g_k in C_j}
  std::vector<std::vector<std::vector<int>>> a(
      r, std::vector<std::vector<int>>(r, std::vector<int>(r, 0)));
  std::vector<int> elem_class(G.elems.size());
  for (size_t t = 0; t < G.elems.size(); ++t)
    elem_class[t] = G.cls[G.elems[t]];
#pragma omp parallel for schedule(dynamic)
  for (int k = 0; k < r; ++k) {
    uint32_t gk = G.rep[k];
    for (size_t t = 0; t < G.elems.size(); ++t) {
      int i = elem_class[t];
      int j = G.cls[G.mul_codes(G.inv_code(G.elems[t]), gk)];
      a[i][j][k]++;
    }
  }

  // common eigenvectors of the class matrices over F_q (Burnside-Dixon)
  std::vector<Vec> omegas;
  for (int attempt = 0; attempt < 8; ++attempt) {
    std::mt19937_64 rng(seed + 0x9e3779b97f4a7c15ULL * attempt);
    std::uniform_int_distribution<long long> dist(0, q - 1);
    Vec combo(r);
    for (auto& c : combo) c = dist(rng);
    auto apply = [&](int which, const Vec& v) {
      // which = -1 applies the random combination
      Vec out(r, 0);
      for (int j = 0; j < r; ++j) {
        long long s = 0;
        for (int k = 0; k < r; ++k) {
          if (v[k] == 0) continue;
          long long coef = 0;
          if (which == -1) {
            for (int i = 0; i < r; ++i)
              if (combo[i] != 0 && a[i][j][k] != 0)
                coef = F.add(coef, F.mul(combo[i], a[i][j][k] % q));
          } else {
            coef = a[which][j][k] % q;
          }
          s = F.add(s, F.mul(coef, v[k]));
        }
        out[j] = s;
      }
      return out;
    };
    // dense matrix of the random combination for speed
    Mat Mc(r, Vec(r, 0));
    for (int i = 0; i < r; ++i) {
      if (combo[i] == 0) continue;
      for (int j = 0; j < r; ++j)
        for (int k = 0; k < r; ++k)
          if (a[i][j][k] != 0)
            Mc[j][k] = F.add(Mc[j][k], F.mul(combo[i], a[i][j][k] % q));
    }
    (void)apply;

    std::vector<Mat> spaces;
    {
      Mat full(r, Vec(r, 0));
      for (int i = 0; i < r; ++i) full[i][i] = 1;
      spaces.push_back(std::move(full));
    }
    auto split_by = [&](const Mat& Mop) {
      std::vector<Mat> next;
      for (auto& B : spaces) {
        int s = (int)B.size();
        if (s == 1) { next.push_back(B); continue; }
        // images and restriction in RREF coordinates
        Mat Bc = B;
        auto piv = rref(Bc, F);
        Mat R(s, Vec(s, 0));
        for (int t = 0; t < s; ++t) {
          Vec img(r, 0);
          for (int row = 0; row < r; ++row) {
            long long acc = 0;
            for (int col = 0; col < r; ++col)
              if (Bc[t][col] != 0) acc = F.add(acc, F.mul(Mop[row][col], Bc[t][col]));
            img[row] = acc;
          }
          // coordinates against RREF basis
          for (int u = 0; u < s; ++u) {
            long long c = img[piv[u]];
            R[u][t] = c;
            if (c != 0)
              for (int col = 0; col < r; ++col)
                img[col] = F.sub(img[col], F.mul(c, Bc[u][col]));
          }
          for (int col = 0; col < r; ++col)
            if (img[col] != 0)
              throw std::logic_error("character_table: subspace not invariant");
        }
        Vec cp = char_poly(R, F);
        std::vector<long long> eigs;
        for (long long lam = 0; lam < q; ++lam)
          if (poly_eval(cp, lam, F) == 0) eigs.push_back(lam);
        if (eigs.size() <= 1) { next.push_back(Bc); continue; }
        int claimed = 0;
        for (long long lam : eigs) {
          Mat K = R;
          for (int d2 = 0; d2 < s; ++d2) K[d2][d2] = F.sub(K[d2][d2], lam);
          // kernel of K (columns are coordinates)
          Mat Kt(s, Vec(s));
          for (int rr2 = 0; rr2 < s; ++rr2)
            for (int cc = 0; cc < s; ++cc) Kt[rr2][cc] = K[rr2][cc];
          auto kp = rref(Kt, F);
          std::vector<uint8_t> is_pivot(s, 0);
          for (int pc : kp) is_pivot[pc] = 1;
          Mat sub;
          for (int fc = 0; fc < s; ++fc) {
            if (is_pivot[fc]) continue;
            Vec coord(s, 0);
            coord[fc] = 1;
            for (size_t prow = 0; prow < kp.size(); ++prow)
              coord[kp[prow]] = F.sub(0, Kt[prow][fc]);
            // back to ambient coordinates
            Vec amb(r, 0);
            for (int u = 0; u < s; ++u)
              if (coord[u] != 0)
                for (int col = 0; col < r; ++col)
                  amb[col] = F.add(amb[col], F.mul(coord[u], Bc[u][col]));
            sub.push_back(std::move(amb));
          }
          if (!sub.empty()) {
            claimed += (int)sub.size();
            next.push_back(std::move(sub));
          }
        }
        if (claimed != s)
          throw std::logic_error("character_table: eigenspaces do not fill");
      }
      spaces = std::move(next);
    };

    try {
      split_by(Mc);
      for (int i = 0; i < r; ++i) {
        bool all1 = true;
        for (auto& B : spaces) all1 = all1 && B.size() == 1;
        if (all1) break;
        Mat Mi(r, Vec(r, 0));
        for (int j = 0; j < r; ++j)
          for (int k = 0; k < r; ++k) Mi[j][k] = a[i][j][k] % q;
        split_by(Mi);
      }
    } catch (const std::logic_error&) {
      continue;  // retry with derived seed
    }
    bool all1 = !spaces.empty();
    for (auto& B : spaces) all1 = all1 && B.size() == 1;
    if (!all1 || (int)spaces.size() != r) continue;
    for (auto& B : spaces) {
      Vec v = B[0];
      if (v[id_class] == 0) { omegas.clear(); break; }
      long long f = F.inv(v[id_class]);
      for (auto& x : v) x = F.mul(x, f);
      omegas.push_back(std::move(v));
    }
    if ((int)omegas.size() == r) break;
    omegas.clear();
  }
  if ((int)omegas.size() != r)
    throw std::logic_error("character_table: splitting failed on all seeds");

  // dimensions from the second orthogonality relation
  long long order_q = G.order % q;
  long long sumsq = 0;
  for (const Vec& om : omegas) {
    long long tsum = 0;
    for (int i = 0; i < r; ++i) {
      long long term = F.mul(om[i], om[G.inv_class[i]]);
      tsum = F.add(tsum, F.mul(term, F.inv(G.csize[i] % q)));
    }
    long long d2 = F.mul(order_q, F.inv(tsum));
    long long dim = -1;
    for (long long d = 1; (double)d <= std::sqrt((double)G.order) + 0.5; ++d)
      if (F.mul(d % q, d % q) == d2) { dim = d; break; }
    if (dim < 0) throw std::logic_error("character_table: no dimension lift");
    T.dims.push_back(dim);
    sumsq += dim * dim;
  }
  if (sumsq != G.order)
    throw std::logic_error("character_table: dimension mass check failed");

  // sort rows by (dimension, value tuple) for a stable layout
  std::vector<int> perm(r);
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(), [&](int x, int y2) {
    if (T.dims[x] != T.dims[y2]) return T.dims[x] < T.dims[y2];
    return omegas[x] < omegas[y2];
  });
  {
    std::vector<long long> nd(r);
    std::vector<Vec> no(r);
    for (int t = 0; t < r; ++t) { nd[t] = T.dims[perm[t]]; no[t] = omegas[perm[t]]; }
    T.dims = std::move(nd);
    omegas = std::move(no);
  }

  // chi(g_i) mod q, then exact lift as root-of-unity multiplicities
  T.values.assign(r, std::vector<Complex>(r));
  if (exact) T.mults.assign(r, {});
  for (int row = 0; row < r; ++row) {
    Vec chi_q(r);
    for (int i = 0; i < r; ++i)
      chi_q[i] = F.mul(T.dims[row] % q,
                       F.mul(omegas[row][i], F.inv(G.csize[i] % q)));
    if (exact) T.mults[row].assign(r, std::vector<long long>(e, 0));
    for (int i = 0; i < r; ++i) {
      long long n = ord[i];
      long long wn = F.pw(z, e / n);
      long long ninv = F.inv(n % q);
      Complex val{0.0, 0.0};
      for (long long k = 0; k < n; ++k) {
        long long mk = 0;
        for (long long t = 0; t < n; ++t)
          mk = F.add(mk, F.mul(chi_q[pw[i][t]], F.pw(wn, (n - k) * t % n)));
        mk = F.mul(mk, ninv);
        if (mk > T.dims[row])
          throw std::logic_error("character_table: multiplicity lift failed");
        if (mk == 0) continue;
        long long kk = k * (e / n);
        if (exact) T.mults[row][i][kk] = mk;
        double ang = 2.0 * kPi * (double)kk / (double)e;
        val += (double)mk * Complex{std::cos(ang), std::sin(ang)};
      }
      T.values[row][i] = val;
    }
    if (std::abs(T.values[row][id_class] - Complex((double)T.dims[row], 0.0)) > 1e-6)
      throw std::logic_error("character_table: identity column mismatch");
  }
  return T;
}

CharBoundReport verify_character_bound(const CharacterTable& t,
                                       long long dim_class,
                                       bool weak_exponent) {
  bool present = false;
  for (long long d : t.dims) present = present || d == dim_class;
  if (!present) {
    std::string avail;
    for (long long d : t.dims) avail += std::to_string(d) + " ";
    throw std::domain_error("verify_character_bound: dimension " +
                            std::to_string(dim_class) +
                            " absent; available: " + avail);
  }
  CharBoundReport rep;
  rep.dim_class = dim_class;
  rep.weak_exponent = weak_exponent;
  rep.rows_scanned = 0;
  rep.max_ratio_per_lambda.assign(t.m, 0.0);
  rep.worst_ratio = 0.0;
  for (size_t row = 0; row < t.dims.size(); ++row) {
    if (t.dims[row] != dim_class) continue;
    rep.rows_scanned++;
    for (size_t i = 0; i < t.class_level.size(); ++i) {
      int lam = t.class_level[i];
      if (lam < 0) continue;  // central classes excluded from the lemma
      double envelope = weak_exponent
          ? std::pow((double)t.p, 0.5 * (t.m + lam))
          : std::pow((double)t.p, (double)lam);
      double ratio = std::abs(t.values[row][i]) / envelope;
      rep.max_ratio_per_lambda[lam] = std::max(rep.max_ratio_per_lambda[lam], ratio);
      rep.worst_ratio = std::max(rep.worst_ratio, ratio);
    }
  }
  return rep;
}

double table_orthogonality_residual(const CharacterTable& t) {
  size_t r = t.dims.size();
  double worst = 0.0;
  for (size_t a2 = 0; a2 < r; ++a2)
    for (size_t b2 = a2; b2 < r; ++b2) {
      Complex s{0.0, 0.0};
      for (size_t i = 0; i < r; ++i)
        s += (double)t.class_sizes[i] * t.values[a2][i] * std::conj(t.values[b2][i]);
      s /= (double)t.group_order;
      double want = a2 == b2 ? 1.0 : 0.0;
      worst = std::max(worst, std::abs(s - Complex(want, 0.0)));
    }
  return worst;
}

}  // namespace supnorm
