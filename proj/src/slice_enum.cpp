#include "enriques/slice_enum.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <numeric>

namespace enriques {

namespace {

using I128 = __int128;
using Vec10 = std::array<Coord, kRank>;

I128 iabs128(I128 a) { return a < 0 ? -a : a; }

I128 gcd128(I128 a, I128 b) {
  a = iabs128(a);
  b = iabs128(b);
  while (b != 0) {
    I128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

I128 c_add(I128 a, I128 b) {
  I128 r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("128-bit overflow in addition");
  return r;
}

I128 c_sub(I128 a, I128 b) {
  I128 r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("128-bit overflow in subtraction");
  return r;
}

I128 c_mul(I128 a, I128 b) {
  I128 r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("128-bit overflow in multiplication");
  return r;
}

// Nearest integer to a/b, b != 0; ties round toward zero.
I128 round_div(I128 a, I128 b) {
  I128 q = a / b;
  I128 r = a % b;
  if (iabs128(r) * 2 > iabs128(b)) q += ((a < 0) == (b < 0)) ? 1 : -1;
  return q;
}

I128 floor_div(I128 a, I128 b) {
  I128 q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

// Exact rational on 128-bit integers, denominator > 0, always normalized.
struct Rat {
  I128 n = 0;
  I128 d = 1;

  static Rat of(I128 v) { return Rat{v, 1}; }
};

Rat rat_make(I128 n, I128 d) {
  if (d == 0) throw InvariantViolation("rational with zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  I128 g = gcd128(n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  return Rat{n, d};
}

Rat rat_add(const Rat& a, const Rat& b) {
  return rat_make(c_add(c_mul(a.n, b.d), c_mul(b.n, a.d)), c_mul(a.d, b.d));
}

Rat rat_sub(const Rat& a, const Rat& b) {
  return rat_make(c_sub(c_mul(a.n, b.d), c_mul(b.n, a.d)), c_mul(a.d, b.d));
}

Rat rat_mul(const Rat& a, const Rat& b) {
  return rat_make(c_mul(a.n, b.n), c_mul(a.d, b.d));
}

int rat_cmp(const Rat& a, const Rat& b) {
  I128 lhs = c_mul(a.n, b.d);
  I128 rhs = c_mul(b.n, a.d);
  return lhs < rhs ? -1 : (lhs > rhs ? 1 : 0);
}

bool rat_is_neg(const Rat& a) { return a.n < 0; }

Coord rat_round(const Rat& a) {
  I128 q = floor_div(c_add(c_mul(2, a.n), a.d), c_mul(2, a.d));
  return static_cast<Coord>(q);
}

// ---------------------------------------------------------------------------
// Integral Gram-Schmidt data for a positive definite integer Gram matrix:
// dnum[t] is the t-th leading principal minor (dnum[0] = 1), lam[i][j] the
// scaled projections with mu_ij = lam[i][j] / dnum[j+1].
// ---------------------------------------------------------------------------
template <int N>
struct Gso {
  I128 lam[N][N] = {};
  I128 dnum[N + 1] = {};
};

template <int N>
void integral_gso(const I128 (&P)[N][N], Gso<N>& g) {
  g.dnum[0] = 1;
  for (int i = 0; i < N; ++i) {
    for (int j = 0; j <= i; ++j) {
      I128 u = P[i][j];
      for (int k = 0; k < j; ++k) {
        I128 t = c_sub(c_mul(g.dnum[k + 1], u), c_mul(g.lam[i][k], g.lam[j][k]));
        if (t % g.dnum[k] != 0)
          throw InvariantViolation("integral Gram-Schmidt: inexact division");
        u = t / g.dnum[k];
      }
      if (j < i)
        g.lam[i][j] = u;
      else {
        if (u <= 0)
          throw InvariantViolation("quadratic form is not positive definite");
        g.dnum[i + 1] = u;
      }
    }
  }
}

Coord gram_entry_i64(const Vec10& a, const Vec10& b) {
  const auto& g = gram_matrix();
  I128 total = 0;
  for (int i = 0; i < kRank; ++i) {
    if (a[i] == 0) continue;
    I128 row = 0;
    for (int j = 0; j < kRank; ++j)
      if (g[i][j] != 0 && b[j] != 0) row = c_add(row, c_mul(g[i][j], b[j]));
    total = c_add(total, c_mul(static_cast<I128>(a[i]), row));
  }
  if (total > INT64_MAX || total < INT64_MIN)
    throw OverflowError("pairing exceeds 64-bit range");
  return static_cast<Coord>(total);
}

Vec10 vec_sub_scaled(const Vec10& a, I128 q, const Vec10& b) {
  Vec10 r;
  for (int i = 0; i < kRank; ++i) {
    I128 v = c_sub(static_cast<I128>(a[i]), c_mul(q, static_cast<I128>(b[i])));
    if (v > INT64_MAX || v < INT64_MIN)
      throw OverflowError("kernel reduction exceeds 64-bit range");
    r[i] = static_cast<Coord>(v);
  }
  return r;
}

// ---------------------------------------------------------------------------
// Kernel of x -> v.x over the integers, via unimodular column reduction.
// Returns a column u0 with v.u0 = gcd(v) > 0 and a basis of the kernel.
// ---------------------------------------------------------------------------
struct KernelData {
  Coord divis = 0;
  Vec10 u0{};
  std::array<Vec10, kRank - 1> kernel{};
};

KernelData kernel_of(const Vec10& v) {
  std::array<I128, kRank> w;
  std::array<Vec10, kRank> cols;
  for (int i = 0; i < kRank; ++i) {
    w[i] = v[i];
    cols[i] = Vec10{};
    cols[i][i] = 1;
  }
  auto count_nonzero = [&] {
    int n = 0;
    for (auto x : w)
      if (x != 0) ++n;
    return n;
  };
  int guard = 0;
  while (count_nonzero() > 1) {
    if (++guard > 10000) throw InvariantViolation("kernel reduction failed to terminate");
    int piv = -1;
    for (int i = 0; i < kRank; ++i)
      if (w[i] != 0 && (piv < 0 || iabs128(w[i]) < iabs128(w[piv]))) piv = i;
    for (int j = 0; j < kRank; ++j) {
      if (j == piv || w[j] == 0) continue;
      I128 q = round_div(w[j], w[piv]);
      if (q != 0) {
        w[j] = c_sub(w[j], c_mul(q, w[piv]));
        cols[j] = vec_sub_scaled(cols[j], q, cols[piv]);
      }
    }
  }
  int piv = -1;
  for (int i = 0; i < kRank; ++i)
    if (w[i] != 0) piv = i;
  if (piv < 0) throw PreconditionError("kernel_of: zero functional");
  if (w[piv] < 0) {
    w[piv] = -w[piv];
    for (auto& x : cols[piv]) x = checked_neg(x);
  }
  KernelData out;
  out.divis = static_cast<Coord>(w[piv]);
  out.u0 = cols[piv];
  int idx = 0;
  for (int i = 0; i < kRank; ++i)
    if (i != piv) out.kernel[idx++] = cols[i];
  // sanity: columns really annihilate v
  for (const auto& k : out.kernel) {
    I128 dot = 0;
    for (int i = 0; i < kRank; ++i) dot = c_add(dot, c_mul(static_cast<I128>(v[i]), k[i]));
    if (dot != 0) throw InvariantViolation("kernel basis fails to annihilate the slice functional");
  }
  return out;
}

// ---------------------------------------------------------------------------
// LLL reduction (delta = 3/4) of the definite form -Gram on the kernel basis.
// The Gram-Schmidt data is recomputed after every basis change; at rank 9 the
// cost is negligible and the logic stays simple.
// ---------------------------------------------------------------------------
constexpr int kSub = kRank - 1;

void gram_of_kernel(const std::array<Vec10, kSub>& K, I128 (&P)[kSub][kSub]) {
  for (int i = 0; i < kSub; ++i)
    for (int j = 0; j <= i; ++j) {
      I128 val = -static_cast<I128>(gram_entry_i64(K[i], K[j]));
      P[i][j] = P[j][i] = val;
    }
}

void lll_reduce(std::array<Vec10, kSub>& K) {
  I128 P[kSub][kSub];
  Gso<kSub> g;
  auto refresh = [&] {
    gram_of_kernel(K, P);
    integral_gso(P, g);
  };
  refresh();
  int k = 1;
  int guard = 0;
  while (k < kSub) {
    if (++guard > 200000) throw InvariantViolation("LLL failed to terminate");
    for (int j = k - 1; j >= 0; --j) {
      if (iabs128(c_mul(2, g.lam[k][j])) > g.dnum[j + 1]) {
        I128 q = round_div(g.lam[k][j], g.dnum[j + 1]);
        K[k] = vec_sub_scaled(K[k], q, K[j]);
        refresh();
      }
    }
    I128 lamv = g.lam[k][k - 1];
    I128 lhs = c_mul(4, c_add(c_mul(g.dnum[k + 1], g.dnum[k - 1]), c_mul(lamv, lamv)));
    I128 rhs = c_mul(3, c_mul(g.dnum[k], g.dnum[k]));
    if (lhs < rhs) {
      std::swap(K[k], K[k - 1]);
      refresh();
      k = std::max(1, k - 1);
    } else {
      ++k;
    }
  }
}

// Solve P z = b exactly over Q (P positive definite).
std::array<Rat, kSub> solve_pd(const I128 (&P)[kSub][kSub], const std::array<I128, kSub>& b) {
  Rat a[kSub][kSub + 1];
  for (int i = 0; i < kSub; ++i) {
    for (int j = 0; j < kSub; ++j) a[i][j] = Rat::of(P[i][j]);
    a[i][kSub] = Rat::of(b[i]);
  }
  for (int col = 0; col < kSub; ++col) {
    int piv = -1;
    for (int r = col; r < kSub; ++r)
      if (a[r][col].n != 0) {
        piv = r;
        break;
      }
    if (piv < 0) throw InvariantViolation("singular definite form");
    if (piv != col)
      for (int j = 0; j <= kSub; ++j) std::swap(a[piv][j], a[col][j]);
    for (int r = 0; r < kSub; ++r) {
      if (r == col || a[r][col].n == 0) continue;
      Rat f = rat_make(c_mul(a[r][col].n, a[col][col].d), c_mul(a[r][col].d, a[col][col].n));
      for (int j = col; j <= kSub; ++j)
        a[r][j] = rat_sub(a[r][j], rat_mul(f, a[col][j]));
    }
  }
  std::array<Rat, kSub> z;
  for (int i = 0; i < kSub; ++i)
    z[i] = rat_make(c_mul(a[i][kSub].n, a[i][i].d), c_mul(a[i][kSub].d, a[i][i].n));
  return z;
}

// ---------------------------------------------------------------------------
// Per-class enumeration context: kernel, reduced Gram and its GSO are shared
// across all degrees m, so repeated slices of the same class are cheap.
// ---------------------------------------------------------------------------
struct SliceContext {
  DivisorClass C;
  Polarization pol;
  Coord c_sq;
  Vec10 v{};  // G * C
  Coord divis = 0;
  Vec10 u0{};
  std::array<Vec10, kSub> K{};
  I128 P[kSub][kSub] = {};
  Gso<kSub> gso;
  Rat mu[kSub][kSub];  // mu[j][i], j > i
  Rat qi[kSub];        // |b*_i|^2 as a rational

  SliceContext(const DivisorClass& C_in, const Polarization& pol_in)
      : C(C_in), pol(pol_in), c_sq(self_intersection(C_in)) {
    if (c_sq <= 0) throw PreconditionError("slice enumeration requires C^2 > 0");
    const auto& g = gram_matrix();
    for (int i = 0; i < kRank; ++i) {
      Coord row = 0;
      for (int j = 0; j < kRank; ++j)
        row = checked_add(row, checked_mul(g[i][j], C.c[j]));
      v[i] = row;
    }
    KernelData kd = kernel_of(v);
    divis = kd.divis;
    u0 = kd.u0;
    K = kd.kernel;
    lll_reduce(K);
    gram_of_kernel(K, P);
    integral_gso(P, gso);
    for (int j = 0; j < kSub; ++j) {
      qi[j] = rat_make(gso.dnum[j + 1], gso.dnum[j]);
      for (int i = 0; i < j; ++i) mu[j][i] = rat_make(gso.lam[j][i], gso.dnum[i + 1]);
    }
  }

  std::vector<DivisorClass> enumerate(Coord m, Coord nmin, Coord nmax,
                                      bool effective_only) const;
};

std::vector<DivisorClass> SliceContext::enumerate(Coord m, Coord nmin, Coord nmax,
                                                  bool effective_only) const {
  std::vector<DivisorClass> out;
  if (m % divis != 0) return out;

  Coord scale = m / divis;
  Vec10 x0;
  for (int i = 0; i < kRank; ++i) x0[i] = checked_mul(scale, u0[i]);

  auto dual_of = [&](const Vec10& x) {
    // b_i = K_i . x under the intersection form
    std::array<I128, kSub> b;
    for (int i = 0; i < kSub; ++i) b[i] = gram_entry_i64(K[i], x);
    return b;
  };

  // Babai recentering keeps all budget rationals small.
  std::array<I128, kSub> b = dual_of(x0);
  std::array<Rat, kSub> zstar = solve_pd(P, b);
  for (int i = 0; i < kSub; ++i) {
    Coord r = rat_round(zstar[i]);
    if (r != 0)
      for (int t = 0; t < kRank; ++t)
        x0[t] = checked_add(x0[t], checked_mul(r, K[i][t]));
  }
  b = dual_of(x0);
  zstar = solve_pd(P, b);

  I128 c0 = gram_entry_i64(x0, x0);
  I128 S = c_sub(c0, nmin);
  Rat radius = Rat::of(S);
  for (int i = 0; i < kSub; ++i)
    radius = rat_add(radius, rat_mul(Rat::of(b[i]), zstar[i]));
  if (rat_is_neg(radius)) return out;

  std::array<Coord, kSub> zs{};
  std::array<Rat, kSub> sig_init;
  sig_init.fill(Rat::of(0));

  std::function<void(int, Rat, std::array<Rat, kSub>)> rec =
      [&](int level, Rat budget, std::array<Rat, kSub> sig) {
        if (level < 0) {
          DivisorClass x;
          for (int i = 0; i < kRank; ++i) {
            I128 val = x0[i];
            for (int j = 0; j < kSub; ++j)
              val = c_add(val, c_mul(static_cast<I128>(zs[j]), K[j][i]));
            if (val > INT64_MAX || val < INT64_MIN)
              throw OverflowError("slice member exceeds 64-bit coordinates");
            x.c[i] = static_cast<Coord>(val);
          }
          if (pairing(x, C) != m)
            throw InvariantViolation("slice enumeration produced a wrong degree");
          Coord sq = self_intersection(x);
          if (sq < nmin || sq > nmax) return;
          if (effective_only && !(sq >= 0 && pairing(x, pol.h()) > 0)) return;
          out.push_back(x);
          return;
        }
        Rat rho = rat_sub(zstar[level], sig[level]);
        Coord zc = rat_round(rho);
        auto walk = [&](Coord start, Coord dir) {
          for (Coord z = start;; z += dir) {
            Rat delta = rat_sub(Rat::of(z), rho);
            Rat contrib = rat_mul(qi[level], rat_mul(delta, delta));
            if (rat_cmp(contrib, budget) > 0) break;
            zs[level] = z;
            auto sig2 = sig;
            Rat dz = rat_sub(Rat::of(z), zstar[level]);
            for (int t = 0; t < level; ++t)
              sig2[t] = rat_add(sig2[t], rat_mul(mu[level][t], dz));
            rec(level - 1, rat_sub(budget, contrib), sig2);
          }
        };
        walk(zc, 1);
        walk(zc - 1, -1);
      };
  rec(kSub - 1, radius, sig_init);

  std::sort(out.begin(), out.end(), std::greater<DivisorClass>());
  return out;
}

// ---------------------------------------------------------------------------
// Fixed positive definite Gram of the E8 block (negated), with its GSO, for
// the box-scan oracle.
// ---------------------------------------------------------------------------
constexpr int kE8 = 8;

struct E8Data {
  I128 N[kE8][kE8] = {};
  Gso<kE8> gso;
  Rat mu[kE8][kE8];
  Rat qi[kE8];

  E8Data() {
    const auto& g = gram_matrix();
    for (int i = 0; i < kE8; ++i)
      for (int j = 0; j < kE8; ++j) N[i][j] = -static_cast<I128>(g[i + 2][j + 2]);
    integral_gso(N, gso);
    for (int j = 0; j < kE8; ++j) {
      qi[j] = rat_make(gso.dnum[j + 1], gso.dnum[j]);
      for (int i = 0; i < j; ++i) mu[j][i] = rat_make(gso.lam[j][i], gso.dnum[i + 1]);
    }
  }
};

const E8Data& e8_data() {
  static const E8Data d;
  return d;
}

// Enumerates every w in [-R, R]^8 with -w^2 = target exactly.  The last
// coordinate is solved, not scanned, so only the feasible tree is visited.
void e8_shell(Coord target, Coord R,
              const std::function<bool(int /*level*/, Coord /*z*/)>& admit,
              const std::function<void(const std::array<Coord, kE8>&)>& leaf) {
  const E8Data& d = e8_data();
  std::array<Coord, kE8> zs{};

  std::function<void(int, Rat, std::array<Rat, kE8>)> rec =
      [&](int level, Rat budget, std::array<Rat, kE8> sig) {
        Rat rho = rat_sub(Rat::of(0), sig[level]);
        if (level == 0) {
          // q_0 (z - rho)^2 == budget exactly
          Rat rhs = rat_make(c_mul(budget.n, d.qi[0].d), c_mul(budget.d, d.qi[0].n));
          if (rat_is_neg(rhs)) return;
          // (z*pd - pn)^2 = rhs * pd^2, with rho = pn/pd
          I128 pn = rho.n, pd = rho.d;
          I128 num = c_mul(rhs.n, c_mul(pd, pd));
          if (num % rhs.d != 0) return;
          I128 A = num / rhs.d;
          if (A < 0) return;
          I128 s = 0;
          {
            // integer sqrt of A (A fits well below 2^126 here)
            I128 lo = 0, hi = 1;
            while (c_mul(hi, hi) < A) hi *= 2;
            while (lo < hi) {
              I128 mid = lo + (hi - lo + 1) / 2;
              if (c_mul(mid, mid) <= A)
                lo = mid;
              else
                hi = mid - 1;
            }
            s = lo;
          }
          if (c_mul(s, s) != A) return;
          int branches = (s == 0) ? 1 : 2;
          for (int which = 0; which < branches; ++which) {
            I128 sgn = (which == 0) ? s : -s;
            I128 zn = c_add(pn, sgn);
            if (zn % pd != 0) continue;
            I128 z = zn / pd;
            if (z < -R || z > R) continue;
            Coord zc = static_cast<Coord>(z);
            if (!admit(0, zc)) continue;
            zs[0] = zc;
            leaf(zs);
          }
          return;
        }
        Coord zc = rat_round(rho);
        auto walk = [&](Coord start, Coord dir) {
          for (Coord z = start; z >= -R && z <= R; z += dir) {
            Rat delta = rat_sub(Rat::of(z), rho);
            Rat contrib = rat_mul(d.qi[level], rat_mul(delta, delta));
            if (rat_cmp(contrib, budget) > 0) break;
            if (admit(level, z)) {
              zs[level] = z;
              auto sig2 = sig;
              Rat dz = Rat::of(z);
              for (int t = 0; t < level; ++t)
                sig2[t] = rat_add(sig2[t], rat_mul(d.mu[level][t], dz));
              rec(level - 1, rat_sub(budget, contrib), sig2);
            }
          }
        };
        walk(std::max<Coord>(zc, -R), 1);
        walk(std::min<Coord>(zc - 1, R), -1);
      };

  std::array<Rat, kE8> sig0;
  sig0.fill(Rat::of(0));
  rec(kE8 - 1, Rat::of(target), sig0);
}

}  // namespace

IsotropicClass make_isotropic(const DivisorClass& E, const Polarization& pol) {
  if (self_intersection(E) != 0)
    throw PreconditionError("isotropic class must have square zero");
  if (!is_primitive(E)) throw PreconditionError("isotropic class must be primitive");
  if (pairing(E, pol.h()) <= 0)
    throw PreconditionError("isotropic class must lie on the effective side");
  return IsotropicClass{E};
}

std::vector<DivisorClass> enumerate_slice(const SliceQuery& q) {
  if (self_intersection(q.C) <= 0)
    throw PreconditionError("slice query: C^2 must be positive");
  if (q.m < 1) throw PreconditionError("slice query: m must be >= 1");
  if (q.nmin > q.nmax) throw PreconditionError("slice query: nmin > nmax");
  SliceContext ctx(q.C, q.pol);
  return ctx.enumerate(q.m, q.nmin, q.nmax, q.effective_only);
}

PhiResult phi(const DivisorClass& C, const Polarization& pol,
              std::optional<Coord> ceiling_override) {
  if (!is_positive_cone(C, pol))
    throw PreconditionError("phi: class must lie in the positive cone");
  Coord ceiling = isqrt_floor(self_intersection(C));  // floor(sqrt(2g-2))
  if (ceiling_override && *ceiling_override > ceiling) ceiling = *ceiling_override;
  SliceContext ctx(C, pol);
  for (Coord m = 1; m <= ceiling; ++m) {
    auto classes = ctx.enumerate(m, 0, 0, true);
    PhiResult res;
    res.value = m;
    for (const auto& x : classes)
      if (gcd_coords(x) == 1) res.minimizers.push_back(IsotropicClass{x});
    if (!res.minimizers.empty()) return res;
  }
  throw InvariantViolation(
      "phi: no half-fiber found within the sqrt(2g-2) ceiling; enumeration is broken");
}

PhiResult brute_oracle_phi(const DivisorClass& C, Coord R, const Polarization& pol) {
  if (!is_positive_cone(C, pol))
    throw PreconditionError("phi oracle: class must lie in the positive cone");
  if (R < 1) throw PreconditionError("phi oracle: box radius must be >= 1");

  Vec10 v{};
  {
    const auto& g = gram_matrix();
    for (int i = 0; i < kRank; ++i) {
      Coord row = 0;
      for (int j = 0; j < kRank; ++j)
        row = checked_add(row, checked_mul(g[i][j], C.c[j]));
      v[i] = row;
    }
  }
  // Suffix bounds for the linear functional on the E8 block, used to prune
  // subtrees that cannot reach the current minimum.
  std::array<Coord, kE8 + 1> suffix{};
  for (int i = kE8 - 1; i >= 0; --i)
    suffix[i] = checked_add(suffix[i + 1],
                            checked_mul(R, v[i + 2] < 0 ? -v[i + 2] : v[i + 2]));

  // h-functional bounds: a U-pair whose best achievable x.h is nonpositive
  // has no admissible completion at all.
  Vec10 hv{};
  {
    const auto& g = gram_matrix();
    for (int i = 0; i < kRank; ++i) {
      Coord row = 0;
      for (int j = 0; j < kRank; ++j)
        row = checked_add(row, checked_mul(g[i][j], pol.h().c[j]));
      hv[i] = row;
    }
  }
  Coord h_e8_slack = 0;
  for (int i = 2; i < kRank; ++i)
    h_e8_slack = checked_add(h_e8_slack, checked_mul(R, hv[i] < 0 ? -hv[i] : hv[i]));

  struct PairCand {
    Coord a, b, target, base;
  };
  std::vector<PairCand> cands;
  for (Coord a = -R; a <= R; ++a) {
    for (Coord bb = -R; bb <= R; ++bb) {
      I128 t = static_cast<I128>(a) * bb;
      if (t < 0) continue;
      Coord hmax = checked_add(checked_add(checked_mul(hv[0], a), checked_mul(hv[1], bb)),
                               h_e8_slack);
      if (hmax <= 0) continue;
      Coord base = checked_add(checked_mul(v[0], a), checked_mul(v[1], bb));
      cands.push_back({a, bb, static_cast<Coord>(2 * t), base});
    }
  }
  // best-first over the optimistic bound, so pruning engages immediately
  std::sort(cands.begin(), cands.end(), [&](const PairCand& x, const PairCand& y) {
    return x.base - suffix[0] < y.base - suffix[0];
  });

  std::optional<Coord> best;
  std::vector<DivisorClass> best_set;

  for (const auto& cand : cands) {
    if (best && cand.base - suffix[0] > *best) break;  // sorted: nothing better follows
    Coord a = cand.a, bb = cand.b;

    // admit() prunes a subtree when even the most favourable assignment of
    // the not-yet-fixed coordinates cannot reach the current minimum.
    std::array<Coord, kE8> lin_partial{};
    auto admit = [&](int level, Coord z) {
      Coord part = checked_add(checked_mul(v[level + 2], z),
                               level + 1 < kE8 ? lin_partial[level + 1] : 0);
      lin_partial[level] = part;
      if (best) {
        Coord rest = checked_sub(suffix[0], suffix[level]);  // coords below `level`
        Coord lower = checked_sub(checked_add(cand.base, part), rest);
        if (lower > *best) return false;
      }
      return true;
    };

    e8_shell(cand.target, R, admit, [&](const std::array<Coord, kE8>& w) {
      DivisorClass x;
      x.c[0] = a;
      x.c[1] = bb;
      for (int i = 0; i < kE8; ++i) x.c[i + 2] = w[i];
      if (self_intersection(x) != 0)
        throw InvariantViolation("oracle produced a non-isotropic class");
      if (pairing(x, pol.h()) <= 0) return;
      if (gcd_coords(x) != 1) return;
      Coord val = pairing(C, x);
      if (!best || val < *best) {
        best = val;
        best_set.assign(1, x);
      } else if (val == *best) {
        best_set.push_back(x);
      }
    });
  }

  if (!best)
    throw InvariantViolation("phi oracle: box contains no admissible isotropic class");
  std::sort(best_set.begin(), best_set.end(), std::greater<DivisorClass>());
  best_set.erase(std::unique(best_set.begin(), best_set.end()), best_set.end());
  PhiResult res;
  res.value = *best;
  for (const auto& x : best_set) res.minimizers.push_back(IsotropicClass{x});
  return res;
}

PairDecompositions isotropic_pair_decompositions(const DivisorClass& L,
                                                 const Polarization& pol) {
  if (!in_cone_closure(L, pol))
    throw PreconditionError("pair decomposition: L must lie in the cone closure");
  Coord sq = self_intersection(L);
  if (sq != 0 && sq != 2)
    throw PreconditionError("pair decomposition: L^2 must be 0 or 2");
  PairDecompositions out;
  out.l_square = sq;
  if (sq == 2) {
    SliceQuery q;
    q.C = L;
    q.m = 1;
    q.nmin = 0;
    q.nmax = 0;
    q.effective_only = true;
    q.pol = pol;
    auto members = enumerate_slice(q);
    for (const auto& e1 : members) {
      if (gcd_coords(e1) != 1) continue;
      DivisorClass e2 = L - e1;
      if (self_intersection(e2) != 0) continue;
      if (pairing(e2, pol.h()) <= 0) continue;
      if (gcd_coords(e2) != 1) continue;
      DivisorClass hi = std::max(e1, e2);
      DivisorClass lo = std::min(e1, e2);
      out.pairs.emplace_back(hi, lo);
    }
    std::sort(out.pairs.begin(), out.pairs.end(), std::greater<>());
    out.pairs.erase(std::unique(out.pairs.begin(), out.pairs.end()), out.pairs.end());
    return out;
  }
  if (L.is_zero()) throw PreconditionError("pair decomposition: L must be nonzero");
  out.multiplicity = gcd_coords(L);
  DivisorClass p;
  for (int i = 0; i < kRank; ++i) p.c[i] = L.c[i] / out.multiplicity;
  out.primitive_part = p;
  out.doubled_half_fiber = (out.multiplicity == 2);
  return out;
}

}  // namespace enriques
