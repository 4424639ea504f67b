#include "enriques/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace enriques {

namespace {

using I128 = __int128;

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

// Exact rational on 128-bit integers; enough headroom for 10x10 congruence
// reduction of a matrix with entries in {-2,...,2}.
struct Rat {
  I128 n = 0;
  I128 d = 1;

  static Rat of(I128 v) { return Rat{v, 1}; }

  void normalize() {
    if (d < 0) {
      n = -n;
      d = -d;
    }
    I128 g = gcd128(n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    if (n == 0) d = 1;
  }
};

Rat rat_sub(const Rat& a, const Rat& b) {
  Rat r{a.n * b.d - b.n * a.d, a.d * b.d};
  r.normalize();
  return r;
}

Rat rat_mul(const Rat& a, const Rat& b) {
  Rat r{a.n * b.n, a.d * b.d};
  r.normalize();
  return r;
}

Rat rat_div(const Rat& a, const Rat& b) {
  if (b.n == 0) throw InvariantViolation("rational division by zero");
  Rat r{a.n * b.d, a.d * b.n};
  r.normalize();
  return r;
}

Rat rat_add(const Rat& a, const Rat& b) {
  Rat r{a.n * b.d + b.n * a.d, a.d * b.d};
  r.normalize();
  return r;
}

std::array<std::array<Coord, kRank>, kRank> build_gram() {
  std::array<std::array<Coord, kRank>, kRank> g{};
  g[0][1] = g[1][0] = 1;
  for (int i = 2; i < kRank; ++i) g[i][i] = -2;
  // E8 diagram edges on a1..a8 (1-based): arms of lengths 4, 2, 1 at a5.
  const int edges[7][2] = {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {5, 8}};
  for (const auto& e : edges) {
    int i = e[0] + 1;  // a_k lives at index k+1
    int j = e[1] + 1;
    g[i][j] = g[j][i] = 1;
  }
  return g;
}

}  // namespace

Coord checked_add(Coord a, Coord b) {
  Coord r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
  return r;
}

Coord checked_sub(Coord a, Coord b) {
  Coord r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in subtraction");
  return r;
}

Coord checked_mul(Coord a, Coord b) {
  Coord r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
  return r;
}

Coord checked_neg(Coord a) { return checked_sub(0, a); }

bool DivisorClass::is_zero() const {
  return std::all_of(c.begin(), c.end(), [](Coord v) { return v == 0; });
}

DivisorClass operator+(const DivisorClass& a, const DivisorClass& b) {
  DivisorClass r;
  for (int i = 0; i < kRank; ++i) r.c[i] = checked_add(a.c[i], b.c[i]);
  return r;
}

DivisorClass operator-(const DivisorClass& a, const DivisorClass& b) {
  DivisorClass r;
  for (int i = 0; i < kRank; ++i) r.c[i] = checked_sub(a.c[i], b.c[i]);
  return r;
}

DivisorClass operator-(const DivisorClass& a) {
  DivisorClass r;
  for (int i = 0; i < kRank; ++i) r.c[i] = checked_neg(a.c[i]);
  return r;
}

DivisorClass operator*(Coord k, const DivisorClass& a) {
  DivisorClass r;
  for (int i = 0; i < kRank; ++i) r.c[i] = checked_mul(k, a.c[i]);
  return r;
}

DivisorClass E1() {
  DivisorClass r;
  r.c[0] = 1;
  return r;
}

DivisorClass E2() {
  DivisorClass r;
  r.c[1] = 1;
  return r;
}

DivisorClass alpha(int k) {
  if (k < 1 || k > 8) throw PreconditionError("alpha index must be in 1..8");
  DivisorClass r;
  r.c[k + 1] = 1;
  return r;
}

const std::array<std::array<Coord, kRank>, kRank>& gram_matrix() {
  static const auto g = build_gram();
  return g;
}

Coord pairing(const DivisorClass& a, const DivisorClass& b) {
  const auto& g = gram_matrix();
  Coord total = 0;
  for (int i = 0; i < kRank; ++i) {
    if (a.c[i] == 0) continue;
    Coord row = 0;
    for (int j = 0; j < kRank; ++j) {
      if (g[i][j] == 0 || b.c[j] == 0) continue;
      row = checked_add(row, checked_mul(g[i][j], b.c[j]));
    }
    total = checked_add(total, checked_mul(a.c[i], row));
  }
  return total;
}

Coord self_intersection(const DivisorClass& a) { return pairing(a, a); }

Polarization::Polarization(const DivisorClass& h) : h_(h) {
  if (self_intersection(h) <= 0)
    throw PreconditionError("polarization must have positive self-intersection");
}

const Polarization& Polarization::standard() {
  static const Polarization p(E1() + E2());
  return p;
}

Coord genus(const DivisorClass& C) {
  Coord sq = self_intersection(C);
  if (sq < 0) throw PreconditionError("genus: C^2 must be nonnegative");
  if (sq % 2 != 0) throw InvariantViolation("genus: odd self-intersection in an even lattice");
  return sq / 2 + 1;
}

Coord chi(const DivisorClass& D) {
  Coord sq = self_intersection(D);
  if (sq % 2 != 0) throw InvariantViolation("chi: odd self-intersection in an even lattice");
  return sq / 2 + 1;
}

Coord dim_linear_system(const DivisorClass& D, const Polarization& pol) {
  Coord sq = self_intersection(D);
  if (!is_nef(D, pol) || sq <= 0)
    throw PreconditionError("property-B inapplicable: need D nef with D^2 > 0");
  return sq / 2;
}

bool is_positive_cone(const DivisorClass& D, const Polarization& pol) {
  return self_intersection(D) > 0 && pairing(D, pol.h()) > 0;
}

bool in_cone_closure(const DivisorClass& D, const Polarization& pol) {
  if (D.is_zero()) return true;
  return self_intersection(D) >= 0 && pairing(D, pol.h()) > 0;
}

bool is_nef(const DivisorClass& D, const Polarization& pol) {
  return in_cone_closure(D, pol);
}

Ampleness ample_by_criterion(const DivisorClass& D, const Polarization& pol) {
  Coord sq = self_intersection(D);
  if (!is_nef(D, pol) || sq <= 0) return Ampleness::NotAmple;
  if (sq >= 6) return Ampleness::Ample;
  return Ampleness::UnknownByCriterion;
}

SystemClass classify_system(const DivisorClass& D, const Polarization& pol) {
  if (!is_nef(D, pol)) throw PreconditionError("classify_system: D must be nef");
  SystemClass out;
  Coord sq = self_intersection(D);
  if (D.is_zero()) {
    out.kind = SystemClass::Kind::Invalid;
    return out;
  }
  if (sq > 0) {
    out.kind = SystemClass::Kind::BigIrreducible;
    out.dim = sq / 2;
    return out;
  }
  out.kind = SystemClass::Kind::Isotropic;
  out.multiplicity = gcd_coords(D);
  DivisorClass p;
  for (int i = 0; i < kRank; ++i) p.c[i] = D.c[i] / out.multiplicity;
  out.primitive_part = p;
  return out;
}

Coord gcd_coords(const DivisorClass& D) {
  Coord g = 0;
  for (Coord v : D.c) g = std::gcd(g, v);
  return g;
}

bool is_primitive(const DivisorClass& D) {
  if (D.is_zero()) throw PreconditionError("is_primitive: zero class");
  return gcd_coords(D) == 1;
}

Coord divisibility(const DivisorClass& D) {
  const auto& g = gram_matrix();
  Coord d = 0;
  for (int i = 0; i < kRank; ++i) {
    Coord row = 0;
    for (int j = 0; j < kRank; ++j)
      row = checked_add(row, checked_mul(g[i][j], D.c[j]));
    d = std::gcd(d, row);
  }
  return d;
}

Coord isqrt_floor(Coord n) {
  if (n < 0) throw PreconditionError("isqrt_floor: negative argument");
  if (n == 0) return 0;
  Coord r = static_cast<Coord>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

Coord gram_determinant() {
  // Bareiss fraction-free elimination on a copy of the Gram matrix.
  I128 m[kRank][kRank];
  const auto& g = gram_matrix();
  for (int i = 0; i < kRank; ++i)
    for (int j = 0; j < kRank; ++j) m[i][j] = g[i][j];
  I128 prev = 1;
  int sign = 1;
  for (int k = 0; k < kRank - 1; ++k) {
    if (m[k][k] == 0) {
      int p = -1;
      for (int i = k + 1; i < kRank; ++i)
        if (m[i][k] != 0) {
          p = i;
          break;
        }
      if (p < 0) return 0;
      for (int j = 0; j < kRank; ++j) std::swap(m[k][j], m[p][j]);
      sign = -sign;
    }
    for (int i = k + 1; i < kRank; ++i)
      for (int j = k + 1; j < kRank; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  I128 det = sign * m[kRank - 1][kRank - 1];
  return static_cast<Coord>(det);
}

std::array<int, 3> gram_signature() {
  // Congruence diagonalization over Q (Lagrange reduction).  When every
  // remaining diagonal entry vanishes, a basis change x_i -> x_i + x_j
  // exposes a nonzero diagonal entry.
  Rat a[kRank][kRank];
  const auto& g = gram_matrix();
  for (int i = 0; i < kRank; ++i)
    for (int j = 0; j < kRank; ++j) a[i][j] = Rat::of(g[i][j]);
  bool used[kRank] = {};
  int pos = 0, neg = 0, zero = 0;
  for (int step = 0; step < kRank; ++step) {
    int piv = -1;
    for (int i = 0; i < kRank; ++i)
      if (!used[i] && a[i][i].n != 0) {
        piv = i;
        break;
      }
    if (piv < 0) {
      int bi = -1, bj = -1;
      for (int i = 0; i < kRank && bi < 0; ++i)
        for (int j = 0; j < kRank; ++j)
          if (!used[i] && !used[j] && i != j && a[i][j].n != 0) {
            bi = i;
            bj = j;
            break;
          }
      if (bi < 0) {
        for (int i = 0; i < kRank; ++i)
          if (!used[i]) ++zero;
        break;
      }
      // row/col operation: e_bi += e_bj
      for (int k = 0; k < kRank; ++k) a[bi][k] = rat_add(a[bi][k], a[bj][k]);
      for (int k = 0; k < kRank; ++k) a[k][bi] = rat_add(a[k][bi], a[k][bj]);
      piv = bi;
    }
    if (a[piv][piv].n > 0)
      ++pos;
    else
      ++neg;
    for (int i = 0; i < kRank; ++i) {
      if (used[i] || i == piv || a[i][piv].n == 0) continue;
      Rat f = rat_div(a[i][piv], a[piv][piv]);
      for (int k = 0; k < kRank; ++k)
        a[i][k] = rat_sub(a[i][k], rat_mul(f, a[piv][k]));
      for (int k = 0; k < kRank; ++k)
        a[k][i] = rat_sub(a[k][i], rat_mul(f, a[k][piv]));
    }
    used[piv] = true;
  }
  return {pos, neg, zero};
}

}  // namespace enriques
