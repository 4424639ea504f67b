#include "enriques/gonality.hpp"

#include <algorithm>

namespace enriques {

namespace {

Coord floor_div2(Coord a) {
  // floor(a/2) also for negative a
  return (a >= 0) ? a / 2 : -((-a + 1) / 2);
}

LType l_type_of(const DivisorClass& L, Coord l_sq, const Polarization& pol) {
  if (l_sq == 0) {
    Coord m = gcd_coords(L);
    return (m == 2) ? LType::DoubledHalfFiber : LType::Other;
  }
  if (l_sq == 2) {
    auto pd = isotropic_pair_decompositions(L, pol);
    return pd.pairs.empty() ? LType::Other : LType::TwoHalfFibers;
  }
  return LType::Other;
}

// |L| carries a pencil with no fixed part exactly when L^2 > 0 or L is an
// even multiple of a half-fiber (a multiple of a genus-1 pencil class).
bool fixed_component_free(const DivisorClass& L, Coord l_sq) {
  if (l_sq > 0) return true;
  if (L.is_zero()) return false;
  return gcd_coords(L) % 2 == 0;
}

}  // namespace

Coord default_dmax(Coord g) { return floor_div2(g - 2) + 2; }

GonalityReport bounds(const DivisorClass& C, const Polarization& pol,
                      std::optional<Coord> phi_ceiling) {
  if (!is_positive_cone(C, pol))
    throw PreconditionError("bounds: class must lie in the positive cone");
  GonalityReport rep;
  rep.C = C;
  rep.g = genus(C);
  PhiResult pr = phi(C, pol, phi_ceiling);
  rep.phi_value = pr.value;
  rep.phi_minimizers = std::move(pr.minimizers);
  rep.bn_gon_ceiling = default_dmax(rep.g);
  bool applicable = 2 * rep.phi_value <= rep.g - 1;
  if (applicable) rep.gon_upper_from_pencil = 2 * rep.phi_value;
  if (rep.g >= 4) {
    if (applicable)
      rep.lemma_cliff_upper = 2 * rep.phi_value - 2;
    else
      rep.lemma_note = "2*phi exceeds g-1: the restricted pencil does not contribute";
    rep.bn_cliff_ceiling = floor_div2(rep.g - 1);
  } else {
    rep.lemma_note = "Clifford index is defined for genus >= 4 only";
  }
  return rep;
}

std::vector<Decomposition> decompositions(const DivisorClass& C, Coord d_max,
                                          const Polarization& pol) {
  if (!is_positive_cone(C, pol))
    throw PreconditionError("decompositions: class must lie in the positive cone");
  Coord c_sq = self_intersection(C);
  Coord g = c_sq / 2 + 1;
  std::vector<Decomposition> out;
  // modes only exist for 2d <= g-1, i.e. 4d <= C^2
  Coord d_cap = std::min(d_max, floor_div2(g - 1));
  for (Coord d = 1; d <= d_cap; ++d) {
    bool boundary = (4 * d == c_sq);
    for (Coord t = 0; t <= d; t += 2) {
      if (!boundary && t >= d) break;  // strict chain needs L^2 < d
      SliceQuery q;
      q.C = C;
      q.m = d + t;  // L.C = d + L^2
      q.nmin = t;
      q.nmax = t;
      q.effective_only = true;
      q.pol = pol;
      for (const auto& L : enumerate_slice(q)) {
        DivisorClass M = C - L;
        Coord l_sq = t;
        Coord m_sq = self_intersection(M);
        DivisorClass ML = M - L;
        Coord ml_sq = self_intersection(ML);
        Decomposition dec;
        dec.L = L;
        dec.M = M;
        dec.d = d;
        dec.mode = boundary ? DecMode::Boundary : DecMode::Strict;
        dec.l_sq = l_sq;
        dec.m_sq = m_sq;
        dec.ml_sq = ml_sq;
        DecompositionFlags& fl = dec.flags;
        fl.l_sq_nonneg = (l_sq >= 0);
        fl.l_in_cone = in_cone_closure(L, pol) && !L.is_zero();
        fl.l_fixed_component_free = fixed_component_free(L, l_sq);
        if (!boundary) {
          fl.m_sq_vs_d = (m_sq > d);
          fl.d_vs_l_sq = (d > l_sq);
          fl.ml_sq_vs_zero = (ml_sq > 0);
          fl.m_in_cone = is_positive_cone(M, pol);
          fl.ml_in_cone = is_positive_cone(ML, pol);
        } else {
          fl.m_sq_vs_d = (m_sq >= d);
          fl.d_vs_l_sq = (d >= l_sq);
          fl.ml_sq_vs_zero = (ml_sq >= 0);
          fl.m_in_cone = in_cone_closure(M, pol) && !M.is_zero();
          fl.ml_in_cone = in_cone_closure(ML, pol);
        }
        if (!(fl.l_sq_nonneg && fl.m_sq_vs_d && fl.d_vs_l_sq && fl.ml_sq_vs_zero &&
              fl.l_in_cone && fl.m_in_cone && fl.ml_in_cone &&
              fl.l_fixed_component_free))
          continue;
        dec.l_type = l_type_of(L, l_sq, pol);
        out.push_back(std::move(dec));
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const Decomposition& a, const Decomposition& b) {
    if (a.d != b.d) return a.d < b.d;
    return a.L > b.L;
  });
  return out;
}

GonalityReport gon_window(const DivisorClass& C, const Polarization& pol,
                          std::optional<Coord> phi_ceiling,
                          std::optional<Coord> d_max) {
  GonalityReport rep = bounds(C, pol, phi_ceiling);
  Coord dm = d_max.value_or(rep.bn_gon_ceiling);
  rep.decompositions = decompositions(C, dm, pol);
  if (!rep.decompositions.empty()) {
    Coord cand = rep.decompositions.front().d;  // sorted by d
    rep.candidate_gon = cand;
    Window w;
    w.lo = cand;
    // Theorem bound candidate+2, capped by the Brill-Noether gonality bound
    // floor((g-1)/2) + 2.
    w.hi = std::min(cand + 2, floor_div2(rep.g - 1) + 2);
    rep.window = w;
    rep.window_note =
        "candidate only: the minimum over the decompositions bounds gon(|C|) "
        "from above; attainment is not asserted";
  } else {
    Window w;
    w.hi = rep.bn_gon_ceiling;
    rep.window = w;
    rep.window_note =
        "no decomposition with 2d <= g-1 exists below the search bound; only "
        "the Brill-Noether ceiling applies";
  }
  return rep;
}

Conformance classify_minimal_L(const Decomposition& dec, Coord minimal_d) {
  if (dec.d != minimal_d) return Conformance::NotApplicable;
  if (dec.l_type == LType::DoubledHalfFiber || dec.l_type == LType::TwoHalfFibers)
    return Conformance::Conforms;
  return Conformance::Violates;
}

BundleInvariants bundle_invariants(const DivisorClass& C, Coord d) {
  if (d < 1) throw PreconditionError("bundle_invariants: degree must be >= 1");
  BundleInvariants bi;
  bi.rank = 2;
  bi.c1 = C;
  bi.c2 = d;
  Coord c1_sq = self_intersection(C);
  bi.bogomolov_unstable = (4 * d < c1_sq);
  bi.chi_endo = checked_sub(checked_add(4, c1_sq), checked_mul(4, d));
  return bi;
}

SteinerReport steiner_report(const DivisorClass& L, const DivisorClass& M,
                             const Polarization& pol) {
  if (L.is_zero() || M.is_zero())
    throw PreconditionError("steiner_report: L and M must be nonzero");
  if (!is_nef(L, pol) || !is_nef(M, pol))
    throw PreconditionError("steiner_report: L and M must be nef");
  Coord lm = pairing(L, M);
  if (lm < 1) throw PreconditionError("steiner_report: L.M must be >= 1");
  SteinerReport rep;
  rep.L = L;
  rep.M = M;
  rep.C = L + M;
  rep.base_points_L = self_intersection(L);
  rep.base_points_M = self_intersection(M);
  rep.gon_upper = lm;
  rep.cliff_candidate = lm - 2;
  rep.dim_C = self_intersection(rep.C) / 2;
  rep.stratum_codim = rep.base_points_L;
  if (rep.stratum_codim > rep.dim_C)
    throw PreconditionError(
        "steiner_report: stratum codimension exceeds dim|C|; the sweep has no room");
  return rep;
}

}  // namespace enriques
