#pragma once

#include <optional>
#include <string>
#include <vector>

#include "enriques/lattice.hpp"
#include "enriques/slice_enum.hpp"

namespace enriques {

enum class LType { DoubledHalfFiber, TwoHalfFibers, Other };

enum class DecMode { Strict, Boundary };

/// Exact truth values of the inequality chain, recomputed from coordinates.
struct DecompositionFlags {
  bool l_sq_nonneg = false;       // L^2 >= 0
  bool m_sq_vs_d = false;         // M^2 > d (strict) / M^2 >= d (boundary)
  bool d_vs_l_sq = false;         // d > L^2 (strict) / d >= L^2 (boundary)
  bool ml_sq_vs_zero = false;     // (M-L)^2 > 0 (strict) / >= 0 (boundary)
  bool l_in_cone = false;         // L in the cone closure
  bool m_in_cone = false;         // M in the positive cone / closure
  bool ml_in_cone = false;        // M-L in the positive cone / closure
  bool l_fixed_component_free = false;  // |L| moves: L^2 > 0 or even isotropic multiple
};

struct Decomposition {
  DivisorClass L;
  DivisorClass M;
  Coord d = 0;  // L.M
  DecMode mode = DecMode::Strict;
  DecompositionFlags flags;
  LType l_type = LType::Other;
  Coord l_sq = 0;
  Coord m_sq = 0;
  Coord ml_sq = 0;
};

/// Numerical shadow of the rank-2 bundle attached to (C, A): rank 2,
/// c1 = C, c2 = deg A.
struct BundleInvariants {
  int rank = 2;
  DivisorClass c1;
  Coord c2 = 0;
  bool bogomolov_unstable = false;  // 4 c2 < c1^2
  Coord chi_endo = 0;               // 4 + c1^2 - 4 c2
};

struct SteinerReport {
  DivisorClass L;
  DivisorClass M;
  DivisorClass C;           // L + M
  Coord base_points_L = 0;  // L^2
  Coord base_points_M = 0;  // M^2
  Coord gon_upper = 0;      // L.M
  Coord cliff_candidate = 0;  // L.M - 2
  Coord dim_C = 0;          // C^2/2
  Coord stratum_codim = 0;  // L^2
};

struct Window {
  std::optional<Coord> lo;  // absent when no decomposition was found
  Coord hi = 0;
};

struct GonalityReport {
  DivisorClass C;
  Coord g = 0;
  Coord phi_value = 0;
  std::vector<IsotropicClass> phi_minimizers;
  std::optional<Coord> bn_cliff_ceiling;        // floor((g-1)/2), genus >= 4 only
  Coord bn_gon_ceiling = 0;                     // floor((g-2)/2) + 2
  std::optional<Coord> lemma_cliff_upper;       // 2 phi - 2, when 2 phi <= g-1
  std::optional<Coord> gon_upper_from_pencil;   // 2 phi, when 2 phi <= g-1
  std::string lemma_note;                       // reason when the above are absent
  std::optional<Coord> candidate_gon;           // min d over the decompositions
  std::optional<Window> window;
  std::string window_note;
  std::vector<Decomposition> decompositions;
};

/// Genus, phi and the ceiling bounds only; decomposition fields left empty.
GonalityReport bounds(const DivisorClass& C,
                      const Polarization& pol = Polarization::standard(),
                      std::optional<Coord> phi_ceiling = std::nullopt);

/// d_max used by gon_window when none is given: floor((g-2)/2) + 2.
Coord default_dmax(Coord g);

/// Complete list of decompositions C = L + M with L.M <= d_max satisfying the
/// strict chain (L^2 >= 0, M^2 > L.M > L^2, (M-L)^2 > 0, cone tests) when
/// 2 L.M < g-1, or the weak chain when 2 L.M = g-1.  |L| must carry a pencil,
/// so isotropic L of odd multiplicity (in particular a bare half-fiber) is
/// excluded.  Sorted by (d, descending-lex L).
std::vector<Decomposition> decompositions(const DivisorClass& C, Coord d_max,
                                          const Polarization& pol = Polarization::standard());

/// bounds() plus the decomposition search, the candidate minimal pencil
/// degree, and the jump window [candidate, min(candidate+2, floor((g-1)/2)+2)].
GonalityReport gon_window(const DivisorClass& C,
                          const Polarization& pol = Polarization::standard(),
                          std::optional<Coord> phi_ceiling = std::nullopt,
                          std::optional<Coord> d_max = std::nullopt);

enum class Conformance { Conforms, Violates, NotApplicable };

/// Checks a minimal decomposition against the unnodal structure result:
/// L must be a doubled half-fiber or a sum of two half-fibers meeting once.
Conformance classify_minimal_L(const Decomposition& dec, Coord minimal_d);

/// rank 2, c1 = C, c2 = d, instability and chi(End) from the exact formulas.
BundleInvariants bundle_invariants(const DivisorClass& C, Coord d);

SteinerReport steiner_report(const DivisorClass& L, const DivisorClass& M,
                             const Polarization& pol = Polarization::standard());

}  // namespace enriques
