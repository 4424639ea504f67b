#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "enriques/lattice.hpp"

namespace enriques {

/// Primitive isotropic class on the effective side: the half-fiber E of a
/// genus-1 pencil |2E|.
struct IsotropicClass {
  DivisorClass cls;

  /// Degree of the class against a query class: C.E, computed on demand.
  Coord degree_vs(const DivisorClass& C) const { return pairing(C, cls); }

  friend bool operator==(const IsotropicClass&, const IsotropicClass&) = default;
};

/// Validates the half-fiber invariants (isotropic, primitive, positive
/// against h) and wraps the class.
IsotropicClass make_isotropic(const DivisorClass& E,
                              const Polarization& pol = Polarization::standard());

struct SliceQuery {
  DivisorClass C;        // C^2 > 0
  Coord m = 1;           // target x.C, >= 1
  Coord nmin = 0;        // target range for x^2 (even endpoints)
  Coord nmax = 0;
  bool effective_only = true;
  Polarization pol = Polarization::standard();
};

/// Complete, duplicate-free list of all lattice x with x.C = m and
/// nmin <= x^2 <= nmax, optionally restricted to the closure of the positive
/// cone.  The slice is a coset of the rank-9 sublattice orthogonal to C,
/// negative definite by the Hodge index theorem; enumeration is exact-integer
/// branch-and-bound over that definite form with an affine shift.
/// Results are sorted in descending lexicographic coordinate order.
std::vector<DivisorClass> enumerate_slice(const SliceQuery& q);

struct PhiResult {
  Coord value = 0;
  std::vector<IsotropicClass> minimizers;  // all attaining classes, sorted
};

/// Phi(C) = min C.E over primitive isotropic effective E.  Scans degrees
/// m = 1..floor(sqrt(2g-2)); the ceiling is theorem-backed, so an empty scan
/// raises InvariantViolation.  ceiling_override may only raise the bound.
PhiResult phi(const DivisorClass& C,
              const Polarization& pol = Polarization::standard(),
              std::optional<Coord> ceiling_override = std::nullopt);

/// Independent test oracle: same contract as phi but restricted to the
/// coordinate box [-R, R]^10 and computed by direct scan of the box, sharing
/// no machinery with enumerate_slice.  Complete only within the box; intended
/// for small R.
PhiResult brute_oracle_phi(const DivisorClass& C, Coord R,
                           const Polarization& pol = Polarization::standard());

/// Decompositions of a class L with L^2 in {0, 2} into half-fiber data.
struct PairDecompositions {
  Coord l_square = 0;

  // L^2 = 2: all unordered pairs of primitive isotropic effective classes
  // with E' + E'' = L (then E'.E'' = 1 automatically).
  std::vector<std::pair<DivisorClass, DivisorClass>> pairs;

  // L^2 = 0: L = multiplicity * primitive_part.
  Coord multiplicity = 0;
  DivisorClass primitive_part;
  bool doubled_half_fiber = false;  // multiplicity == 2
};

PairDecompositions isotropic_pair_decompositions(
    const DivisorClass& L, const Polarization& pol = Polarization::standard());

}  // namespace enriques
