#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "enriques/lattice.hpp"

namespace enriques {

/// Exact rational on 64-bit integers; all certificate values go through it so
/// half-integer comparisons never touch floating point.
struct Rational {
  Coord num = 0;
  Coord den = 1;

  Rational() = default;
  Rational(Coord n, Coord d);  // normalizes; throws on d == 0
  static Rational of(Coord v) { return Rational(v, 1); }

  bool is_integer() const { return den == 1; }
  std::string str() const;

  friend bool operator==(const Rational&, const Rational&) = default;
};

int compare(const Rational& a, const Rational& b);

/// Evaluates "lhs rel rhs" for rel in {"=", "<", "<=", ">", ">="}.
bool eval_relation(const Rational& lhs, const std::string& rel, const Rational& rhs);

enum class StepKind {
  Assertion,      // must hold for the chain to close
  Applicability,  // gates later steps; a false gate is not a failure
  Info            // evaluated for the record only
};

struct CertStep {
  std::string desc;
  std::string anchor;  // name of the mathematical fact the step instantiates
  Rational lhs;
  std::string rel;
  Rational rhs;
  bool holds = false;
  StepKind kind = StepKind::Assertion;
};

struct Verdict {
  enum class Kind { AllStepsHold, StepFails, OutOfNumericScope, InvariantViolation };
  Kind kind = Kind::AllStepsHold;
  int failing_index = -1;  // index into steps when kind == StepFails

  std::string str() const;
};

struct Certificate {
  std::string name;
  std::vector<std::pair<std::string, Rational>> parameters;
  std::vector<CertStep> steps;
  Verdict verdict;
};

/// Inequality chain excluding a smooth plane curve of degree d >= 6; the steps
/// whose truth depends on the actual value of phi are reported for every phi
/// up to the ceiling.  d = 5 is out of numeric scope (its exclusion is not an
/// integer chain) and is reported as such together with the failed gate.
Certificate plane_curve_certificate(Coord d);

/// Chain excluding Clifford dimension r >= 3 curves of the first kind
/// (genus 4r-2, Clifford index 2r-3); per-phi contradiction report plus
/// whether the phi ceiling alone closes the chain.
Certificate cliffdim_case1_certificate(Coord r);

/// Bounds for the residual case r >= 10: genus floor 2(r-1)^2 + 1 and, when a
/// genus is supplied, the admissible degree interval for the bundle computing
/// the Clifford index.
Certificate cliffdim_case2_bounds(Coord r, std::optional<Coord> g = std::nullopt);

/// Evaluates the phi ceiling, the contribution gate 2 phi <= g-1 and the
/// non-effectivity witness (2E - C).E < 0 for the actual minimizers of C.
Certificate lemma_bound_certificate(const DivisorClass& C,
                                    const Polarization& pol = Polarization::standard(),
                                    std::optional<Coord> phi_ceiling = std::nullopt);

}  // namespace enriques
