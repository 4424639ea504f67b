#include "enriques/certificates.hpp"

#include <numeric>

#include "enriques/slice_enum.hpp"

namespace enriques {

Rational::Rational(Coord n, Coord d) {
  if (d == 0) throw PreconditionError("rational with zero denominator");
  if (d < 0) {
    n = checked_neg(n);
    d = checked_neg(d);
  }
  Coord g = std::gcd(n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  num = n;
  den = d;
}

std::string Rational::str() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

int compare(const Rational& a, const Rational& b) {
  Coord lhs = checked_mul(a.num, b.den);
  Coord rhs = checked_mul(b.num, a.den);
  return lhs < rhs ? -1 : (lhs > rhs ? 1 : 0);
}

bool eval_relation(const Rational& lhs, const std::string& rel, const Rational& rhs) {
  int c = compare(lhs, rhs);
  if (rel == "=") return c == 0;
  if (rel == "<") return c < 0;
  if (rel == "<=") return c <= 0;
  if (rel == ">") return c > 0;
  if (rel == ">=") return c >= 0;
  throw PreconditionError("unknown relation: " + rel);
}

std::string Verdict::str() const {
  switch (kind) {
    case Kind::AllStepsHold:
      return "all-steps-hold";
    case Kind::StepFails:
      return "step-fails(" + std::to_string(failing_index) + ")";
    case Kind::OutOfNumericScope:
      return "out-of-numeric-scope";
    case Kind::InvariantViolation:
      return "invariant-violation";
  }
  return "?";
}

namespace {

CertStep make_step(std::string desc, std::string anchor, Rational lhs, std::string rel,
                   Rational rhs, StepKind kind) {
  CertStep s;
  s.desc = std::move(desc);
  s.anchor = std::move(anchor);
  s.lhs = lhs;
  s.rel = std::move(rel);
  s.rhs = rhs;
  s.kind = kind;
  s.holds = eval_relation(s.lhs, s.rel, s.rhs);
  return s;
}

void finish_verdict(Certificate& cert) {
  for (size_t i = 0; i < cert.steps.size(); ++i) {
    if (cert.steps[i].kind == StepKind::Assertion && !cert.steps[i].holds) {
      cert.verdict.kind = Verdict::Kind::StepFails;
      cert.verdict.failing_index = static_cast<int>(i);
      return;
    }
  }
  cert.verdict.kind = Verdict::Kind::AllStepsHold;
}

}  // namespace

Certificate plane_curve_certificate(Coord d) {
  if (d < 5) throw PreconditionError("plane-curve certificate: degree must be >= 5");
  Certificate cert;
  cert.name = "plane-curve";
  Coord g = d * (d - 3) / 2 + 1;
  Coord ceiling = isqrt_floor(d * (d - 3));
  cert.parameters.emplace_back("d", Rational::of(d));
  cert.parameters.emplace_back("g", Rational::of(g));
  cert.parameters.emplace_back("phi_ceiling", Rational::of(ceiling));

  cert.steps.push_back(make_step("floor(sqrt(d(d-3))) <= d-2", "phi-ceiling",
                                 Rational::of(ceiling), "<=", Rational::of(d - 2),
                                 StepKind::Assertion));
  cert.steps.push_back(make_step("d-2 <= d(d-3)/4", "clifford-contribution-gate",
                                 Rational::of(d - 2), "<=", Rational(d * (d - 3), 4),
                                 StepKind::Applicability));
  if (d == 5) {
    // The degree-5 exclusion is not an integer inequality chain; only the
    // failed gate is reported.
    cert.verdict.kind = Verdict::Kind::OutOfNumericScope;
    return cert;
  }
  cert.parameters.emplace_back("plane_cliff", Rational::of(d - 4));
  for (Coord k = 1; k <= ceiling; ++k) {
    cert.steps.push_back(make_step(
        "2*phi-2 <= d-4 at phi=" + std::to_string(k), "pencil-restriction",
        Rational::of(2 * k - 2), "<=", Rational::of(d - 4), StepKind::Assertion));
  }
  cert.steps.push_back(make_step("ceiling alone closes the chain", "pencil-restriction",
                                 Rational::of(2 * ceiling - 2), "<=", Rational::of(d - 4),
                                 StepKind::Info));
  finish_verdict(cert);
  return cert;
}

Certificate cliffdim_case1_certificate(Coord r) {
  if (r < 3) throw PreconditionError("case-1 certificate: r must be >= 3");
  Certificate cert;
  cert.name = "cliffdim-case1";
  Coord g = 4 * r - 2;
  Coord cliff = 2 * r - 3;
  Coord ceiling = isqrt_floor(2 * g - 2);
  cert.parameters.emplace_back("r", Rational::of(r));
  cert.parameters.emplace_back("g", Rational::of(g));
  cert.parameters.emplace_back("cliff", Rational::of(cliff));
  cert.parameters.emplace_back("phi_ceiling", Rational::of(ceiling));

  cert.steps.push_back(make_step("2r-3 = floor((g-1)/2) - 1", "elms-case1",
                                 Rational::of(cliff), "=",
                                 Rational::of((g - 1) / 2 - 1), StepKind::Assertion));
  for (Coord k = 1; k <= ceiling; ++k) {
    cert.steps.push_back(make_step(
        "2*phi-2 < 2r-3 at phi=" + std::to_string(k), "pencil-restriction",
        Rational::of(2 * k - 2), "<", Rational::of(cliff), StepKind::Assertion));
  }
  cert.steps.push_back(make_step("ceiling alone forces the contradiction",
                                 "pencil-restriction", Rational::of(2 * ceiling - 2),
                                 "<", Rational::of(cliff), StepKind::Info));
  finish_verdict(cert);
  return cert;
}

Certificate cliffdim_case2_bounds(Coord r, std::optional<Coord> g) {
  if (r < 10)
    throw PreconditionError(
        "case-2 certificate: the residual case requires Clifford dimension r >= 10");
  Certificate cert;
  cert.name = "cliffdim-case2";
  Coord g_min = 2 * (r - 1) * (r - 1) + 1;
  cert.parameters.emplace_back("r", Rational::of(r));
  cert.parameters.emplace_back("g_min", Rational::of(g_min));

  cert.steps.push_back(make_step("4r-6 <= 2*floor(sqrt(2*g_min-2))-2", "phi-ceiling",
                                 Rational::of(4 * r - 6), "<=",
                                 Rational::of(2 * isqrt_floor(2 * g_min - 2) - 2),
                                 StepKind::Assertion));
  cert.steps.push_back(make_step("g_min >= 163", "elms-case2-genus-floor",
                                 Rational::of(g_min), ">=", Rational::of(163),
                                 StepKind::Assertion));
  if (g) {
    cert.parameters.emplace_back("g", Rational::of(*g));
    cert.steps.push_back(make_step("g >= g_min", "elms-case2-genus-floor",
                                   Rational::of(*g), ">=", Rational::of(g_min),
                                   StepKind::Assertion));
    Coord lo = 6 * r - 6;
    Coord hi = 2 * r - 2 + 2 * isqrt_floor(2 * *g - 2);
    cert.parameters.emplace_back("d_lo", Rational::of(lo));
    cert.parameters.emplace_back("d_hi", Rational::of(hi));
    cert.steps.push_back(make_step("degree interval nonempty: 6r-6 <= 2r-2+2*floor(sqrt(2g-2))",
                                   "elms-case2-degree-floor", Rational::of(lo), "<=",
                                   Rational::of(hi), StepKind::Assertion));
  }
  finish_verdict(cert);
  return cert;
}

Certificate lemma_bound_certificate(const DivisorClass& C, const Polarization& pol,
                                    std::optional<Coord> phi_ceiling) {
  if (!is_positive_cone(C, pol))
    throw PreconditionError("lemma certificate: class must lie in the positive cone");
  Certificate cert;
  cert.name = "lemma-bound";
  Coord g = genus(C);
  Coord ceiling = isqrt_floor(2 * g - 2);
  PhiResult pr = phi(C, pol, phi_ceiling);
  cert.parameters.emplace_back("g", Rational::of(g));
  cert.parameters.emplace_back("phi", Rational::of(pr.value));
  cert.parameters.emplace_back("phi_ceiling", Rational::of(ceiling));

  cert.steps.push_back(make_step("phi <= floor(sqrt(2g-2))", "phi-ceiling",
                                 Rational::of(pr.value), "<=", Rational::of(ceiling),
                                 StepKind::Assertion));
  bool ceiling_ok = cert.steps.back().holds;

  CertStep gate = make_step("2*phi <= g-1", "clifford-contribution-gate",
                            Rational::of(2 * pr.value), "<=", Rational::of(g - 1),
                            StepKind::Applicability);
  bool applicable = gate.holds;
  cert.steps.push_back(std::move(gate));
  if (applicable) {
    cert.steps.push_back(make_step("clifford upper bound from the pencil: 2*phi-2",
                                   "clifford-vs-gonality",
                                   Rational::of(2 * pr.value - 2), "=",
                                   Rational::of(2 * pr.value - 2), StepKind::Info));
  }
  for (const auto& E : pr.minimizers) {
    DivisorClass witness = 2 * E.cls - C;
    cert.steps.push_back(make_step("(2E-C).E < 0 for minimizer E",
                                   "non-effectivity-witness",
                                   Rational::of(pairing(witness, E.cls)), "<",
                                   Rational::of(0), StepKind::Assertion));
  }
  if (!ceiling_ok) {
    cert.verdict.kind = Verdict::Kind::InvariantViolation;
    return cert;
  }
  finish_verdict(cert);
  return cert;
}

}  // namespace enriques
