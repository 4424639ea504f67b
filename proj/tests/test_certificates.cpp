#include <doctest.h>

#include "enriques/certificates.hpp"
#include "enriques/slice_enum.hpp"

using namespace enriques;

namespace {

const CertStep* find_step(const Certificate& c, const std::string& needle) {
  for (const auto& s : c.steps)
    if (s.desc.find(needle) != std::string::npos) return &s;
  return nullptr;
}

Rational param(const Certificate& c, const std::string& name) {
  for (const auto& [k, v] : c.parameters)
    if (k == name) return v;
  throw std::runtime_error("missing parameter " + name);
}

}  // namespace

TEST_CASE("exact rationals") {
  CHECK(Rational(10, 4) == Rational(5, 2));
  CHECK(Rational(10, 4).str() == "5/2");
  CHECK(Rational(-3, -6) == Rational(1, 2));
  CHECK(Rational(3, -6).str() == "-1/2");
  CHECK(compare(Rational::of(3), Rational(5, 2)) > 0);
  CHECK(eval_relation(Rational::of(3), "<=", Rational(5, 2)) == false);
  CHECK(eval_relation(Rational(9, 2), ">=", Rational(9, 2)));
  CHECK_THROWS_AS(Rational(1, 0), PreconditionError);
  CHECK_THROWS_AS(eval_relation(Rational::of(1), "!=", Rational::of(2)), PreconditionError);
}

TEST_CASE("plane-curve certificate at degree 6") {
  auto cert = plane_curve_certificate(6);
  CHECK(param(cert, "g") == Rational::of(10));
  auto* ceil_step = find_step(cert, "floor(sqrt(d(d-3)))");
  REQUIRE(ceil_step);
  CHECK(ceil_step->lhs == Rational::of(4));
  CHECK(ceil_step->rhs == Rational::of(4));
  CHECK(ceil_step->holds);
  auto* gate = find_step(cert, "d-2 <= d(d-3)/4");
  REQUIRE(gate);
  CHECK(gate->lhs == Rational::of(4));
  CHECK(gate->rhs == Rational(9, 2));
  CHECK(gate->holds);
  // per-phi steps: hold for phi <= 2, fail for phi in [3,4]
  for (Coord k = 1; k <= 4; ++k) {
    auto* st = find_step(cert, "at phi=" + std::to_string(k));
    REQUIRE(st);
    CHECK(st->holds == (k <= 2));
  }
  CHECK(cert.verdict.kind == Verdict::Kind::StepFails);
}

TEST_CASE("plane-curve certificate at degree 5 is out of numeric scope") {
  auto cert = plane_curve_certificate(5);
  CHECK(cert.verdict.kind == Verdict::Kind::OutOfNumericScope);
  auto* gate = find_step(cert, "d-2 <= d(d-3)/4");
  REQUIRE(gate);
  CHECK(gate->lhs == Rational::of(3));
  CHECK(gate->rhs == Rational(5, 2));
  CHECK_FALSE(gate->holds);
}

TEST_CASE("plane-curve certificate at degree 10") {
  auto cert = plane_curve_certificate(10);
  CHECK(param(cert, "g") == Rational::of(36));
  auto* ceil_step = find_step(cert, "floor(sqrt(d(d-3)))");
  REQUIRE(ceil_step);
  CHECK(ceil_step->lhs == Rational::of(8));  // floor(sqrt(70))
  CHECK(ceil_step->holds);
  auto* gate = find_step(cert, "d-2 <= d(d-3)/4");
  REQUIRE(gate);
  CHECK(gate->rhs == Rational(35, 2));  // 17.5
  CHECK(gate->holds);
}

TEST_CASE("plane-curve certificate rejects small degrees") {
  CHECK_THROWS_AS(plane_curve_certificate(4), PreconditionError);
}

TEST_CASE("clifford dimension case-1 certificates") {
  auto c3 = cliffdim_case1_certificate(3);
  CHECK(param(c3, "g") == Rational::of(10));
  CHECK(param(c3, "cliff") == Rational::of(3));
  CHECK(param(c3, "phi_ceiling") == Rational::of(4));
  for (Coord k = 1; k <= 4; ++k) {
    auto* st = find_step(c3, "at phi=" + std::to_string(k));
    REQUIRE(st);
    CHECK(st->holds == (k <= 2));
  }
  auto* suff = find_step(c3, "ceiling alone");
  REQUIRE(suff);
  CHECK_FALSE(suff->holds);
  CHECK(c3.verdict.kind == Verdict::Kind::StepFails);

  auto c9 = cliffdim_case1_certificate(9);
  CHECK(param(c9, "g") == Rational::of(34));
  CHECK(param(c9, "cliff") == Rational::of(15));
  CHECK(param(c9, "phi_ceiling") == Rational::of(8));
  auto* suff9 = find_step(c9, "ceiling alone");
  REQUIRE(suff9);
  CHECK(suff9->holds);  // 14 < 15
  CHECK(c9.verdict.kind == Verdict::Kind::AllStepsHold);

  CHECK_THROWS_AS(cliffdim_case1_certificate(2), PreconditionError);
}

TEST_CASE("clifford dimension case-2 bounds") {
  auto c10 = cliffdim_case2_bounds(10);
  CHECK(param(c10, "g_min") == Rational::of(163));
  CHECK(c10.verdict.kind == Verdict::Kind::AllStepsHold);

  auto c10g = cliffdim_case2_bounds(10, 163);
  CHECK(param(c10g, "d_lo") == Rational::of(54));
  CHECK(param(c10g, "d_hi") == Rational::of(54));
  CHECK(c10g.verdict.kind == Verdict::Kind::AllStepsHold);

  auto c12 = cliffdim_case2_bounds(12, 243);
  CHECK(param(c12, "g_min") == Rational::of(243));
  CHECK(param(c12, "d_lo") == Rational::of(66));
  CHECK(param(c12, "d_hi") == Rational::of(66));

  CHECK_THROWS_AS(cliffdim_case2_bounds(9), PreconditionError);

  auto low_g = cliffdim_case2_bounds(10, 100);
  CHECK(low_g.verdict.kind == Verdict::Kind::StepFails);
}

TEST_CASE("lemma bound certificate worked examples") {
  auto c1 = lemma_bound_certificate(3 * E1() + 3 * E2());
  CHECK(param(c1, "phi") == Rational::of(3));
  CHECK(param(c1, "phi_ceiling") == Rational::of(4));
  auto* gate = find_step(c1, "2*phi <= g-1");
  REQUIRE(gate);
  CHECK(gate->holds);  // 6 <= 9
  auto* wit = find_step(c1, "(2E-C).E");
  REQUIRE(wit);
  CHECK(wit->lhs == Rational::of(-3));
  CHECK(wit->holds);
  CHECK(c1.verdict.kind == Verdict::Kind::AllStepsHold);

  auto c2 = lemma_bound_certificate(E1() + E2());
  CHECK(param(c2, "phi") == Rational::of(1));
  CHECK(param(c2, "phi_ceiling") == Rational::of(1));
  auto* gate2 = find_step(c2, "2*phi <= g-1");
  REQUIRE(gate2);
  CHECK_FALSE(gate2->holds);  // 2 <= 1 fails: clause (ii) not asserted
  CHECK(find_step(c2, "clifford upper bound") == nullptr);
  CHECK(c2.verdict.kind == Verdict::Kind::AllStepsHold);

  auto c3 = lemma_bound_certificate(4 * E1() + 3 * E2());
  CHECK(param(c3, "phi") == Rational::of(3));
  auto* g3 = find_step(c3, "2*phi <= g-1");
  REQUIRE(g3);
  CHECK(g3->holds);  // 6 <= 12
  CHECK(c3.verdict.kind == Verdict::Kind::AllStepsHold);
}

TEST_CASE("certificates are pure: re-running yields identical steps") {
  for (int rep = 0; rep < 2; ++rep) {
    auto a = plane_curve_certificate(7);
    auto b = plane_curve_certificate(7);
    REQUIRE(a.steps.size() == b.steps.size());
    for (size_t i = 0; i < a.steps.size(); ++i) {
      CHECK(a.steps[i].desc == b.steps[i].desc);
      CHECK(a.steps[i].lhs == b.steps[i].lhs);
      CHECK(a.steps[i].rhs == b.steps[i].rhs);
      CHECK(a.steps[i].holds == b.steps[i].holds);
    }
  }
}

TEST_CASE("every step re-evaluates to its stored truth value") {
  std::vector<Certificate> certs;
  certs.push_back(plane_curve_certificate(5));
  certs.push_back(plane_curve_certificate(6));
  certs.push_back(plane_curve_certificate(9));
  certs.push_back(cliffdim_case1_certificate(3));
  certs.push_back(cliffdim_case1_certificate(9));
  certs.push_back(cliffdim_case2_bounds(10, 163));
  certs.push_back(lemma_bound_certificate(3 * E1() + 3 * E2()));
  for (const auto& c : certs)
    for (const auto& s : c.steps) CHECK(s.holds == eval_relation(s.lhs, s.rel, s.rhs));
}

TEST_CASE("case-2 monotonicity") {
  Coord prev = 0;
  for (Coord r = 10; r <= 15; ++r) {
    auto c = cliffdim_case2_bounds(r);
    Coord gmin = param(c, "g_min").num;
    CHECK(gmin > prev);
    prev = gmin;
  }
  Coord prev_hi = 0;
  for (Coord g = 163; g <= 363; g += 50) {
    auto c = cliffdim_case2_bounds(10, g);
    Coord hi = param(c, "d_hi").num;
    CHECK(hi >= prev_hi);
    prev_hi = hi;
  }
}
