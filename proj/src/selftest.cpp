#include "enriques/selftest.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "enriques/certificates.hpp"
#include "enriques/gonality.hpp"
#include "enriques/lattice.hpp"
#include "enriques/slice_enum.hpp"

namespace enriques {

namespace {

using Rng = std::mt19937_64;

DivisorClass random_class(Rng& rng, Coord lo, Coord hi) {
  std::uniform_int_distribution<Coord> dist(lo, hi);
  DivisorClass d;
  for (auto& v : d.c) v = dist(rng);
  return d;
}

DivisorClass random_cone_class(Rng& rng, Coord lo, Coord hi, const Polarization& pol) {
  while (true) {
    DivisorClass d = random_class(rng, lo, hi);
    if (is_positive_cone(d, pol)) return d;
  }
}

DivisorClass random_nef_big(Rng& rng, Coord lo, Coord hi, const Polarization& pol) {
  while (true) {
    DivisorClass d = random_class(rng, lo, hi);
    if (self_intersection(d) > 0 && pairing(d, pol.h()) > 0) return d;
  }
}

// Random primitive isotropic class on the effective side: solve 2ab = -w^2
// for a small random E8 part w.
DivisorClass random_half_fiber(Rng& rng, const Polarization& pol) {
  std::uniform_int_distribution<Coord> wdist(-2, 2);
  while (true) {
    DivisorClass d;
    for (int i = 2; i < kRank; ++i) d.c[i] = wdist(rng);
    DivisorClass wonly = d;
    Coord wsq = self_intersection(wonly);  // <= 0
    Coord t = -wsq / 2;
    if (t == 0) {
      d.c[0] = 1;
      d.c[1] = 0;
    } else {
      Coord a = 1;
      for (Coord cand = 1; cand * cand <= t; ++cand)
        if (t % cand == 0 && (rng() & 1)) a = cand;
      d.c[0] = a;
      d.c[1] = t / a;
    }
    Coord g = gcd_coords(d);
    if (g > 1)
      for (auto& v : d.c) v /= g;
    if (self_intersection(d) != 0) continue;
    if (pairing(d, pol.h()) <= 0) d = -d;
    if (pairing(d, pol.h()) <= 0) continue;
    return d;
  }
}

struct Suite {
  std::vector<CheckResult> results;

  void check(const std::string& name, bool ok, const std::string& detail = "") {
    results.push_back({name, ok, ok ? "" : detail});
  }
};

std::string show(const DivisorClass& d) {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < kRank; ++i) os << d.c[i] << (i + 1 < kRank ? "," : "]");
  return os.str();
}

bool verify_decomposition_raw(const DivisorClass& C, const Decomposition& dec,
                              const Polarization& pol) {
  // Independent walk over raw coordinates; no reuse of the stored flags.
  if (!(dec.L + dec.M == C)) return false;
  Coord d = pairing(dec.L, dec.M);
  if (d != dec.d) return false;
  Coord lsq = self_intersection(dec.L);
  Coord msq = self_intersection(dec.M);
  Coord mlsq = self_intersection(dec.M - dec.L);
  if (lsq != dec.l_sq || msq != dec.m_sq || mlsq != dec.ml_sq) return false;
  Coord csq = self_intersection(C);
  bool boundary = (4 * d == csq);
  if ((dec.mode == DecMode::Boundary) != boundary) return false;
  if (!boundary && !(4 * d < csq)) return false;
  auto cone_strict = [&](const DivisorClass& x) {
    return self_intersection(x) > 0 && pairing(x, pol.h()) > 0;
  };
  auto cone_closure = [&](const DivisorClass& x) {
    return x.is_zero() || (self_intersection(x) >= 0 && pairing(x, pol.h()) > 0);
  };
  bool moves = lsq > 0 || (!dec.L.is_zero() && gcd_coords(dec.L) % 2 == 0);
  if (!moves) return false;
  if (!boundary) {
    return lsq >= 0 && msq > d && d > lsq && mlsq > 0 && cone_closure(dec.L) &&
           !dec.L.is_zero() && cone_strict(dec.M) && cone_strict(dec.M - dec.L);
  }
  return lsq >= 0 && msq >= d && d >= lsq && mlsq >= 0 && cone_closure(dec.L) &&
         !dec.L.is_zero() && cone_closure(dec.M) && !dec.M.is_zero() &&
         cone_closure(dec.M - dec.L);
}

}  // namespace

std::vector<CheckResult> run_selftest() {
  Suite s;
  const Polarization& pol = Polarization::standard();
  Rng rng(0x5eed0e8ULL);

  // --- lattice ---
  s.check("gram determinant is -1", gram_determinant() == -1);
  {
    auto sig = gram_signature();
    s.check("gram signature is (1,9)", sig[0] == 1 && sig[1] == 9 && sig[2] == 0);
  }
  {
    bool ok = true;
    for (int i = 0; i < 1000 && ok; ++i) {
      DivisorClass d = random_class(rng, -9, 9);
      ok = (self_intersection(d) % 2 == 0);
    }
    s.check("self-intersections are even", ok);
  }
  {
    bool ok = true;
    Coord hsq = self_intersection(pol.h());
    for (int i = 0; i < 500 && ok; ++i) {
      DivisorClass d = random_class(rng, -9, 9);
      DivisorClass proj = hsq * d - pairing(d, pol.h()) * pol.h();
      if (proj.is_zero()) continue;
      ok = (pairing(proj, pol.h()) == 0) && (self_intersection(proj) < 0);
    }
    s.check("hodge index: h-orthogonal classes have negative square", ok);
  }
  {
    bool ok = true;
    for (int i = 0; i < 300 && ok; ++i) {
      DivisorClass a = random_class(rng, -7, 7);
      DivisorClass b = random_class(rng, -7, 7);
      DivisorClass c = random_class(rng, -7, 7);
      ok = pairing(a, b) == pairing(b, a) &&
           pairing(a + b, c) == pairing(a, c) + pairing(b, c);
    }
    s.check("pairing is symmetric and bilinear", ok);
  }
  {
    bool ok = true;
    for (int i = 0; i < 200 && ok; ++i) {
      DivisorClass d = random_nef_big(rng, -6, 6, pol);
      ok = (chi(d) - 1 == dim_linear_system(d, pol));
    }
    s.check("chi - 1 equals dim|D| on big nef classes", ok);
  }
  {
    bool ok = true;
    for (int i = 0; i < 100 && ok; ++i) {
      DivisorClass p = random_half_fiber(rng, pol);
      for (Coord m = 1; m <= 5 && ok; ++m) {
        auto cls = classify_system(m * p, pol);
        ok = cls.kind == SystemClass::Kind::Isotropic && cls.multiplicity == m &&
             cls.primitive_part == p;
      }
    }
    s.check("classify_system recovers multiplicity and primitive part", ok);
  }

  // --- slice enumeration / phi ---
  {
    bool ok = true;
    std::string detail;
    for (int i = 0; i < 100 && ok; ++i) {
      DivisorClass c = random_cone_class(rng, -5, 5, pol);
      auto pr = phi(c, pol);
      Coord ceiling = isqrt_floor(self_intersection(c));
      if (pr.value > ceiling) {
        ok = false;
        detail = "violated at " + show(c);
      }
    }
    s.check("phi respects the sqrt(2g-2) ceiling", ok, detail);
  }
  {
    bool ok = true;
    for (int i = 0; i < 25 && ok; ++i) {
      DivisorClass c = random_cone_class(rng, -4, 4, pol);
      auto p1 = phi(c, pol);
      for (Coord k = 2; k <= 3 && ok; ++k) {
        auto pk = phi(k * c, pol);
        ok = (pk.value == k * p1.value) && (pk.minimizers == p1.minimizers);
      }
    }
    s.check("phi scales linearly with the class", ok);
  }
  {
    bool ok = true;
    for (int i = 0; i < 25 && ok; ++i) {
      DivisorClass c = random_cone_class(rng, -5, 5, pol);
      auto pr = phi(c, pol);
      for (const auto& e : pr.minimizers) {
        ok = ok && self_intersection(e.cls) == 0 && is_primitive(e.cls) &&
             pairing(e.cls, pol.h()) > 0 && pairing(c, e.cls) == pr.value;
      }
      ok = ok && !pr.minimizers.empty();
    }
    s.check("phi minimizers are primitive isotropic of the stated degree", ok);
  }
  {
    bool ok = true;
    std::uniform_int_distribution<Coord> ab(1, 6);
    for (int i = 0; i < 10 && ok; ++i) {
      Coord a = ab(rng), b = ab(rng);
      DivisorClass c = a * E1() + b * E2();
      auto fast = phi(c, pol);
      auto slow = brute_oracle_phi(c, 6, pol);
      ok = fast.value == slow.value && fast.minimizers == slow.minimizers;
    }
    s.check("phi matches the box oracle on U-supported classes", ok);
  }
  {
    bool ok = true;
    for (int i = 0; i < 20 && ok; ++i) {
      DivisorClass c = random_cone_class(rng, -4, 4, pol);
      std::uniform_int_distribution<Coord> md(1, 6);
      Coord m = md(rng);
      SliceQuery q{c, m, 0, 0, true, pol};
      auto lst = enumerate_slice(q);
      for (size_t k = 0; k + 1 < lst.size(); ++k)
        if (!(lst[k] > lst[k + 1])) ok = false;
      for (const auto& x : lst) {
        ok = ok && pairing(x, c) == m && self_intersection(x) == 0 &&
             pairing(x, pol.h()) > 0;
      }
    }
    s.check("slice output is sorted, duplicate-free and predicate-exact", ok);
  }
  {
    auto pd = isotropic_pair_decompositions(E1() + E2(), pol);
    bool ok = pd.pairs.size() == 1 && pd.pairs[0].first == E1() && pd.pairs[0].second == E2();
    DivisorClass q = E1() + E2() + alpha(1);  // isotropic, meets E1 once
    auto pd2 = isotropic_pair_decompositions(E1() + q, pol);
    bool found = false;
    for (const auto& [x, y] : pd2.pairs)
      if ((x == E1() && y == q) || (x == q && y == E1())) found = true;
    s.check("pair decompositions recover known half-fiber pairs", ok && found);
  }

  // --- gonality ---
  {
    bool ok = true;
    std::string detail;
    for (int i = 0; i < 12 && ok; ++i) {
      DivisorClass c = random_cone_class(rng, -3, 3, pol);
      auto decs = decompositions(c, default_dmax(genus(c)), pol);
      for (const auto& dec : decs)
        if (!verify_decomposition_raw(c, dec, pol)) {
          ok = false;
          detail = "chain mismatch at C=" + show(c);
        }
    }
    s.check("decomposition chains re-verify from raw coordinates", ok, detail);
  }
  {
    // strict decompositions never survive an (L,M) swap; boundary swaps work
    // exactly in the symmetric case
    bool ok = true;
    auto check_swap = [&](const DivisorClass& c) {
      auto decs = decompositions(c, default_dmax(genus(c)), pol);
      for (const auto& dec : decs) {
        Decomposition sw = dec;
        std::swap(sw.L, sw.M);
        sw.l_sq = self_intersection(sw.L);
        sw.m_sq = self_intersection(sw.M);
        bool valid = verify_decomposition_raw(c, sw, pol);
        if (dec.mode == DecMode::Strict && valid) ok = false;
        if (dec.mode == DecMode::Boundary && (valid != (dec.l_sq == dec.m_sq))) ok = false;
      }
    };
    check_swap(3 * E1() + 3 * E2());
    check_swap(2 * E1() + 2 * E2());
    check_swap(4 * E1() + 3 * E2());
    s.check("exchange symmetry holds exactly as stated per mode", ok);
  }
  {
    bool ok = true;
    for (int i = 0; i < 8 && ok; ++i) {
      DivisorClass c = random_cone_class(rng, -3, 3, pol);
      Coord g = genus(c);
      std::optional<Coord> prev;
      for (Coord dm = 1; dm <= default_dmax(g); ++dm) {
        auto decs = decompositions(c, dm, pol);
        if (!decs.empty()) {
          Coord cand = decs.front().d;
          if (prev && cand > *prev) ok = false;
          prev = cand;
        }
      }
    }
    s.check("candidate gonality is monotone in the search bound", ok);
  }
  {
    auto w1 = gon_window(3 * E1() + 3 * E2(), pol);
    auto w2 = gon_window(4 * E1() + 3 * E2(), pol);
    bool ok = w1.candidate_gon && *w1.candidate_gon == 4 && w2.candidate_gon &&
              *w2.candidate_gon == 5;
    for (const auto* w : {&w1, &w2}) {
      Coord mind = w->decompositions.front().d;
      for (const auto& dec : w->decompositions)
        if (dec.d == mind &&
            classify_minimal_L(dec, mind) != Conformance::Conforms)
          ok = false;
    }
    s.check("minimal decompositions conform on the worked examples", ok);
  }
  {
    bool ok = true;
    for (int i = 0; i < 200 && ok; ++i) {
      DivisorClass l = random_nef_big(rng, 0, 4, pol);
      DivisorClass m = random_nef_big(rng, 0, 4, pol);
      Coord lm = pairing(l, m);
      if (lm < 1) continue;
      if (self_intersection(l) > self_intersection(l + m) / 2) continue;
      auto rep = steiner_report(l, m, pol);
      ok = rep.gon_upper == pairing(l, m) &&
           genus(rep.C) == self_intersection(l) / 2 + self_intersection(m) / 2 + lm + 1 &&
           rep.stratum_codim <= rep.dim_C;
    }
    s.check("steiner identities: gon_upper = L.M and genus additivity", ok);
  }
  {
    bool ok = true;
    for (int i = 0; i < 200 && ok; ++i) {
      DivisorClass c = random_cone_class(rng, -5, 5, pol);
      std::uniform_int_distribution<Coord> dd(1, 30);
      Coord d = dd(rng);
      auto bi = bundle_invariants(c, d);
      Coord csq = self_intersection(c);
      ok = bi.chi_endo == 4 + csq - 4 * d && bi.bogomolov_unstable == (4 * d < csq) &&
           bi.rank == 2 && bi.c2 == d && bi.c1 == c;
    }
    s.check("bundle invariants: chi_endo identity and instability threshold", ok);
  }

  // --- certificates ---
  {
    bool ok = true;
    for (Coord d : {5, 6, 7, 10}) {
      auto c1 = plane_curve_certificate(d);
      auto c2 = plane_curve_certificate(d);
      if (!(c1.steps.size() == c2.steps.size() && c1.verdict.str() == c2.verdict.str()))
        ok = false;
      for (size_t i = 0; i < c1.steps.size(); ++i) {
        const auto& st = c1.steps[i];
        if (st.holds != eval_relation(st.lhs, st.rel, st.rhs)) ok = false;
        if (st.desc != c2.steps[i].desc || st.holds != c2.steps[i].holds) ok = false;
      }
    }
    for (Coord r : {3, 5, 9}) {
      auto c = cliffdim_case1_certificate(r);
      for (const auto& st : c.steps)
        if (st.holds != eval_relation(st.lhs, st.rel, st.rhs)) ok = false;
    }
    s.check("certificates are deterministic and step-consistent", ok);
  }
  {
    bool ok = true;
    Coord prev_gmin = 0;
    for (Coord r = 10; r <= 16; ++r) {
      auto c = cliffdim_case2_bounds(r);
      Coord gmin = 0;
      for (const auto& [k, v] : c.parameters)
        if (k == "g_min") gmin = v.num;
      if (gmin <= prev_gmin) ok = false;
      prev_gmin = gmin;
    }
    Coord prev_hi = 0;
    for (Coord g = 163; g <= 400; g += 40) {
      auto c = cliffdim_case2_bounds(10, g);
      Coord hi = 0;
      for (const auto& [k, v] : c.parameters)
        if (k == "d_hi") hi = v.num;
      if (hi < prev_hi) ok = false;
      prev_hi = hi;
    }
    s.check("case-2 genus floor and degree ceiling are monotone", ok);
  }
  {
    bool ok = true;
    for (int i = 0; i < 10 && ok; ++i) {
      DivisorClass c = random_cone_class(rng, -4, 4, pol);
      auto cert = lemma_bound_certificate(c, pol);
      if (cert.verdict.kind == Verdict::Kind::InvariantViolation) ok = false;
      for (const auto& st : cert.steps)
        if (st.kind == StepKind::Assertion && !st.holds) ok = false;
    }
    s.check("lemma certificate holds on random cone classes", ok);
  }

  return s.results;
}

}  // namespace enriques
