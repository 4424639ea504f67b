// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure.  Criteria 1, 2 and 7 drive the real CLI binary (path in argv[1]);
// the rest call the library directly.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "enriques/certificates.hpp"
#include "enriques/divisor_io.hpp"
#include "enriques/gonality.hpp"
#include "enriques/lattice.hpp"
#include "enriques/slice_enum.hpp"

using namespace enriques;
using nlohmann::json;

namespace {

std::string g_cli = "./enrlat";
int g_failures = 0;

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string run_cli(const std::string& args, int* exit_code = nullptr) {
  std::string cmd = g_cli + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) throw std::runtime_error("popen failed");
  std::string out;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
  int status = pclose(p);
  if (exit_code) *exit_code = WEXITSTATUS(status);
  return out;
}

void report(int idx, const std::string& label, bool ok, const std::string& detail) {
  std::cout << "criterion " << idx << " (" << label << "): " << (ok ? "PASS" : "FAIL");
  if (!detail.empty()) std::cout << " — " << detail;
  std::cout << "\n";
  if (!ok) ++g_failures;
}

json expect_vec(std::initializer_list<int> v) {
  json arr = json::array();
  for (int x : v) arr.push_back(x);
  return arr;
}

// --- criterion 1: worked example |3(E1+E2)| ---------------------------------
void criterion1() {
  auto t0 = std::chrono::steady_clock::now();
  std::ostringstream detail;
  bool ok = true;

  std::string out = run_cli("--json window \"3*E1+3*E2\"");
  std::string out2 = run_cli("--json window \"3*E1+3*E2\"");
  if (out != out2 || out.empty()) {
    ok = false;
    detail << "json output not deterministic; ";
  }
  try {
    json j = json::parse(out);
    if (j["candidate_gon"] != 4) ok = false;
    if (j["window"]["lo"] != 4 || j["window"]["hi"] != 6) ok = false;
    bool minimal_ok = false;
    for (const auto& dec : j["decompositions"]) {
      if (dec["minimal"] == true) {
        if (dec["d"] == 4 && dec["L"] == expect_vec({1, 1, 0, 0, 0, 0, 0, 0, 0, 0}) &&
            dec["M"] == expect_vec({2, 2, 0, 0, 0, 0, 0, 0, 0, 0}) &&
            dec["L_type"] == "TwoHalfFibers")
          minimal_ok = true;
        else
          ok = false;
      }
    }
    if (!minimal_ok) ok = false;
  } catch (const std::exception& e) {
    ok = false;
    detail << "window parse: " << e.what() << "; ";
  }

  try {
    json s = json::parse(run_cli("--json steiner \"E1+E2\" \"2*E1+2*E2\""));
    if (s["stratum_codim"] != 2) ok = false;
    if (s["cliff_candidate"] != 2) ok = false;
    if (s["gon_upper"] != 4) ok = false;
  } catch (const std::exception& e) {
    ok = false;
    detail << "steiner parse: " << e.what() << "; ";
  }

  double dt = seconds_since(t0);
  if (dt >= 3.0) {  // three CLI invocations, each budgeted < 1 s
    ok = false;
    detail << "too slow: " << dt << "s; ";
  }
  detail << "candidate 4, window [4,6], codim 2, " << dt << "s";
  report(1, "gonality window of |3(E1+E2)|", ok, detail.str());
}

// --- criterion 2: worked example |4E1+3E2| ----------------------------------
void criterion2() {
  auto t0 = std::chrono::steady_clock::now();
  std::ostringstream detail;
  bool ok = true;
  try {
    json j = json::parse(run_cli("--json window \"4*E1+3*E2\""));
    if (j["candidate_gon"] != 5) ok = false;
    if (j["window"]["lo"] != 5 || j["window"]["hi"] != 7) ok = false;
    bool minimal_ok = false;
    for (const auto& dec : j["decompositions"]) {
      if (dec["minimal"] == true && dec["d"] == 5) {
        if (dec["L"] == expect_vec({1, 1, 0, 0, 0, 0, 0, 0, 0, 0}) &&
            dec["M"] == expect_vec({3, 2, 0, 0, 0, 0, 0, 0, 0, 0}))
          minimal_ok = true;
      }
    }
    if (!minimal_ok) ok = false;
  } catch (const std::exception& e) {
    ok = false;
    detail << "parse: " << e.what() << "; ";
  }
  double dt = seconds_since(t0);
  if (dt >= 1.0) {
    ok = false;
    detail << "too slow: " << dt << "s; ";
  }
  detail << "candidate 5, window [5,7], " << dt << "s";
  report(2, "gonality window of |4E1+3E2|", ok, detail.str());
}

// --- criterion 3: phi ceiling on 100 random cone classes --------------------
void criterion3() {
  auto t0 = std::chrono::steady_clock::now();
  std::mt19937_64 rng(0xACCE55ULL);
  std::uniform_int_distribution<Coord> dist(-5, 5);
  const auto& pol = Polarization::standard();
  int violations = 0;
  for (int i = 0; i < 100; ++i) {
    DivisorClass c;
    do {
      for (auto& v : c.c) v = dist(rng);
    } while (!is_positive_cone(c, pol));
    auto r = phi(c, pol);
    if (r.value > isqrt_floor(self_intersection(c))) ++violations;
  }
  double dt = seconds_since(t0);
  bool ok = violations == 0 && dt < 30.0;
  std::ostringstream detail;
  detail << violations << " violations over 100 classes, " << dt << "s";
  report(3, "phi <= floor(sqrt(2g-2)) suite", ok, detail.str());
}

// --- criterion 4: oracle equivalence and the closed form --------------------
void criterion4() {
  auto t0 = std::chrono::steady_clock::now();
  std::mt19937_64 rng(0x04AC1EULL);
  std::uniform_int_distribution<Coord> ab(1, 6);
  int mismatches = 0;
  for (int i = 0; i < 50; ++i) {
    Coord a = ab(rng), b = ab(rng);
    DivisorClass c = a * E1() + b * E2();
    auto fast = phi(c);
    auto slow = brute_oracle_phi(c, 6);
    if (fast.value != slow.value || fast.minimizers != slow.minimizers) ++mismatches;
  }
  int closed_form_bad = 0;
  for (Coord a = 1; a <= 50; ++a)
    for (Coord b = 1; b <= 50; ++b) {
      DivisorClass c = a * E1() + b * E2();
      if (phi(c).value != std::min(a, b)) ++closed_form_bad;
    }
  double dt = seconds_since(t0);
  bool ok = mismatches == 0 && closed_form_bad == 0;
  std::ostringstream detail;
  detail << mismatches << " oracle mismatches, " << closed_form_bad
         << " closed-form mismatches, " << dt << "s";
  report(4, "oracle equivalence", ok, detail.str());
}

// --- criterion 5: lattice self-check ----------------------------------------
void criterion5() {
  bool ok = gram_determinant() == -1;
  auto sig = gram_signature();
  if (!(sig[0] == 1 && sig[1] == 9 && sig[2] == 0)) ok = false;
  std::mt19937_64 rng(0x1A771CEULL);
  std::uniform_int_distribution<Coord> dist(-9, 9);
  int odd = 0;
  for (int i = 0; i < 1000; ++i) {
    DivisorClass d;
    for (auto& v : d.c) v = dist(rng);
    if (self_intersection(d) % 2 != 0) ++odd;
  }
  ok = ok && odd == 0;
  std::ostringstream detail;
  detail << "det " << gram_determinant() << ", signature (" << sig[0] << "," << sig[1]
         << "), " << odd << " odd squares";
  report(5, "lattice self-check", ok, detail.str());
}

// --- criterion 6: bundle invariants -----------------------------------------
void criterion6() {
  bool ok = true;
  for (Coord d = 1; d <= 25; ++d) {
    DivisorClass c = 2 * E1() + d * E2();  // C^2 = 4d
    auto bi = bundle_invariants(c, d);
    if (bi.chi_endo != 4) ok = false;
    if (bi.bogomolov_unstable) ok = false;  // 4d == C^2 is not unstable
  }
  std::mt19937_64 rng(0xB09030ULL);
  std::uniform_int_distribution<Coord> dist(-5, 5);
  std::uniform_int_distribution<Coord> dd(1, 30);
  for (int i = 0; i < 500; ++i) {
    DivisorClass c;
    for (auto& v : c.c) v = dist(rng);
    Coord d = dd(rng);
    auto bi = bundle_invariants(c, d);
    Coord csq = self_intersection(c);
    if (bi.chi_endo != 4 + csq - 4 * d) ok = false;
    if (bi.bogomolov_unstable != (4 * d < csq)) ok = false;
  }
  report(6, "bundle invariants", ok, "chi_endo == 4 on the 4d = C^2 line, flag exact");
}

// --- criterion 7: certificates via the CLI, independently re-verified -------
struct RatVal {
  long long num = 0, den = 1;
};

RatVal rat_of_json(const json& v) {
  if (v.is_number_integer()) return {v.get<long long>(), 1};
  std::string s = v.get<std::string>();
  auto slash = s.find('/');
  return {std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1))};
}

bool reverify(const json& cert) {
  for (const auto& st : cert["steps"]) {
    RatVal l = rat_of_json(st["lhs"]);
    RatVal r = rat_of_json(st["rhs"]);
    long long lhs = l.num * r.den;
    long long rhs = r.num * l.den;
    std::string rel = st["rel"];
    bool expect;
    if (rel == "=")
      expect = lhs == rhs;
    else if (rel == "<")
      expect = lhs < rhs;
    else if (rel == "<=")
      expect = lhs <= rhs;
    else if (rel == ">")
      expect = lhs > rhs;
    else if (rel == ">=")
      expect = lhs >= rhs;
    else
      return false;
    if (st["holds"] != expect) return false;
  }
  return true;
}

void criterion7() {
  bool ok = true;
  std::ostringstream detail;
  try {
    json c2 = json::parse(run_cli("--json cert cliffdim --r 10 --case 2"));
    if (c2["parameters"]["g_min"] != 163) ok = false;
    if (!reverify(c2)) ok = false;

    json c2g = json::parse(run_cli("--json cert cliffdim --r 10 --case 2 --genus 163"));
    if (c2g["parameters"]["d_lo"] != 54 || c2g["parameters"]["d_hi"] != 54) ok = false;
    if (!reverify(c2g)) ok = false;

    json p5 = json::parse(run_cli("--json cert plane-curve --degree 5"));
    if (p5["verdict"] != "out-of-numeric-scope") ok = false;
    bool gate_found = false;
    for (const auto& st : p5["steps"])
      if (st["lhs"] == 3 && st["rhs"] == "5/2" && st["holds"] == false) gate_found = true;
    if (!gate_found) ok = false;
    if (!reverify(p5)) ok = false;

    for (const char* cmd :
         {"--json cert plane-curve --degree 6", "--json cert plane-curve --degree 10",
          "--json cert cliffdim --r 3", "--json cert cliffdim --r 9",
          "--json cert cliffdim --r 12 --case 2 --genus 243",
          "--json cert lemma \"3*E1+3*E2\"", "--json cert lemma \"E1+E2\"",
          "--json cert lemma \"4*E1+3*E2\""}) {
      json c = json::parse(run_cli(cmd));
      if (!reverify(c)) {
        ok = false;
        detail << "re-verification failed for: " << cmd << "; ";
      }
    }
  } catch (const std::exception& e) {
    ok = false;
    detail << "exception: " << e.what();
  }
  detail << "g_min 163, interval [54,54], gate 3 <= 5/2 false, all steps re-verified";
  report(7, "certificates", ok, detail.str());
}

// --- criterion 8: the stated general-member gonalities lie in the windows ---
void criterion8() {
  auto w1 = gon_window(3 * E1() + 3 * E2());
  auto w2 = gon_window(4 * E1() + 3 * E2());
  bool ok = w1.window && w2.window;
  // |3(E1+E2)|: gon(|C|) = 4, general member gonality >= 5 (i.e. 5)
  if (ok) ok = *w1.window->lo <= 5 && 5 <= w1.window->hi;
  // |4E1+3E2|: gon(|C|) = 5, general member gonality 6
  if (ok) ok = *w2.window->lo <= 6 && 6 <= w2.window->hi;
  report(8, "jump window contains the general member", ok,
         "5 in [4,6] and 6 in [5,7]");
}

// --- criterion 9: performance ------------------------------------------------
void criterion9() {
  bool ok = true;
  std::ostringstream detail;
  std::vector<DivisorClass> phis = {
      10 * E1() + 10 * E2(),                       // C^2 = 200
      9 * E1() + 11 * E2(),                        // C^2 = 198
      7 * E1() + 7 * E2() + alpha(1),              // C^2 = 96
      5 * E1() + 9 * E2() + alpha(3) + alpha(7),   // full-support flavour
  };
  for (const auto& c : phis) {
    if (self_intersection(c) > 200 || !is_positive_cone(c)) {
      ok = false;
      detail << "bad test class; ";
      continue;
    }
    auto t0 = std::chrono::steady_clock::now();
    (void)phi(c);
    double dt = seconds_since(t0);
    if (dt >= 1.0) {
      ok = false;
      detail << "phi " << dt << "s; ";
    }
  }
  for (const auto& c : {5 * E1() + 6 * E2(),                        // C^2 = 60
                        4 * E1() + 5 * E2() + alpha(1) + alpha(2)}  // C^2 = 38
  ) {
    auto t0 = std::chrono::steady_clock::now();
    (void)decompositions(c, 20);
    double dt = seconds_since(t0);
    if (dt >= 10.0) {
      ok = false;
      detail << "decompose " << dt << "s; ";
    }
  }
  detail << "phi on C^2<=200 under 1s, decomposition search under 10s";
  report(9, "performance", ok, detail.str());
}

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1) g_cli = argv[1];
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  std::cout << "acceptance: " << (9 - g_failures) << "/9 criteria passed\n";
  return g_failures == 0 ? 0 : 1;
}
