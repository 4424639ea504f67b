#include "enriques/cli.hpp"

#include <iostream>
#include <optional>
#include <sstream>

#include "enriques/certificates.hpp"
#include "enriques/divisor_io.hpp"
#include "enriques/gonality.hpp"
#include "enriques/lattice.hpp"
#include "enriques/selftest.hpp"
#include "enriques/slice_enum.hpp"

namespace enriques {

namespace {

const char* kUsage = R"(enrlat - exact divisor-class arithmetic on the Enriques lattice

usage: enrlat [global flags] <command> [args]

commands:
  pair A B                      intersection number A.B
  genus C                       g(C) = C^2/2 + 1        (needs C^2 >= 0)
  chi D                         chi(O(D)) = D^2/2 + 1
  phi C                         Phi(C) with all minimizing half-fibers
  bounds C                      genus, phi and the ceiling bounds for |C|
  decompose C [--dmax N]        all decompositions C = L + M with L.M <= N
  window C                      candidate gon(|C|) and the jump window
  steiner L M                   sweep report for the pencils |L|, |M|
  classify D                    linear-system type of a nef class
  cert plane-curve --degree d   exclusion chain for plane curves of degree d
  cert cliffdim --r r [--case 1|2] [--genus g]
                                Clifford-dimension chains
  cert lemma C                  phi ceiling and contribution gate for C
  selftest                      run the library invariant suites

global flags:
  --json                        machine-readable output (fixed field order)
  --polarization EXPR           reference class h (default "E1+E2", needs h^2 > 0)
  --phi-ceiling N               raise (never lower) the phi search ceiling

divisor expressions: signed sums of k*E1, k*E2, k*A1..k*A8, or a raw vector
"[c1,...,c10]".  Example: "3*E1+3*E2", "E1 - 2*A1".

exit codes: 0 ok, 1 invalid input or precondition, 2 internal invariant violation.
)";

struct Options {
  bool json = false;
  Polarization pol = Polarization::standard();
  std::optional<Coord> phi_ceiling;
  std::vector<std::string> rest;
};

Coord parse_int_arg(const std::string& s, const std::string& what) {
  try {
    size_t used = 0;
    long long v = std::stoll(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw PreconditionError("expected an integer for " + what + ", got '" + s + "'");
  }
}

Options parse_options(const std::vector<std::string>& args) {
  Options opt;
  for (size_t i = 0; i < args.size(); ++i) {
    const std::string& a = args[i];
    if (a == "--json") {
      opt.json = true;
    } else if (a == "--polarization") {
      if (i + 1 >= args.size()) throw PreconditionError("--polarization needs a value");
      opt.pol = Polarization(parse_divisor(args[++i]));
    } else if (a == "--phi-ceiling") {
      if (i + 1 >= args.size()) throw PreconditionError("--phi-ceiling needs a value");
      Coord v = parse_int_arg(args[++i], "--phi-ceiling");
      if (v < 1) throw PreconditionError("--phi-ceiling must be >= 1");
      opt.phi_ceiling = v;
    } else {
      opt.rest.push_back(a);
    }
  }
  return opt;
}

std::string fmt(const DivisorClass& d) { return format_divisor(d); }

void print_minimizers(std::ostream& out, const std::vector<IsotropicClass>& ms) {
  for (size_t i = 0; i < ms.size(); ++i)
    out << (i ? ", " : "") << fmt(ms[i].cls);
}

void print_decomposition(std::ostream& out, const Decomposition& dec, Coord minimal_d) {
  out << "  d=" << dec.d << " " << mode_name(dec.mode) << "  L=" << fmt(dec.L) << " ["
      << l_type_name(dec.l_type) << "]  M=" << fmt(dec.M) << "  L^2=" << dec.l_sq
      << " M^2=" << dec.m_sq << " (M-L)^2=" << dec.ml_sq;
  if (dec.d == minimal_d)
    out << "  minimal:" << conformance_name(classify_minimal_L(dec, minimal_d));
  out << "\n";
}

void print_report(std::ostream& out, const GonalityReport& rep, bool with_window) {
  out << "class: " << fmt(rep.C) << "\n";
  out << "genus: " << rep.g << "\n";
  out << "phi: " << rep.phi_value << "  (minimizers: ";
  print_minimizers(out, rep.phi_minimizers);
  out << ")\n";
  out << "bn gonality ceiling: " << rep.bn_gon_ceiling << "\n";
  if (rep.bn_cliff_ceiling)
    out << "bn clifford ceiling: " << *rep.bn_cliff_ceiling << "\n";
  if (rep.gon_upper_from_pencil)
    out << "pencil gonality bound: " << *rep.gon_upper_from_pencil << " (2*phi)\n";
  if (rep.lemma_cliff_upper)
    out << "lemma clifford upper: " << *rep.lemma_cliff_upper << " (2*phi-2)\n";
  if (!rep.lemma_note.empty()) out << "note: " << rep.lemma_note << "\n";
  if (!with_window) return;
  if (rep.candidate_gon)
    out << "candidate gon(|C|): " << *rep.candidate_gon << "\n";
  else
    out << "candidate gon(|C|): unknown\n";
  if (rep.window) {
    out << "window: [";
    if (rep.window->lo)
      out << *rep.window->lo;
    else
      out << "unknown";
    out << ", " << rep.window->hi << "]\n";
  }
  if (!rep.window_note.empty()) out << "note: " << rep.window_note << "\n";
  out << "decompositions: " << rep.decompositions.size() << "\n";
  Coord minimal_d = rep.decompositions.empty() ? -1 : rep.decompositions.front().d;
  for (const auto& dec : rep.decompositions) print_decomposition(out, dec, minimal_d);
}

void print_certificate(std::ostream& out, const Certificate& cert) {
  out << "certificate: " << cert.name << "\n";
  out << "parameters:";
  for (const auto& [k, v] : cert.parameters) out << " " << k << "=" << v.str();
  out << "\n";
  out << "steps:\n";
  for (const auto& st : cert.steps) {
    out << "  [" << (st.holds ? "ok" : "!!") << "] " << st.desc << ": " << st.lhs.str()
        << " " << st.rel << " " << st.rhs.str() << "   (" << st.anchor;
    if (st.kind == StepKind::Applicability)
      out << ", gate";
    else if (st.kind == StepKind::Info)
      out << ", info";
    out << ")\n";
  }
  out << "verdict: " << cert.verdict.str() << "\n";
}

void emit(std::ostream& out, const Options& opt, const Json& j,
          const std::function<void()>& table) {
  if (opt.json)
    out << j.dump() << "\n";
  else
    table();
}

int dispatch(const Options& opt, std::ostream& out) {
  const auto& cmd = opt.rest.at(0);
  auto need = [&](size_t n, const char* what) {
    if (opt.rest.size() != n + 1)
      throw PreconditionError(std::string("expected arguments: ") + what);
  };

  if (cmd == "pair") {
    need(2, "pair A B");
    Coord v = pairing(parse_divisor(opt.rest[1]), parse_divisor(opt.rest[2]));
    emit(out, opt, pair_json(v), [&] { out << "value: " << v << "\n"; });
    return 0;
  }
  if (cmd == "genus") {
    need(1, "genus C");
    Coord v = genus(parse_divisor(opt.rest[1]));
    emit(out, opt, scalar_json(v), [&] { out << "value: " << v << "\n"; });
    return 0;
  }
  if (cmd == "chi") {
    need(1, "chi D");
    Coord v = chi(parse_divisor(opt.rest[1]));
    emit(out, opt, scalar_json(v), [&] { out << "value: " << v << "\n"; });
    return 0;
  }
  if (cmd == "phi") {
    need(1, "phi C");
    auto r = phi(parse_divisor(opt.rest[1]), opt.pol, opt.phi_ceiling);
    emit(out, opt, phi_json(r), [&] {
      out << "value: " << r.value << "\n";
      out << "minimizers: ";
      print_minimizers(out, r.minimizers);
      out << "\n";
    });
    return 0;
  }
  if (cmd == "bounds") {
    need(1, "bounds C");
    auto rep = bounds(parse_divisor(opt.rest[1]), opt.pol, opt.phi_ceiling);
    emit(out, opt, report_json(rep, false), [&] { print_report(out, rep, false); });
    return 0;
  }
  if (cmd == "decompose") {
    if (opt.rest.size() < 2) throw PreconditionError("expected arguments: decompose C [--dmax N]");
    DivisorClass C = parse_divisor(opt.rest[1]);
    std::optional<Coord> dmax;
    for (size_t i = 2; i < opt.rest.size(); ++i) {
      if (opt.rest[i] == "--dmax" && i + 1 < opt.rest.size())
        dmax = parse_int_arg(opt.rest[++i], "--dmax");
      else
        throw PreconditionError("unknown argument '" + opt.rest[i] + "'");
    }
    Coord dm = dmax.value_or(default_dmax(genus(C)));
    auto decs = decompositions(C, dm, opt.pol);
    emit(out, opt, decompose_json(C, dm, decs), [&] {
      out << "class: " << fmt(C) << "\n";
      out << "d_max: " << dm << "\n";
      out << "decompositions: " << decs.size() << "\n";
      Coord minimal_d = decs.empty() ? -1 : decs.front().d;
      for (const auto& dec : decs) print_decomposition(out, dec, minimal_d);
    });
    return 0;
  }
  if (cmd == "window") {
    need(1, "window C");
    auto rep = gon_window(parse_divisor(opt.rest[1]), opt.pol, opt.phi_ceiling);
    emit(out, opt, report_json(rep, true), [&] { print_report(out, rep, true); });
    return 0;
  }
  if (cmd == "steiner") {
    need(2, "steiner L M");
    auto rep = steiner_report(parse_divisor(opt.rest[1]), parse_divisor(opt.rest[2]), opt.pol);
    emit(out, opt, steiner_json(rep), [&] {
      out << "L: " << fmt(rep.L) << "   M: " << fmt(rep.M) << "\n";
      out << "C = L+M: " << fmt(rep.C) << "\n";
      out << "base points: " << rep.base_points_L << " (L), " << rep.base_points_M
          << " (M)\n";
      out << "gonality upper bound L.M: " << rep.gon_upper << "\n";
      out << "clifford candidate L.M-2: " << rep.cliff_candidate << "\n";
      out << "dim |C|: " << rep.dim_C << "\n";
      out << "stratum codimension: " << rep.stratum_codim << "\n";
    });
    return 0;
  }
  if (cmd == "classify") {
    need(1, "classify D");
    auto cls = classify_system(parse_divisor(opt.rest[1]), opt.pol);
    emit(out, opt, classify_json(cls), [&] {
      switch (cls.kind) {
        case SystemClass::Kind::BigIrreducible:
          out << "big-irreducible, dim " << cls.dim << "\n";
          break;
        case SystemClass::Kind::Isotropic:
          out << "isotropic: multiplicity " << cls.multiplicity << ", primitive part "
              << fmt(cls.primitive_part) << "\n";
          break;
        case SystemClass::Kind::Invalid:
          out << "invalid (zero class)\n";
          break;
      }
    });
    return 0;
  }
  if (cmd == "cert") {
    if (opt.rest.size() < 2) throw PreconditionError("expected: cert <plane-curve|cliffdim|lemma> ...");
    const auto& kind = opt.rest[1];
    if (kind == "plane-curve") {
      std::optional<Coord> degree;
      for (size_t i = 2; i < opt.rest.size(); ++i) {
        if (opt.rest[i] == "--degree" && i + 1 < opt.rest.size())
          degree = parse_int_arg(opt.rest[++i], "--degree");
        else
          throw PreconditionError("unknown argument '" + opt.rest[i] + "'");
      }
      if (!degree) throw PreconditionError("cert plane-curve needs --degree d");
      auto cert = plane_curve_certificate(*degree);
      emit(out, opt, certificate_json(cert), [&] { print_certificate(out, cert); });
      return 0;
    }
    if (kind == "cliffdim") {
      std::optional<Coord> r, g;
      int case_no = 1;
      for (size_t i = 2; i < opt.rest.size(); ++i) {
        if (opt.rest[i] == "--r" && i + 1 < opt.rest.size())
          r = parse_int_arg(opt.rest[++i], "--r");
        else if (opt.rest[i] == "--case" && i + 1 < opt.rest.size())
          case_no = static_cast<int>(parse_int_arg(opt.rest[++i], "--case"));
        else if (opt.rest[i] == "--genus" && i + 1 < opt.rest.size())
          g = parse_int_arg(opt.rest[++i], "--genus");
        else
          throw PreconditionError("unknown argument '" + opt.rest[i] + "'");
      }
      if (!r) throw PreconditionError("cert cliffdim needs --r r");
      if (case_no != 1 && case_no != 2)
        throw PreconditionError("--case must be 1 or 2");
      Certificate cert = (case_no == 1) ? cliffdim_case1_certificate(*r)
                                        : cliffdim_case2_bounds(*r, g);
      emit(out, opt, certificate_json(cert), [&] { print_certificate(out, cert); });
      return 0;
    }
    if (kind == "lemma") {
      if (opt.rest.size() != 3) throw PreconditionError("expected: cert lemma C");
      auto cert = lemma_bound_certificate(parse_divisor(opt.rest[2]), opt.pol, opt.phi_ceiling);
      emit(out, opt, certificate_json(cert), [&] { print_certificate(out, cert); });
      return cert.verdict.kind == Verdict::Kind::InvariantViolation ? 2 : 0;
    }
    throw PreconditionError("unknown certificate '" + kind + "'");
  }
  if (cmd == "selftest") {
    auto results = run_selftest();
    bool all = true;
    Json arr = Json::array();
    for (const auto& r : results) {
      all = all && r.passed;
      if (opt.json) {
        Json j;
        j["name"] = r.name;
        j["passed"] = r.passed;
        if (!r.detail.empty()) j["detail"] = r.detail;
        arr.push_back(j);
      } else {
        out << (r.passed ? "[ok] " : "[!!] ") << r.name;
        if (!r.detail.empty()) out << "  (" << r.detail << ")";
        out << "\n";
      }
    }
    if (opt.json) {
      Json j;
      j["checks"] = arr;
      j["passed"] = all;
      out << j.dump() << "\n";
    } else {
      out << (all ? "selftest passed" : "selftest FAILED") << "\n";
    }
    return all ? 0 : 2;
  }
  throw PreconditionError("unknown command '" + cmd + "'");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    Options opt = parse_options(args);
    if (opt.rest.empty()) {
      err << kUsage;
      return 1;
    }
    if (opt.rest[0] == "--help" || opt.rest[0] == "help") {
      out << kUsage;
      return 0;
    }
    return dispatch(opt, out);
  } catch (const InvariantViolation& e) {
    err << "internal invariant violation: " << e.what() << "\n";
    return 2;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const OverflowError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace enriques
