#include "enriques/divisor_io.hpp"

#include <cctype>

namespace enriques {

ParseError::ParseError(const std::string& what, size_t position)
    : PreconditionError("parse error at position " + std::to_string(position) + ": " + what),
      position_(position) {}

namespace {

struct Cursor {
  std::string_view text;
  size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool done() const { return pos >= text.size(); }
  char peek() const { return text[pos]; }
  size_t human() const { return pos + 1; }
};

Coord parse_integer(Cursor& cur) {
  size_t start = cur.pos;
  bool neg = false;
  if (!cur.done() && (cur.peek() == '+' || cur.peek() == '-')) {
    neg = (cur.peek() == '-');
    ++cur.pos;
  }
  if (cur.done() || !std::isdigit(static_cast<unsigned char>(cur.peek())))
    throw ParseError("expected an integer", start + 1);
  Coord value = 0;
  while (!cur.done() && std::isdigit(static_cast<unsigned char>(cur.peek()))) {
    value = checked_add(checked_mul(value, 10), cur.peek() - '0');
    ++cur.pos;
  }
  return neg ? checked_neg(value) : value;
}

int parse_generator(Cursor& cur) {
  size_t start = cur.pos;
  if (cur.done() || !std::isalpha(static_cast<unsigned char>(cur.peek())))
    throw ParseError("expected a generator (E1, E2, A1..A8)", cur.human());
  size_t end = cur.pos;
  while (end < cur.text.size() &&
         std::isalnum(static_cast<unsigned char>(cur.text[end])))
    ++end;
  std::string name(cur.text.substr(cur.pos, end - cur.pos));
  cur.pos = end;
  if (name == "E1") return 0;
  if (name == "E2") return 1;
  if (name.size() == 2 && name[0] == 'A' && name[1] >= '1' && name[1] <= '8')
    return 2 + (name[1] - '1');
  throw ParseError("unknown generator '" + name + "'", start + 1);
}

DivisorClass parse_raw_vector(Cursor& cur) {
  ++cur.pos;  // consume '['
  DivisorClass out;
  for (int i = 0; i < kRank; ++i) {
    cur.skip_ws();
    out.c[i] = parse_integer(cur);
    cur.skip_ws();
    if (i + 1 < kRank) {
      if (cur.done() || cur.peek() != ',')
        throw ParseError("expected ',' in bracketed vector", cur.human());
      ++cur.pos;
    }
  }
  cur.skip_ws();
  if (cur.done() || cur.peek() != ']')
    throw ParseError("expected ']' closing a 10-entry vector", cur.human());
  ++cur.pos;
  cur.skip_ws();
  if (!cur.done()) throw ParseError("trailing text after vector", cur.human());
  return out;
}

}  // namespace

DivisorClass parse_divisor(std::string_view text) {
  Cursor cur{text};
  cur.skip_ws();
  if (cur.done()) throw ParseError("empty divisor expression", 1);
  if (cur.peek() == '[') return parse_raw_vector(cur);

  DivisorClass out;
  Coord sign = 1;
  if (cur.peek() == '+' || cur.peek() == '-') {
    sign = (cur.peek() == '-') ? -1 : 1;
    ++cur.pos;
    cur.skip_ws();
  }
  while (true) {
    Coord coeff = 1;
    if (!cur.done() && std::isdigit(static_cast<unsigned char>(cur.peek()))) {
      coeff = parse_integer(cur);
      cur.skip_ws();
      if (cur.done() || cur.peek() != '*')
        throw ParseError("expected '*' after a coefficient", cur.human());
      ++cur.pos;
      cur.skip_ws();
    }
    int gen = parse_generator(cur);
    out.c[gen] = checked_add(out.c[gen], checked_mul(sign, coeff));
    cur.skip_ws();
    if (cur.done()) break;
    if (cur.peek() == '+' || cur.peek() == '-') {
      sign = (cur.peek() == '-') ? -1 : 1;
      ++cur.pos;
      cur.skip_ws();
    } else {
      throw ParseError("expected '+' or '-'", cur.human());
    }
  }
  return out;
}

std::string format_divisor(const DivisorClass& D) {
  static const char* names[kRank] = {"E1", "E2", "A1", "A2", "A3", "A4",
                                     "A5", "A6", "A7", "A8"};
  if (D.is_zero()) return "[0,0,0,0,0,0,0,0,0,0]";
  std::string out;
  for (int i = 0; i < kRank; ++i) {
    Coord v = D.c[i];
    if (v == 0) continue;
    if (!out.empty()) out += (v > 0) ? "+" : "-";
    else if (v < 0) out += "-";
    Coord a = v < 0 ? checked_neg(v) : v;
    if (a != 1) {
      out += std::to_string(a);
      out += "*";
    }
    out += names[i];
  }
  return out;
}

Json to_json(const DivisorClass& D) {
  Json arr = Json::array();
  for (Coord v : D.c) arr.push_back(v);
  return arr;
}

Json pair_json(Coord value) { return Json{{"value", value}}; }

Json scalar_json(Coord value) { return Json{{"value", value}}; }

Json phi_json(const PhiResult& r) {
  Json j;
  j["value"] = r.value;
  Json mins = Json::array();
  for (const auto& m : r.minimizers) mins.push_back(to_json(m.cls));
  j["minimizers"] = mins;
  return j;
}

Json ample_json(Ampleness a) {
  const char* s = a == Ampleness::Ample ? "ample"
                  : a == Ampleness::NotAmple ? "not-ample"
                                             : "unknown-by-criterion";
  return Json{{"ampleness", s}};
}

Json classify_json(const SystemClass& s) {
  Json j;
  switch (s.kind) {
    case SystemClass::Kind::BigIrreducible:
      j["kind"] = "big-irreducible";
      j["dim"] = s.dim;
      break;
    case SystemClass::Kind::Isotropic:
      j["kind"] = "isotropic";
      j["multiplicity"] = s.multiplicity;
      j["primitive_part"] = to_json(s.primitive_part);
      break;
    case SystemClass::Kind::Invalid:
      j["kind"] = "invalid";
      break;
  }
  return j;
}

Json pair_decompositions_json(const PairDecompositions& pd) {
  Json j;
  j["l_square"] = pd.l_square;
  if (pd.l_square == 2) {
    Json pairs = Json::array();
    for (const auto& [a, b] : pd.pairs) pairs.push_back(Json::array({to_json(a), to_json(b)}));
    j["pairs"] = pairs;
  } else {
    j["multiplicity"] = pd.multiplicity;
    j["primitive_part"] = to_json(pd.primitive_part);
    j["kind"] = pd.doubled_half_fiber ? "doubled-half-fiber" : "neither";
  }
  return j;
}

std::string l_type_name(LType t) {
  switch (t) {
    case LType::DoubledHalfFiber:
      return "DoubledHalfFiber";
    case LType::TwoHalfFibers:
      return "TwoHalfFibers";
    case LType::Other:
      return "Other";
  }
  return "?";
}

std::string mode_name(DecMode m) {
  return m == DecMode::Strict ? "strict" : "boundary";
}

std::string conformance_name(Conformance c) {
  switch (c) {
    case Conformance::Conforms:
      return "conforms";
    case Conformance::Violates:
      return "violates";
    case Conformance::NotApplicable:
      return "not-applicable";
  }
  return "?";
}

Json decomposition_json(const Decomposition& dec, Coord minimal_d) {
  Json j;
  j["L"] = to_json(dec.L);
  j["M"] = to_json(dec.M);
  j["d"] = dec.d;
  j["mode"] = mode_name(dec.mode);
  j["L_type"] = l_type_name(dec.l_type);
  j["L_sq"] = dec.l_sq;
  j["M_sq"] = dec.m_sq;
  j["ML_sq"] = dec.ml_sq;
  Json flags;
  flags["l_sq_nonneg"] = dec.flags.l_sq_nonneg;
  flags["m_sq_vs_d"] = dec.flags.m_sq_vs_d;
  flags["d_vs_l_sq"] = dec.flags.d_vs_l_sq;
  flags["ml_sq_vs_zero"] = dec.flags.ml_sq_vs_zero;
  flags["l_in_cone"] = dec.flags.l_in_cone;
  flags["m_in_cone"] = dec.flags.m_in_cone;
  flags["ml_in_cone"] = dec.flags.ml_in_cone;
  flags["l_fixed_component_free"] = dec.flags.l_fixed_component_free;
  j["flags"] = flags;
  j["minimal"] = (dec.d == minimal_d);
  j["conformance"] = conformance_name(classify_minimal_L(dec, minimal_d));
  return j;
}

Json decompose_json(const DivisorClass& C, Coord d_max,
                    const std::vector<Decomposition>& decs) {
  Json j;
  j["C"] = to_json(C);
  j["d_max"] = d_max;
  Coord minimal_d = decs.empty() ? -1 : decs.front().d;
  Json arr = Json::array();
  for (const auto& dec : decs) arr.push_back(decomposition_json(dec, minimal_d));
  j["decompositions"] = arr;
  return j;
}

Json report_json(const GonalityReport& rep, bool with_window) {
  Json j;
  j["C"] = to_json(rep.C);
  j["genus"] = rep.g;
  j["phi"] = rep.phi_value;
  Json mins = Json::array();
  for (const auto& m : rep.phi_minimizers) mins.push_back(to_json(m.cls));
  j["phi_minimizers"] = mins;
  j["bn_gon_ceiling"] = rep.bn_gon_ceiling;
  if (rep.bn_cliff_ceiling)
    j["bn_cliff_ceiling"] = *rep.bn_cliff_ceiling;
  else
    j["bn_cliff_ceiling"] = nullptr;
  if (rep.lemma_cliff_upper)
    j["lemma_cliff_upper"] = *rep.lemma_cliff_upper;
  else
    j["lemma_cliff_upper"] = nullptr;
  if (rep.gon_upper_from_pencil)
    j["gon_upper_from_pencil"] = *rep.gon_upper_from_pencil;
  else
    j["gon_upper_from_pencil"] = nullptr;
  if (!rep.lemma_note.empty()) j["lemma_note"] = rep.lemma_note;
  if (with_window) {
    if (rep.candidate_gon)
      j["candidate_gon"] = *rep.candidate_gon;
    else
      j["candidate_gon"] = nullptr;
    if (rep.window) {
      Json w;
      if (rep.window->lo)
        w["lo"] = *rep.window->lo;
      else
        w["lo"] = nullptr;
      w["hi"] = rep.window->hi;
      j["window"] = w;
    }
    if (!rep.window_note.empty()) j["window_note"] = rep.window_note;
    Coord minimal_d = rep.decompositions.empty() ? -1 : rep.decompositions.front().d;
    Json arr = Json::array();
    for (const auto& dec : rep.decompositions)
      arr.push_back(decomposition_json(dec, minimal_d));
    j["decompositions"] = arr;
  }
  return j;
}

Json steiner_json(const SteinerReport& rep) {
  Json j;
  j["L"] = to_json(rep.L);
  j["M"] = to_json(rep.M);
  j["C"] = to_json(rep.C);
  j["base_points_L"] = rep.base_points_L;
  j["base_points_M"] = rep.base_points_M;
  j["gon_upper"] = rep.gon_upper;
  j["cliff_candidate"] = rep.cliff_candidate;
  j["dim_C"] = rep.dim_C;
  j["stratum_codim"] = rep.stratum_codim;
  return j;
}

Json rational_json(const Rational& r) {
  if (r.is_integer()) return Json(r.num);
  return Json(r.str());
}

Json certificate_json(const Certificate& cert) {
  Json j;
  j["name"] = cert.name;
  Json params;
  for (const auto& [k, v] : cert.parameters) params[k] = rational_json(v);
  j["parameters"] = params;
  Json steps = Json::array();
  for (const auto& s : cert.steps) {
    Json js;
    js["desc"] = s.desc;
    js["anchor"] = s.anchor;
    js["lhs"] = rational_json(s.lhs);
    js["rel"] = s.rel;
    js["rhs"] = rational_json(s.rhs);
    js["holds"] = s.holds;
    js["kind"] = s.kind == StepKind::Assertion
                     ? "assertion"
                     : (s.kind == StepKind::Applicability ? "applicability" : "info");
    steps.push_back(js);
  }
  j["steps"] = steps;
  j["verdict"] = cert.verdict.str();
  return j;
}

}  // namespace enriques
