#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "enriques/certificates.hpp"
#include "enriques/gonality.hpp"
#include "enriques/lattice.hpp"
#include "enriques/slice_enum.hpp"

namespace enriques {

/// Syntax error with a 1-based position into the source text.
class ParseError : public PreconditionError {
 public:
  ParseError(const std::string& what, size_t position);
  size_t position() const { return position_; }

 private:
  size_t position_;
};

/// Grammar: expr := ['+'|'-'] term (('+'|'-') term)*;
///          term := [integer '*'] generator;
///          generator in {E1, E2, A1..A8};
/// or a raw bracketed vector "[c1,...,c10]".  Whitespace is insignificant.
DivisorClass parse_divisor(std::string_view text);

/// Canonical form accepted back by parse_divisor (round-trip exact).
std::string format_divisor(const DivisorClass& D);

using Json = nlohmann::ordered_json;

Json to_json(const DivisorClass& D);
Json pair_json(Coord value);
Json scalar_json(Coord value);
Json phi_json(const PhiResult& r);
Json classify_json(const SystemClass& s);
Json ample_json(Ampleness a);
Json pair_decompositions_json(const PairDecompositions& pd);
Json decomposition_json(const Decomposition& dec, Coord minimal_d);
Json decompose_json(const DivisorClass& C, Coord d_max,
                    const std::vector<Decomposition>& decs);
Json report_json(const GonalityReport& rep, bool with_window);
Json steiner_json(const SteinerReport& rep);
Json rational_json(const Rational& r);
Json certificate_json(const Certificate& cert);

std::string l_type_name(LType t);
std::string mode_name(DecMode m);
std::string conformance_name(Conformance c);

}  // namespace enriques
