#include <doctest.h>

#include <random>

#include "enriques/divisor_io.hpp"

using namespace enriques;

TEST_CASE("parse worked examples") {
  DivisorClass a = parse_divisor("3*E1+3*E2");
  CHECK(a == 3 * E1() + 3 * E2());
  CHECK(a.c == std::array<Coord, 10>{3, 3, 0, 0, 0, 0, 0, 0, 0, 0});

  DivisorClass b = parse_divisor("[0,1,0,0,0,0,0,0,0,0]");
  CHECK(b == E2());

  DivisorClass c = parse_divisor("E1 - 2*A1");
  CHECK(c.c == std::array<Coord, 10>{1, 0, -2, 0, 0, 0, 0, 0, 0, 0});
}

TEST_CASE("parser accepts insignificant whitespace and leading sign") {
  CHECK(parse_divisor(" 2*E1 +  E2 ") == 2 * E1() + E2());
  CHECK(parse_divisor("-E1+E2") == E2() - E1());
  CHECK(parse_divisor("[ 1 , 2 ,0,0,0,0,0,0,0, -1 ]").c ==
        std::array<Coord, 10>{1, 2, 0, 0, 0, 0, 0, 0, 0, -1});
}

TEST_CASE("parser errors carry a position") {
  CHECK_THROWS_AS(parse_divisor(""), ParseError);
  CHECK_THROWS_AS(parse_divisor("E3"), ParseError);
  CHECK_THROWS_AS(parse_divisor("A9"), ParseError);
  CHECK_THROWS_AS(parse_divisor("2E1"), ParseError);       // missing '*'
  CHECK_THROWS_AS(parse_divisor("E1 + "), ParseError);
  CHECK_THROWS_AS(parse_divisor("E1 E2"), ParseError);
  CHECK_THROWS_AS(parse_divisor("[1,2,3]"), ParseError);   // not 10 entries
  try {
    parse_divisor("E1+Q7");
  } catch (const ParseError& e) {
    CHECK(e.position() == 4);
    CHECK(std::string(e.what()).find("position 4") != std::string::npos);
  }
}

TEST_CASE("round-trip: format then parse is the identity") {
  std::mt19937_64 rng(71);
  std::uniform_int_distribution<Coord> dist(-9, 9);
  for (int i = 0; i < 1000; ++i) {
    DivisorClass d;
    for (auto& v : d.c) v = dist(rng);
    CHECK(parse_divisor(format_divisor(d)) == d);
  }
  CHECK(parse_divisor(format_divisor(DivisorClass{})) == DivisorClass{});
}

TEST_CASE("json schema instances") {
  CHECK(pair_json(18).dump() == R"({"value":18})");

  PhiResult r;
  r.value = 3;
  r.minimizers = {IsotropicClass{E1()}, IsotropicClass{E2()}};
  CHECK(phi_json(r).dump() ==
        R"({"value":3,"minimizers":[[1,0,0,0,0,0,0,0,0,0],[0,1,0,0,0,0,0,0,0,0]]})");

  Json dj = decompose_json(3 * E1() + 3 * E2(), 2, {});
  CHECK(dj["decompositions"].dump() == "[]");
}

TEST_CASE("certificate json carries exact rationals") {
  auto cert = plane_curve_certificate(5);
  Json j = certificate_json(cert);
  CHECK(j["verdict"] == "out-of-numeric-scope");
  bool found = false;
  for (const auto& s : j["steps"]) {
    if (s["rhs"] == "5/2") {
      found = true;
      CHECK(s["lhs"] == 3);
      CHECK(s["holds"] == false);
    }
  }
  CHECK(found);
}

TEST_CASE("json output is deterministic") {
  auto a = certificate_json(cliffdim_case1_certificate(4)).dump();
  auto b = certificate_json(cliffdim_case1_certificate(4)).dump();
  CHECK(a == b);
}
