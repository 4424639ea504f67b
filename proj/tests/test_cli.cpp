#include <doctest.h>

#include <sstream>

#include "enriques/cli.hpp"

using namespace enriques;

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("pair and genus subcommands") {
  auto r = cli({"pair", "3*E1+3*E2", "3*E1+3*E2"});
  CHECK(r.code == 0);
  CHECK(r.out == "value: 18\n");

  auto j = cli({"--json", "pair", "3*E1+3*E2", "3*E1+3*E2"});
  CHECK(j.out == "{\"value\":18}\n");

  auto g = cli({"genus", "4*E1+3*E2"});
  CHECK(g.out == "value: 13\n");
}

TEST_CASE("phi subcommand") {
  auto r = cli({"--json", "phi", "[1,1,0,0,0,0,0,0,0,0]"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "{\"value\":1,\"minimizers\":[[1,0,0,0,0,0,0,0,0,0],[0,1,0,0,0,0,0,0,0,0]]}\n");
}

TEST_CASE("window subcommand reports the candidate and the window") {
  auto r = cli({"window", "3*E1+3*E2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("candidate gon(|C|): 4") != std::string::npos);
  CHECK(r.out.find("window: [4, 6]") != std::string::npos);
  CHECK(r.out.find("TwoHalfFibers") != std::string::npos);
}

TEST_CASE("cert subcommands") {
  auto r = cli({"cert", "cliffdim", "--r", "10", "--case", "2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("g_min=163") != std::string::npos);

  auto p = cli({"cert", "plane-curve", "--degree", "5"});
  CHECK(p.code == 0);
  CHECK(p.out.find("out-of-numeric-scope") != std::string::npos);
  CHECK(p.out.find("3 <= 5/2") != std::string::npos);
}

TEST_CASE("exit codes") {
  CHECK(cli({}).code == 1);                                  // usage
  CHECK(cli({"frobnicate"}).code == 1);                      // unknown command
  CHECK(cli({"genus", "A1"}).code == 1);                     // precondition
  CHECK(cli({"phi", "E1"}).code == 1);                       // not in the cone
  CHECK(cli({"pair", "E1"}).code == 1);                      // missing argument
  CHECK(cli({"pair", "E1+Q", "E1"}).code == 1);              // parse error
  CHECK(cli({"--polarization", "E1", "pair", "E1", "E2"}).code == 1);  // h^2 = 0
  CHECK(cli({"--help"}).code == 0);
}

TEST_CASE("unknown command prints usage") {
  auto r = cli({"frobnicate"});
  CHECK(r.err.find("unknown command") != std::string::npos);
}

TEST_CASE("json output is byte-identical across runs") {
  auto a = cli({"--json", "window", "3*E1+3*E2"});
  auto b = cli({"--json", "window", "3*E1+3*E2"});
  CHECK(a.out == b.out);
  CHECK(!a.out.empty());
}

TEST_CASE("polarization flag flips the effective side") {
  // with h = -E1-E2 ... not a valid polarization (h^2 = 2 > 0 though): the
  // cone side flips, so -E1 becomes the effective half-fiber.
  auto r = cli({"--json", "--polarization", "[-1,-1,0,0,0,0,0,0,0,0]", "phi",
                "[-3,-3,0,0,0,0,0,0,0,0]"});
  CHECK(r.code == 0);
  CHECK(r.out.find("\"value\":3") != std::string::npos);
}

TEST_CASE("phi ceiling flag may only raise") {
  auto raised = cli({"--json", "--phi-ceiling", "9", "phi", "3*E1+3*E2"});
  auto base = cli({"--json", "phi", "3*E1+3*E2"});
  CHECK(raised.out == base.out);
  auto lowered = cli({"--json", "--phi-ceiling", "1", "phi", "3*E1+3*E2"});
  CHECK(lowered.out == base.out);
}
