#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <unistd.h>

#include "doctest.h"
#include "rcc8seq/cli.hpp"

using namespace rcc8seq;

namespace {

struct TempFile {
  std::filesystem::path path;
  explicit TempFile(const std::string& contents) {
    static int counter = 0;
    path = std::filesystem::temp_directory_path() /
           ("rcc8seq_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++) +
            ".qcn");
    std::ofstream out(path);
    out << contents;
  }
  ~TempFile() { std::error_code ec; std::filesystem::remove(path, ec); }
  std::string str() const { return path.string(); }
};

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("closure subcommand prints the worked partition example") {
  TempFile file(
      "semantics: partition\nlength: 4\nvars: x y\n"
      "x y : {TPP,NTPP} {PO,EQ} {EC,DC} {DC}\n");
  CliRun r = run({"closure", file.str()});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "semantics: partition\nlength: 4\nvars: x y\n"
        "x y : {TPP} {PO} {EC} {DC}\n");

  // Round trip: the printed network is a fixed point of the closure.
  Network reparsed = parse_network(r.out);
  CHECK(algebraic_closure(reparsed) == reparsed);
}

TEST_CASE("solve prints a verdict and a witness") {
  TempFile sat(
      "semantics: neighbour\nlength: 3\nvars: x y\n"
      "x y : {DC} * {PO}\n");
  CliRun r = run({"solve", sat.str()});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "SAT\nsemantics: neighbour\nlength: 3\nvars: x y\nx y : {DC} {EC} {PO}\n");

  CliRun forced = run({"solve", sat.str(), "--force-search"});
  CHECK(forced.code == 0);
  CHECK(forced.out == r.out);

  TempFile unsat(
      "semantics: neighbour\nlength: 2\nvars: x y\n"
      "x y : {NTPP} {DC}\n");
  CliRun u = run({"solve", unsat.str()});
  CHECK(u.code == 1);
  CHECK(u.out == "UNSAT\n");
}

TEST_CASE("an unconstrained network solves to some scenario") {
  TempFile file("semantics: neighbour\nlength: 2\nvars: x y z\n");
  CliRun r = run({"solve", file.str()});
  CHECK(r.code == 0);
  REQUIRE(r.out.rfind("SAT\n", 0) == 0);
  Network witness = parse_network(r.out.substr(4));
  CHECK(witness.is_scenario());
  CHECK(is_algebraically_consistent(witness));
}

TEST_CASE("classify subcommand prints the fragment report") {
  TempFile file(
      "semantics: partition\nlength: 2\nvars: x y\n"
      "x y : {TPP,NTPP,EQ} {NTPP,EQ}\n");
  CliRun r = run({"classify", file.str()});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "index 1: H8 C8 HNTPP FULL\nindex 2: C8 FULL\nPROP4\nTHEOREM1\n");
}

TEST_CASE("plan subcommand routes through the planner") {
  TempFile start("semantics: neighbour\nlength: 1\nvars: x y\nx y : {DC}\n");
  TempFile goal("semantics: neighbour\nlength: 1\nvars: x y\nx y : {PO}\n");
  CliRun r = run({"plan", "--start", start.str(), "--goal", goal.str(), "--steps", "3",
                  "--semantics", "neighbour"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "SAT\nsemantics: neighbour\nlength: 3\nvars: x y\nx y : {DC} {EC} {PO}\n");

  CliRun u = run({"plan", "--start", start.str(), "--goal", goal.str(), "--steps", "2",
                  "--semantics", "neighbour"});
  CHECK(u.code == 1);
  CHECK(u.out == "UNSAT\n");

  TempFile forbid("semantics: neighbour\nlength: 1\nvars: x y\nx y : {EC,PO}\n");
  CliRun inf = run({"plan", "--start", start.str(), "--goal", goal.str(), "--steps", "3",
                    "--constraints", forbid.str(), "--semantics", "neighbour"});
  CHECK(inf.code == 1);
  CHECK(inf.out == "UNSAT\n");
  CHECK(inf.err.find("start") != std::string::npos);
}

TEST_CASE("verify-paper prints one line per claim") {
  CliRun r = run({"verify-paper"});
  CHECK(r.code == 0);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 12);
  CHECK(r.out.find(" FAIL") == std::string::npos);
}

TEST_CASE("usage and parse errors exit with code 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"closure"}).code == 2);
  CHECK(run({"closure", "/nonexistent/file.qcn"}).code == 2);
  TempFile bad("semantics: neighbour\nlength: 2\nvars: x y\nx y : {DC}\n");
  CliRun r = run({"closure", bad.str()});
  CHECK(r.code == 2);
  CHECK(r.err.find("line 4") != std::string::npos);
  CHECK(run({"plan", "--start", bad.str(), "--goal", bad.str(), "--steps", "0",
             "--semantics", "sideways"})
            .code == 2);
}

TEST_CASE("help exits cleanly") {
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"solve", "--help"}).code == 0);
}
