#include "doctest.h"

#include "mukai/certificates.hpp"
#include "mukai/cli.hpp"
#include "mukai/serialize.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

using namespace mukai;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

const std::string kH2 = R"({"gram": [[2]], "basis": ["H"]})";
const std::string kElliptic = R"({"gram": [[-2, 1], [1, 0]], "basis": ["C", "f"]})";
const std::string kCone = R"({"generators": [[0, 1], [1, 2]], "reference": [1, 3]})";

}  // namespace

TEST_CASE("pair") {
  auto r = run({"pair", "--lattice", kH2, "--x", "(1,0,1)", "--y", "(1,0,1)"});
  CHECK(r.code == 0);
  CHECK(parse_json(r.out)["pairing"] == -2);
}

TEST_CASE("twist, reflect, classify, orth") {
  auto r = run({"twist", "--lattice", kH2, "--vector", "(1,0,1)", "--n", "(1)"});
  CHECK(r.code == 0);
  CHECK(vector_from_json(parse_json(r.out)["vector"]) == MukaiVector{1, {1}, 2});
  r = run({"reflect", "--lattice", kH2, "--vector", R"({"r": 2, "xi": [1], "a": -1})", "--v1", "(1,0,1)"});
  CHECK(r.code == 0);
  CHECK(vector_from_json(parse_json(r.out)["vector"]) == MukaiVector{1, {1}, -2});
  r = run({"reflect", "--lattice", kH2, "--vector", "(2,1,-1)", "--v1", "(1,0,0)"});
  CHECK(r.code == 2);
  r = run({"classify", "--lattice", kH2, "--vector", "(1,0,1)"});
  CHECK(r.code == 0);
  CHECK(parse_json(r.out)["spherical"] == true);
  r = run({"orth", "--lattice", kH2, "--vector", "(1,0,1)", "--format", "table"});
  CHECK(r.code == 0);
  CHECK(r.out.find("basis") != std::string::npos);
}

TEST_CASE("family and check") {
  auto r = run({"family", "--r", "2", "--d", "1", "--s", "3"});
  CHECK(r.code == 0);
  CHECK(vector_from_json(parse_json(r.out)["v"]) == MukaiVector{2, {1}, -1});
  r = run({"family", "--l", "2", "--r", "1", "--d", "1", "--r1", "1", "--s", "2"});
  CHECK(r.code == 0);
  CHECK(parse_json(r.out)["identities"]["v_square"] == 20);
  r = run({"family", "--r", "2", "--d", "1", "--s", "2"});
  CHECK(r.code == 2);
  r = run({"check", "--kind", "deformation_bound", "--param", "l=2", "--param", "r=1", "--param", "square=20"});
  CHECK(r.code == 0);
  CHECK(parse_json(r.out)["margin"] == "6");
  r = run({"check", "--kind", "mu_bound", "--param", "l=2", "--param", "square=8"});
  CHECK(r.code == 1);
  r = run({"check", "--kind", "mu_bound", "--param", "l=2"});
  CHECK(r.code == 2);
}

TEST_CASE("strata and mu-bound") {
  auto r = run({"strata", "--lattice", kH2, "--vector", "(2,1,-1)", "--v1", "(1,0,1)", "--i", "2"});
  CHECK(r.code == 0);
  CHECK(parse_json(r.out)["codim"] == 2);
  r = run({"mu-bound", "--square", "20", "--l", "2"});
  CHECK(r.code == 0);
  CHECK(parse_json(r.out)["bound"]["bound"] == "4");
  r = run({"mu-bound", "--square", "20", "--l", "2", "--oracle", "--lattice", R"({"gram": [[4]]})",
           "--vector", "(2,2,-1)"});
  CHECK(r.code == 0);
  CHECK(parse_json(r.out)["oracle"]["identity_verified"] == true);
  r = run({"mu-bound", "--square", "4", "--l", "2"});
  CHECK(r.code == 1);
}

TEST_CASE("walls and chambers") {
  auto r = run({"walls", "--lattice", kElliptic, "--vector", "(0,1,3,2)", "--cone", kCone});
  CHECK(r.code == 0);
  auto j = parse_json(r.out);
  CHECK(j["label"] == "numerical walls");
  auto n = j["walls"].size();
  r = run({"chambers", "--lattice", kElliptic, "--vector", "(0,1,3,2)", "--cone", kCone,
           "--subclasses", "[[0,1],[1,0],[1,1],[0,2],[0,3],[1,2]]"});
  CHECK(r.code == 0);
  j = parse_json(r.out);
  CHECK(j["walls"].size() == n);
  CHECK(j["chambers"]["chambers"].size() == n + 1);
  r = run({"walls", "--lattice", kElliptic, "--vector", "(1,1,3,2)", "--cone", kCone});
  CHECK(r.code == 2);
}

TEST_CASE("certify and verify") {
  auto r = run({"certify", "--rank", "2", "--l", "1", "--square", "6"});
  REQUIRE(r.code == 0);
  auto cert = parse_json(r.out);
  CHECK(vector_from_json(cert["final"]) == MukaiVector{1, {0}, -3});

  auto v = run({"verify", r.out});
  CHECK(v.code == 0);
  CHECK(parse_json(v.out)["accepted"] == true);

  cert["final"]["a"] = -2;
  const std::string path = "tampered_cli_test.json";
  {
    std::ofstream f(path);
    f << cert.dump();
  }
  v = run({"verify", path});
  CHECK(v.code == 1);
  CHECK_FALSE(parse_json(v.out)["failures"].empty());
  std::remove(path.c_str());

  CHECK(run({"certify", "--rank", "2", "--square", "-2"}).code == 1);
}

TEST_CASE("input errors exit with 2") {
  auto r = run({"verify", "{\"initial\": ["});
  CHECK(r.code == 2);
  CHECK(r.err.find("byte") != std::string::npos);
  CHECK(run({"verify", "no_such_file.json"}).code == 2);
  CHECK(run({"pair", "--lattice", kH2, "--x", "(1,0)", "--y", "(1,0,1)"}).code == 2);
  CHECK(run({"bogus"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"pair", "--lattice", kH2, "--x", "(1,0,1)", "--y", "(1,0,1)", "--format", "xml"}).code == 2);
}

TEST_CASE("--out writes to a file") {
  const std::string path = "cli_out_test.json";
  auto r = run({"pair", "--lattice", kH2, "--x", "(1,0,1)", "--y", "(1,0,0)", "--out", path});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream f(path);
  std::stringstream s;
  s << f.rdbuf();
  CHECK(parse_json(s.str())["pairing"] == -1);
  std::remove(path.c_str());
}
