#include <sys/wait.h>

#include <cstdio>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace {

using Json = nlohmann::ordered_json;

struct RunResult {
  int status = -1;
  std::string out;
};

// ctest runs in the build root, next to the binary
RunResult run(const std::string& args) {
  RunResult r;
  std::string cmd = "./ews " + args + " 2>/dev/null";
  FILE* f = popen(cmd.c_str(), "r");
  REQUIRE(f != nullptr);
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, f)) > 0) r.out.append(buf, n);
  int rc = pclose(f);
  if (WIFEXITED(rc)) r.status = WEXITSTATUS(rc);
  return r;
}

bool has(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("table reports the published generator count") {
  RunResult r = run("table --case 7 --n 2 --m 2 --l 2");
  REQUIRE(r.status == 0);
  Json j = Json::parse(r.out);
  CHECK(j["schema"] == 1);
  CHECK(j["case"] == 7);
  CHECK(j["count"] == 6);
  CHECK(j["generators"].size() == 6);
  CHECK(j["presentation"]["lattice"].is_array());

  RunResult t = run("table --case 1 --n 2 --format tsv");
  CHECK(t.status == 0);
  CHECK(t.out.rfind("# schema 1\n", 0) == 0);
  int lines = 0;
  for (char c : t.out) lines += c == '\n';
  CHECK(lines == 5);  // header plus 2n generators
}

TEST_CASE("verify passes and is deterministic") {
  std::string args = "verify --case 6 --n 3 --trials 3 --seed 5";
  RunResult a = run(args), b = run(args);
  REQUIRE(a.status == 0);
  CHECK(a.out == b.out);
  Json j = Json::parse(a.out);
  CHECK(j["ok"] == true);
  CHECK(j["seed"] == 5);
  CHECK(j["checks"].contains("relations"));
  CHECK(j["checks"].contains("canonical_reconstruction"));
  CHECK(j["checks"].contains("irreducibility"));

  RunResult c = run("verify --case 8 --n 1 --m 1 --trials 2 --format tsv");
  CHECK(c.status == 0);
  CHECK(c.out.rfind("# schema 1\n", 0) == 0);
  CHECK(has(c.out, "all\tok\n"));
}

TEST_CASE("usage errors exit with code 2") {
  CHECK(run("table --case 4 --n 4").status == 2);
  CHECK(run("table --case 9 --n 2").status == 2);
  CHECK(run("table --case 1 --n 2 --m 1").status == 2);
  CHECK(run("canonical --case 1 --n 2").status == 2);
  CHECK(run("branch --case 1 --n 3 1,0").status == 2);
  CHECK(run("").status != 0);
}

TEST_CASE("spectrum lists restricted weights with multiplicities") {
  RunResult r = run("spectrum --case 1 --n 2 --degree-bound 1");
  CHECK(r.status == 0);
  CHECK(r.out.rfind("# schema 1\n", 0) == 0);
  CHECK(has(r.out, "\t"));

  RunResult j = run("spectrum --case 2 --n 3 --degree-bound 2 --format json");
  CHECK(j.status == 0);
  Json js = Json::parse(j.out);
  CHECK(js["entries"].is_array());
  CHECK(js["indecomposables"].is_array());
  CHECK(js["degree_bound"] == 2);
}

TEST_CASE("branching a weight along the chain") {
  RunResult r = run("branch --case 1 --n 3 1,0,1");
  REQUIRE(r.status == 0);
  Json j = Json::parse(r.out);
  CHECK(j["ok"] == true);
  CHECK(j["dimension"] == j["dimension_sum"]);
  CHECK(j["chain"] == "SL_4 -> SL_3");

  // adjoint of SL_3 restricted to SL_2 doubles the vector weight
  RunResult t = run("branch --case 1 --n 2 --format tsv 1,1");
  CHECK(t.status == 0);
  CHECK(t.out.rfind("# schema 1\n", 0) == 0);
  CHECK(has(t.out, "1\t2\n"));
}

TEST_CASE("irreducibility certificates per generator") {
  RunResult r = run("irreducible --case 3 --n 3 --m 2");
  CHECK(r.status == 0);
  CHECK(r.out.rfind("# schema 1\n", 0) == 0);
  CHECK(has(r.out, "Phi2\ta2\tirreducible"));
  CHECK(has(r.out, "D\ta1\tirreducible"));
  CHECK(!has(r.out, "FAIL"));

  RunResult j = run("irreducible --case 5 --n 1 --m 2 --format json");
  CHECK(j.status == 0);
  Json js = Json::parse(j.out);
  CHECK(js["ok"] == true);
}

TEST_CASE("canonical reduction report") {
  RunResult r = run("canonical --case 5 --n 1 --m 1 --seed 3");
  REQUIRE(r.status == 0);
  Json j = Json::parse(r.out);
  CHECK(j["ok"] == true);
  CHECK(j["checks"]["reconstruct"]["ok"] == true);
  CHECK(j["checks"]["transcript"]["ok"] == true);
  CHECK(j["slices"].size() == 2);

  RunResult t = run("canonical --case 6 --n 3 --seed 4 --format tsv");
  CHECK(t.status == 0);
  CHECK(t.out.rfind("# schema 1\n", 0) == 0);
  CHECK(has(t.out, "# orbit pair columns\n"));
}
