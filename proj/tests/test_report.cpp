#include <fstream>

#include "doctest.h"
#include "satake/report.hpp"

using namespace satake;

TEST_CASE("character input parsing and schema errors") {
  json good = json::parse(
      R"({"group":"GL","n":3,"p":5,"level":2,"exponents":["1/4","1/4","0"]})");
  CharacterInput in = parse_character_input(good);
  CHECK(in.group == "GL");
  CHECK(in.n == 3);
  CHECK(in.p == 5);
  CHECK(in.level == 2);
  CHECK(in.exponents == std::vector<Rat>{Rat(1, 4), Rat(1, 4), Rat(0)});

  CHECK_THROWS_AS(parse_character_input(json::parse(R"({"group":"GL"})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      parse_character_input(json::parse(
          R"({"group":"GL","n":2,"p":5,"level":1,"exponents":[1.5]})")),
      std::invalid_argument);
}

TEST_CASE("classification report serializes deterministically") {
  RunManifest man;
  man.command = "classify";
  man.seed = 7;
  CharacterInput in;
  in.group = "GL";
  in.n = 3;
  in.p = 5;
  in.level = 2;
  in.exponents = {Rat(0), Rat(0), Rat(1, 5)};
  json a = run_classify(man, in, 1, false);
  json b = run_classify(man, in, 1, false);
  CHECK(a.dump() == b.dump());  // byte-identical for identical manifests
  CHECK(a["report"]["strongly_parabolic"] == true);
  CHECK(a["filtration_k"]["exponent_matrix"] ==
        json(Mat{{0, 0, 1}, {0, 0, 1}, {1, 1, 0}}));
  CHECK(a["report"]["easy_factors"].size() == 2);
}

TEST_CASE("fixture input classifies as in the fixture") {
  std::ifstream f(std::string(FIXTURES_DIR) + "/gl3_example.json");
  REQUIRE(f.good());
  json fixture = json::parse(f);
  RunManifest man;
  man.command = "classify";
  json out = run_classify(man, parse_character_input(fixture), 1, false);
  CHECK(out["report"]["parabolic"] == true);
  CHECK(out["report"]["levi_subset"] == json(std::vector<int>{0}));
}

TEST_CASE("table regeneration covers the expected rows") {
  auto rows = regenerate_table();
  int failing = 0;
  for (const TableRow& r : rows) {
    if (!r.properties_hold) {
      ++failing;
      // the only generic-family member whose hypothesis degenerates
      CHECK(r.family == "SO");
      CHECK(r.n == 4);
    }
  }
  CHECK(failing == 1);
  // spot-check conclusions
  bool saw_gl = false, saw_pgl = false;
  for (const TableRow& r : rows) {
    if (r.family == "GL" && r.n == 5) {
      saw_gl = true;
      CHECK(r.conclusion == "all characters are easy");
    }
    if (r.family == "PGL" && r.n == 5) {
      saw_pgl = true;
      CHECK(r.conclusion == "all characters are strongly parabolic");
    }
  }
  CHECK(saw_gl);
  CHECK(saw_pgl);
}

TEST_CASE("verify suites: known names run, unknown names rejected") {
  SuiteResult r = run_verify_suite("comms", 1);
  CHECK(r.ok);
  CHECK(r.checks.size() == 3);
  CHECK_THROWS_AS(run_verify_suite("nope", 1), std::invalid_argument);
}

TEST_CASE("orbit transversal export") {
  RunManifest man;
  man.command = "classify";
  CharacterInput in;
  in.group = "GL";
  in.n = 3;
  in.p = 7;
  in.level = 1;
  in.exponents = {Rat(1, 6), Rat(1, 3), Rat(0)};
  json out = run_classify(man, in, 1, true);
  REQUIRE(out.contains("orbit_transversal"));
  CHECK(out["orbit_transversal"].size() == out["report"]["orbit_size"].get<size_t>());
}
