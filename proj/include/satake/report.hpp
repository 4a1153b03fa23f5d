#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "satake/character.hpp"
#include "satake/filtration.hpp"
#include "satake/finite_verify.hpp"
#include "satake/satake_target.hpp"

namespace satake {

using json = nlohmann::ordered_json;

// Everything that determines a run; echoed into every report.
struct RunManifest {
  std::string command;
  std::string input;  // path or inline JSON
  uint64_t seed = 1;
  size_t cap_orbit = kDefaultOrbitCap;
  size_t cap_group = kDefaultGroupCap;
  std::string output;  // path or "-"
  json to_json() const;
};

struct CharacterInput {
  std::string group;
  int n = 0;
  i64 p = 0;
  int level = 1;
  std::vector<Rat> exponents;
};

// Parses {"group","n","p","level","exponents":["a/b",...]}; throws
// std::invalid_argument on schema violations.
CharacterInput parse_character_input(const json& j);

json datum_to_json(const RootDatum& d);
json report_to_json(const RootDatum& d, const ClassificationReport& rep);
json spec_to_json(const FiltrationSpec& spec);
json check_to_json(const CheckOutcome& c);
json summary_to_json(const RingSummary& s);

// classify + filtration + target summary aggregation
json run_classify(const RunManifest& man, const CharacterInput& in,
                  int satake_bound = 1, bool emit_orbit = false);

// Table regeneration: one entry per (family, size) instance with the
// verified property flags and the conclusion string of its row.
struct TableRow {
  std::string family;
  int n = 0;  // 0 for exceptional entries
  int row = 0;  // 1..4, the table row whose properties are being checked
  bool properties_hold = false;
  std::string conclusion;  // row conclusion when properties_hold
};
std::vector<TableRow> regenerate_table();
json table_to_json(const std::vector<TableRow>& rows);

// Named verification suites; returns per-check JSON and overall pass flag.
struct SuiteResult {
  bool ok = true;
  json checks = json::array();
};
SuiteResult run_verify_suite(const std::string& name, uint64_t seed,
                             i64 trials_override = 0,
                             size_t group_cap = kDefaultGroupCap);
std::vector<std::string> verify_suite_names();

}  // namespace satake
