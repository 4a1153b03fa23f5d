// Command-line front end: classification of torus characters, subgroup
// filtration exports, catalog dumps, finite-ring verification suites, and
// invariant-ring summaries. JSON in, JSON out, deterministic for a fixed
// manifest.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "satake/report.hpp"

namespace {

using satake::json;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitInputError = 2;
constexpr int kExitCapExceeded = 3;

void write_output(const std::string& path, const json& j) {
  std::string text = j.dump(2);
  text.push_back('\n');
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  // single atomic write
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::invalid_argument("cannot open output path " + path);
  out << text;
}

json read_input(const std::string& spec) {
  std::string text;
  if (spec.empty() || spec == "-") {
    std::stringstream ss;
    ss << std::cin.rdbuf();
    text = ss.str();
  } else if (!spec.empty() && (spec[0] == '{' || spec[0] == '[')) {
    text = spec;
  } else {
    std::ifstream in(spec);
    if (!in) throw std::invalid_argument("cannot open input path " + spec);
    std::stringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw std::invalid_argument("input is not valid JSON");
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"classification of smooth torus characters and filtration subgroups"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string input, output;
  uint64_t seed = 1;
  size_t cap_orbit = satake::kDefaultOrbitCap;
  size_t cap_group = satake::kDefaultGroupCap;
  long long prime_override = 0;
  int level_override = 0;
  app.add_option("--input", input, "input path, inline JSON, or - for stdin");
  app.add_option("--output", output, "output path, - for stdout (default)");
  app.add_option("--seed", seed, "PRNG seed for sampled checks");
  app.add_option("--cap-orbit", cap_orbit, "orbit enumeration cap");
  app.add_option("--cap-group", cap_group, "finite group enumeration cap");
  app.add_option("--prime", prime_override, "override the input prime");
  app.add_option("--level", level_override, "override the input level");

  auto* cmd_classify = app.add_subcommand("classify", "classify a torus character");
  int satake_bound = 1;
  bool emit_orbit = false;
  cmd_classify->add_option("--satake-bound", satake_bound,
                           "coordinate bound of the target-ring summary");
  cmd_classify->add_flag("--orbit-transversal", emit_orbit,
                         "include witness words for the character orbit");

  auto* cmd_table = app.add_subcommand("table", "regenerate the group/character table");

  auto* cmd_verify = app.add_subcommand("verify", "run verification suites");
  std::vector<std::string> suites;
  long long trials = 0;
  cmd_verify->add_option("--suite", suites, "suite names (see --list)");
  cmd_verify->add_option("--trials", trials, "trial count override for sampled checks");
  bool list_suites = false;
  cmd_verify->add_flag("--list", list_suites, "list suite names");

  auto* cmd_satake = app.add_subcommand("satake", "invariant-ring summary");
  std::string group = "GL";
  int group_n = 2;
  std::vector<int> levi;
  bool full_weyl = false;
  int bound = 2;
  cmd_satake->add_option("--group", group, "catalog family");
  cmd_satake->add_option("--n", group_n, "size parameter");
  cmd_satake->add_option("--levi", levi, "simple positions generating the subgroup");
  cmd_satake->add_flag("--full-weyl", full_weyl, "use the full Weyl group");
  cmd_satake->add_option("--bound", bound, "coordinate bound");

  auto* cmd_catalog = app.add_subcommand("catalog", "dump a catalog root datum");
  std::string cat_group = "GL";
  int cat_n = 2;
  cmd_catalog->add_option("--group", cat_group, "catalog family");
  cmd_catalog->add_option("--n", cat_n, "size parameter");

  CLI11_PARSE(app, argc, argv);

  satake::RunManifest man;
  man.input = input;
  man.seed = seed;
  man.cap_orbit = cap_orbit;
  man.cap_group = cap_group;
  man.output = output;

  try {
    if (cmd_classify->parsed()) {
      man.command = "classify";
      satake::CharacterInput in = satake::parse_character_input(read_input(input));
      if (prime_override) in.p = prime_override;
      if (level_override) in.level = level_override;
      write_output(output, satake::run_classify(man, in, satake_bound, emit_orbit));
      return kExitOk;
    }
    if (cmd_table->parsed()) {
      man.command = "table";
      json out;
      out["manifest"] = man.to_json();
      out["table"] = satake::table_to_json(satake::regenerate_table());
      write_output(output, out);
      return kExitOk;
    }
    if (cmd_verify->parsed()) {
      man.command = "verify";
      if (list_suites) {
        json out = json(satake::verify_suite_names());
        write_output(output, out);
        return kExitOk;
      }
      json out;
      out["manifest"] = man.to_json();
      json all = json::array();
      bool ok = true;
      for (const std::string& s : suites) {
        satake::SuiteResult r = satake::run_verify_suite(s, seed, trials, cap_group);
        for (auto& c : r.checks) all.push_back(c);
        ok = ok && r.ok;
      }
      out["checks"] = all;
      out["result"] = ok ? "pass" : "fail";
      write_output(output, out);
      return ok ? kExitOk : kExitCheckFailure;
    }
    if (cmd_satake->parsed()) {
      man.command = "satake";
      satake::RootDatum d = satake::catalog_lookup(group, group_n);
      if (full_weyl) {
        levi.clear();
        for (int s = 0; s < d.num_simple(); ++s) levi.push_back(s);
      }
      satake::InvariantRing ring(d, levi, cap_orbit);
      json out;
      out["manifest"] = man.to_json();
      out["datum"] = satake::datum_to_json(d);
      out["ring"] = satake::summary_to_json(ring.summary(bound));
      write_output(output, out);
      return kExitOk;
    }
    if (cmd_catalog->parsed()) {
      man.command = "catalog";
      json out;
      out["manifest"] = man.to_json();
      out["datum"] = satake::datum_to_json(satake::catalog_lookup(cat_group, cat_n));
      write_output(output, out);
      return kExitOk;
    }
  } catch (const satake::cap_exceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return kExitCapExceeded;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "check failure: " << e.what() << "\n";
    return kExitCheckFailure;
  }
  return kExitInputError;
}
