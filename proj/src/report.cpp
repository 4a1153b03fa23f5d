#include "satake/report.hpp"

#include <algorithm>
#include <sstream>

namespace satake {

json RunManifest::to_json() const {
  json j;
  j["command"] = command;
  j["input"] = input;
  j["seed"] = seed;
  j["cap_orbit"] = cap_orbit;
  j["cap_group"] = cap_group;
  j["output"] = output.empty() ? "-" : output;
  return j;
}

CharacterInput parse_character_input(const json& j) {
  CharacterInput in;
  try {
    in.group = j.at("group").get<std::string>();
    in.n = j.value("n", 0);
    in.p = j.at("p").get<i64>();
    in.level = j.at("level").get<int>();
    for (const auto& e : j.at("exponents")) {
      if (e.is_string())
        in.exponents.push_back(parse_fraction(e.get<std::string>()));
      else if (e.is_number_integer())
        in.exponents.push_back(Rat(e.get<i64>()));
      else
        throw std::invalid_argument("exponent entries must be strings or integers");
    }
  } catch (const json::exception& ex) {
    throw std::invalid_argument(std::string("bad character input: ") + ex.what());
  }
  return in;
}

namespace {

std::string vec_str(const Vec& v) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ")";
  return os.str();
}

json vec_json(const Vec& v) { return json(v); }

json mat_json(const Mat& m) {
  json j = json::array();
  for (const Vec& r : m) j.push_back(vec_json(r));
  return j;
}

}  // namespace

json datum_to_json(const RootDatum& d) {
  json j;
  j["name"] = d.name;
  j["family"] = d.family;
  j["size_param"] = d.size_param;
  j["rank"] = d.rank;
  j["roots"] = mat_json(d.roots);
  j["coroots"] = mat_json(d.coroots);
  j["simple_indices"] = json(d.simple);
  j["excluded_primes"] = json(d.excluded_primes);
  return j;
}

json report_to_json(const RootDatum& d, const ClassificationReport& rep) {
  json j;
  j["parabolic"] = rep.parabolic;
  j["strongly_parabolic"] = rep.strongly_parabolic;
  j["easy"] = rep.easy;
  j["extendable"] = rep.extendable;
  j["w_invariant"] = rep.w_invariant;
  j["levi_subset"] = json(rep.levi_subset);
  j["orbit_size"] = rep.orbit_size;
  j["stabilizer_order"] = rep.stabilizer_order;
  json cond = json::array();
  for (int i = 0; i < d.num_roots(); ++i) {
    json c;
    c["root"] = vec_str(d.roots[i]);
    c["conductor"] = rep.conductors[i];
    cond.push_back(c);
  }
  j["conductors"] = cond;
  json ker = json::array();
  for (int i : rep.kernel_roots) ker.push_back(vec_str(d.roots[i]));
  j["kernel_subsystem"] = ker;
  if (rep.easy) {
    json fs = json::array();
    for (const EasyFactor& f : rep.easy_factors) {
      json e;
      e["rational_character"] = vec_json(f.rational_character);
      e["exponent"] = f.exponent.str();
      fs.push_back(e);
    }
    j["easy_factors"] = fs;
  }
  j["warnings"] = json(rep.warnings);
  return j;
}

json spec_to_json(const FiltrationSpec& spec) {
  const RootDatum& d = *spec.datum;
  json j;
  j["kind"] = spec.levi ? "K" : "J";
  if (spec.levi) j["levi_subset"] = json(*spec.levi);
  json table = json::array();
  for (int i = 0; i < d.num_roots(); ++i) {
    json row;
    row["root"] = vec_str(d.roots[i]);
    row["exponent"] = spec.exponents[i];
    table.push_back(row);
  }
  j["per_root"] = table;
  if (auto m = exponent_matrix(spec)) j["exponent_matrix"] = mat_json(*m);
  return j;
}

json check_to_json(const CheckOutcome& c) {
  json j;
  j["claim"] = c.claim;
  j["params"] = c.params;
  j["mode"] = c.mode;
  j["trials"] = c.trials;
  if (c.mode == "sampled") j["seed"] = c.seed;
  j["result"] = c.ok ? "pass" : "fail";
  if (!c.witness.empty()) j["witness"] = c.witness;
  return j;
}

json summary_to_json(const RingSummary& s) {
  json j;
  json basis = json::array();
  for (const Vec& v : s.basis) basis.push_back(vec_json(v));
  j["basis"] = basis;
  json prods = json::array();
  for (const auto& p : s.products) {
    json e;
    e["i"] = p.i;
    e["j"] = p.j;
    json terms = json::array();
    for (const auto& [v, c] : p.expansion) {
      json t;
      t["rep"] = vec_json(v);
      t["coeff"] = c;
      terms.push_back(t);
    }
    e["expansion"] = terms;
    e["clipped"] = p.clipped;
    prods.push_back(e);
  }
  j["products"] = prods;
  return j;
}

json run_classify(const RunManifest& man, const CharacterInput& in, int satake_bound,
                  bool emit_orbit) {
  RootDatum d = catalog_lookup(in.group, in.n);
  auto units = TruncatedUnits::make(in.p, in.level);
  TorusCharacter mu = TorusCharacter::make(d, units, in.exponents);
  ClassificationReport rep = classify(mu, man.cap_orbit);

  json out;
  out["manifest"] = man.to_json();
  json cj;
  cj["group"] = in.group;
  cj["n"] = in.n;
  cj["p"] = in.p;
  cj["level"] = in.level;
  json exps = json::array();
  for (const Rat& e : mu.exponents) exps.push_back(e.str());
  cj["exponents"] = exps;
  out["character"] = cj;
  out["datum"] = datum_to_json(d);
  out["report"] = report_to_json(d, rep);

  if (emit_orbit) {
    std::vector<WeylElement> gens;
    for (int s = 0; s < d.num_simple(); ++s) gens.push_back(simple_reflection(d, s));
    auto act = [&](int g, const std::vector<Rat>& q) {
      std::vector<Rat> next = gens[g].apply_char(q);
      for (Rat& x : next) x = x.mod1();
      return next;
    };
    auto orb = orbit<std::vector<Rat>>(mu.exponents, gens.size(), act, man.cap_orbit);
    json words = json::array();
    for (const auto& w : orb.words) words.push_back(json(w));
    out["orbit_transversal"] = words;
  }

  PositiveSystem pos = PositiveSystem::standard(d);
  out["filtration_j"] = spec_to_json(build_j_spec(mu, pos));
  if (rep.strongly_parabolic) {
    FiltrationSpec k = build_k_spec(mu, rep, pos);
    out["filtration_k"] = spec_to_json(k);
    InvariantRing ring(d, rep.levi_subset, man.cap_orbit);
    out["satake_target"] = summary_to_json(ring.summary(satake_bound));
  }
  return out;
}

// ---------------------------------------------------------------------------
// table regeneration

namespace {

struct RowSpec {
  int row;
  std::string conclusion;
  std::vector<std::pair<std::string, int>> members;
};

bool row_properties(int row, const StructuralPredicates& p) {
  bool hyp_iii = p.x_mod_q_free || p.no_a1_or_cn_factor;
  switch (row) {
    case 1: return p.simply_laced && p.x_mod_q_free && p.xv_mod_qv_free;
    case 2: return p.simply_laced && p.x_mod_q_free;
    case 3: return p.xv_mod_qv_free && hyp_iii;
    case 4: return hyp_iii;
  }
  return false;
}

}  // namespace

std::vector<TableRow> regenerate_table() {
  std::vector<RowSpec> rows;
  RowSpec r1{1, "all characters are easy", {}};
  for (int n = 1; n <= 8; ++n) r1.members.push_back({"GL", n});
  r1.members.push_back({"E8", 0});
  RowSpec r2{2, "all characters are strongly parabolic", {}};
  for (int n = 2; n <= 8; ++n) r2.members.push_back({"PGL", n});
  for (int n = 2; n <= 8; n += 2) r2.members.push_back({"GO", n});
  for (int n = 4; n <= 8; n += 2) r2.members.push_back({"SO/Z", n});
  r2.members.push_back({"E6/Z", 0});
  r2.members.push_back({"E7/Z", 0});
  RowSpec r3{3, "all parabolic characters are easy", {}};
  for (int n = 3; n <= 8; ++n) r3.members.push_back({"SL", n});
  for (int n = 2; n <= 8; n += 2) r3.members.push_back({"GSp", n});
  for (int n = 6; n <= 8; ++n) r3.members.push_back({"Spin", n});
  r3.members.push_back({"E6", 0});
  r3.members.push_back({"E7", 0});
  r3.members.push_back({"E8", 0});
  r3.members.push_back({"F4", 0});
  r3.members.push_back({"G2", 0});
  RowSpec r4{4, "all parabolic characters are strongly parabolic", {}};
  for (int n = 2; n <= 8; n += 2) r4.members.push_back({"Sp/Z", n});
  for (int n = 3; n <= 7; n += 2) r4.members.push_back({"GO", n});
  for (int n = 2; n <= 8; ++n) r4.members.push_back({"SO", n});

  std::vector<TableRow> out;
  for (const RowSpec& rs : {r1, r2, r3, r4}) {
    for (auto& [family, n] : rs.members) {
      RootDatum d = catalog_lookup(family, n);
      StructuralPredicates p = structural_predicates(d);
      TableRow t;
      t.family = family;
      t.n = n;
      t.row = rs.row;
      t.properties_hold = row_properties(rs.row, p);
      t.conclusion = t.properties_hold ? rs.conclusion : "";
      out.push_back(t);
    }
  }
  return out;
}

json table_to_json(const std::vector<TableRow>& rows) {
  json j = json::array();
  for (const TableRow& r : rows) {
    json e;
    e["family"] = r.family;
    if (r.n) e["n"] = r.n;
    e["row"] = r.row;
    e["properties_hold"] = r.properties_hold;
    if (r.properties_hold) e["conclusion"] = r.conclusion;
    j.push_back(e);
  }
  return j;
}

// ---------------------------------------------------------------------------
// verify suites

namespace {

FiltrationSpec iwahori_spec(const RootDatum& d) {
  FiltrationSpec s;
  s.datum = &d;
  s.exponents.assign(d.num_roots(), 0);
  for (int i = 0; i < d.num_roots(); ++i) s.exponents[i] = d.positive[i] ? 0 : 1;
  return s;
}

}  // namespace

std::vector<std::string> verify_suite_names() {
  return {"expl-comm", "comm-tech", "comms", "decomp", "kclosure", "mu", "all"};
}

SuiteResult run_verify_suite(const std::string& name, uint64_t seed, i64 trials_override,
                             size_t group_cap) {
  SuiteResult res;
  auto add = [&](const CheckOutcome& c) {
    res.checks.push_back(check_to_json(c));
    if (!c.ok) res.ok = false;
  };
  bool all = name == "all";
  i64 trials = trials_override > 0 ? trials_override : 100000;

  if (all || name == "expl-comm") {
    for (i64 p : {3, 5, 7})
      for (int m : {1, 2}) add(verify_explicit_commutator(p, m));
  }
  if (all || name == "comm-tech") {
    for (i64 p : {3, 5, 7})
      for (int m : {1, 2}) add(verify_comm_tech(p, m));
    add(verify_comm_tech(3, 3, 20000, seed));
    add(verify_comm_tech(5, 3, 20000, seed));
  }
  if (all || name == "comms") {
    add(derived_contains_torus(GroupTag::SL, 2, 3, 1, group_cap));
    add(derived_contains_torus(GroupTag::SL, 2, 3, 2, group_cap));
    add(derived_contains_torus(GroupTag::SL, 2, 5, 1, group_cap));
  }

  // shared golden data for the matrix suites
  RootDatum gl3 = catalog_lookup("GL", 3);
  RootDatum gl2 = catalog_lookup("GL", 2);
  RootDatum sl2 = catalog_lookup("SL", 2);
  auto units52 = TruncatedUnits::make(5, 2);
  TorusCharacter mu3 = TorusCharacter::make(gl3, units52, {Rat(0), Rat(0), Rat(1, 5)});
  ClassificationReport rep3 = classify(mu3);
  PositiveSystem pos3 = PositiveSystem::standard(gl3);
  FiltrationSpec k3 = build_k_spec(mu3, rep3, pos3);

  if (all || name == "decomp") {
    for (auto [p, m] : std::vector<std::pair<i64, int>>{{3, 1}, {3, 2}, {5, 1}, {7, 1}}) {
      add(decomposition_check(iwahori_spec(gl2), GroupTag::GL, {1, 1}, p, m,
                              DecompMode::Exhaustive, 0, seed, group_cap));
      add(decomposition_check(iwahori_spec(sl2), GroupTag::SL, {1, 1}, p, m,
                              DecompMode::Exhaustive, 0, seed, group_cap));
    }
    add(decomposition_check(k3, GroupTag::GL, {2, 1}, 5, 2, DecompMode::Sampled,
                            trials, seed));
  }
  if (all || name == "kclosure") {
    add(k_closure_check(k3, 5, 2, trials, seed));
  }
  if (all || name == "mu") {
    ExtendedCharacter chi = make_extended_character(mu3, rep3, pos3);
    std::mt19937_64 rng(seed);
    CheckOutcome c;
    c.claim = "extended character is multiplicative with the required restrictions";
    c.mode = "sampled";
    c.seed = seed;
    c.params = "p=5,m=2";
    i64 q = 25;
    std::uniform_int_distribution<i64> dist(0, q - 1);
    // torus restriction
    for (int t = 0; t < 200 && c.ok; ++t) {
      std::vector<i64> diag_entries(3);
      for (auto& e : diag_entries) {
        do {
          e = dist(rng);
        } while (e % 5 == 0);
      }
      Rat expect(0);
      for (int i = 0; i < 3; ++i)
        expect += mu3.exponents[i] * units52->dlog_of(diag_entries[i]);
      if (evaluate_mu(diagonal(q, diag_entries), chi) != expect.mod1()) {
        c.ok = false;
        c.witness = "torus restriction";
      }
      ++c.trials;
    }
    // triviality on off-Levi root subgroups at their K depths
    for (int i = 0; i < 3 && c.ok; ++i)
      for (int j = 0; j < 3; ++j) {
        if (i == j || (i < 2 && j < 2)) continue;
        Vec r(3, 0);
        r[i] = 1;
        r[j] = -1;
        i64 scale = 1;
        for (int e = 0; e < k3.exponents[gl3.index_of_root(r)]; ++e) scale *= 5;
        for (i64 z = 0; z < q / scale; ++z) {
          if (!evaluate_mu(elementary(3, q, i, j, z * scale), chi).is_zero()) {
            c.ok = false;
            c.witness = "unipotent restriction at (" + std::to_string(i) + "," +
                        std::to_string(j) + ")";
            break;
          }
          ++c.trials;
        }
      }
    // restriction to J: trivial on the J-spec root subgroups, mu-bar on T
    FiltrationSpec j3 = build_j_spec(mu3, pos3);
    for (int i = 0; i < 3 && c.ok; ++i)
      for (int j = 0; j < 3; ++j) {
        if (i == j) continue;
        Vec r(3, 0);
        r[i] = 1;
        r[j] = -1;
        i64 scale = 1;
        for (int e = 0; e < std::min(j3.exponents[gl3.index_of_root(r)], 2); ++e)
          scale *= 5;
        if (!evaluate_mu(elementary(3, q, i, j, scale % q), chi).is_zero()) {
          c.ok = false;
          c.witness = "J generator at (" + std::to_string(i) + "," +
                      std::to_string(j) + ")";
        }
        ++c.trials;
      }
    // multiplicativity
    std::mt19937_64 rng2(seed + 1);
    for (i64 t = 0; t < trials && c.ok; ++t) {
      TruncMat x = random_spec_member(k3, 5, 2, rng2);
      TruncMat y = random_spec_member(k3, 5, 2, rng2);
      Rat lhs = evaluate_mu(x * y, chi);
      Rat rhs = (evaluate_mu(x, chi) + evaluate_mu(y, chi)).mod1();
      if (lhs != rhs) {
        c.ok = false;
        c.witness = "multiplicativity at trial " + std::to_string(t);
      }
      ++c.trials;
    }
    add(c);
  }
  auto names = verify_suite_names();
  if (!all && std::find(names.begin(), names.end(), name) == names.end())
    throw std::invalid_argument("unknown verify suite: " + name);
  return res;
}

}  // namespace satake
