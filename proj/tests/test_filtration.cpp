#include <random>

#include "doctest.h"
#include "satake/filtration.hpp"

using namespace satake;

namespace {

ConcaveFunction iwahori_function(const RootDatum& d) {
  ConcaveFunction f;
  f.datum = &d;
  f.values.assign(d.num_roots(), 0);
  for (int i = 0; i < d.num_roots(); ++i) f.values[i] = d.positive[i] ? 0 : 1;
  return f;
}

}  // namespace

TEST_CASE("concavity checks: iwahori passes, zero fails") {
  RootDatum d = catalog_lookup("GL", 3);
  CHECK(check_concave(iwahori_function(d)).ok);

  ConcaveFunction zero;
  zero.datum = &d;
  zero.values.assign(d.num_roots(), 0);
  ConcaveCheck c = check_concave(zero);
  CHECK_FALSE(c.ok);
  REQUIRE_FALSE(c.violations.empty());
  CHECK(c.violations.front().kind == 1);  // sign condition

  // violating pairs are reported deterministically for a bumped function
  ConcaveFunction bump = iwahori_function(d);
  int idx13 = d.index_of_root({1, 0, -1});
  bump.values[idx13] = 5;
  ConcaveCheck cb = check_concave(bump);
  CHECK_FALSE(cb.ok);
  CHECK(cb.violations.front().kind == 0);
  CHECK(cb.violations == check_concave(bump).violations);
}

TEST_CASE("positive systems: standard and from a regular covector") {
  RootDatum d = catalog_lookup("GL", 3);
  PositiveSystem std_pos = PositiveSystem::standard(d);
  PositiveSystem cov = PositiveSystem::from_regular_covector(d, {3, 2, 1});
  for (int i = 0; i < d.num_roots(); ++i) CHECK(std_pos.positive[i] == cov.positive[i]);
  PositiveSystem opposite = PositiveSystem::from_regular_covector(d, {-3, -2, -1});
  for (int i = 0; i < d.num_roots(); ++i)
    CHECK(opposite.positive[i] == !std_pos.positive[i]);
  CHECK_THROWS_AS(PositiveSystem::from_regular_covector(d, {1, 1, 0}),
                  std::invalid_argument);
}

TEST_CASE("filtration function of the rank-3 worked example") {
  RootDatum d = catalog_lookup("GL", 3);
  for (int n = 2; n <= 4; ++n) {
    auto units = TruncatedUnits::make(5, n);
    i64 den = 1;
    for (int i = 1; i < n; ++i) den *= 5;
    TorusCharacter mu = TorusCharacter::make(d, units, {Rat(0), Rat(0), Rat(1, den)});
    CHECK(mu.restrict_along_coroot(d.index_of_root({1, 0, -1})).conductor() == n);
    PositiveSystem pos = PositiveSystem::standard(d);
    ConcaveFunction f = roche_function(mu, pos);
    CAPTURE(n);
    CHECK(f(d.index_of_root({1, 0, -1})) == n / 2);
    CHECK(f(d.index_of_root({0, 1, -1})) == n / 2);
    CHECK(f(d.index_of_root({-1, 0, 1})) == (n + 1) / 2);
    CHECK(f(d.index_of_root({0, -1, 1})) == (n + 1) / 2);
    // trivial direction: iwahori values
    CHECK(f(d.index_of_root({1, -1, 0})) == 0);
    CHECK(f(d.index_of_root({-1, 1, 0})) == 1);
    CHECK(check_concave(f).ok);
  }
}

TEST_CASE("trivial and tame-regular characters give the iwahori function") {
  RootDatum d = catalog_lookup("Sp", 4);
  auto units = TruncatedUnits::make(5, 1);
  PositiveSystem pos = PositiveSystem::standard(d);
  TorusCharacter triv = TorusCharacter::make(d, units, {Rat(0), Rat(0)});
  ConcaveFunction f = roche_function(triv, pos);
  for (int i = 0; i < d.num_roots(); ++i) CHECK(f(i) == (d.positive[i] ? 0 : 1));

  // all conductors equal to one
  TorusCharacter tame = TorusCharacter::make(d, units, {Rat(1, 4), Rat(1, 2)});
  for (int i = 0; i < d.num_roots(); ++i)
    CHECK(tame.restrict_along_coroot(i).conductor() == 1);
  ConcaveFunction g = roche_function(tame, pos);
  for (int i = 0; i < d.num_roots(); ++i) CHECK(g(i) == (d.positive[i] ? 0 : 1));
}

TEST_CASE("levi compatibility on the worked example and a broken function") {
  RootDatum d = catalog_lookup("GL", 3);
  auto units = TruncatedUnits::make(5, 2);
  TorusCharacter mu = TorusCharacter::make(d, units, {Rat(0), Rat(0), Rat(1, 5)});
  PositiveSystem pos = PositiveSystem::standard(d);
  ConcaveFunction f = roche_function(mu, pos);
  CHECK(check_levi_compat(f, {0}).ok);

  // everything inside the Levi: vacuous
  CHECK(check_levi_compat(f, {0, 1}).ok);

  ConcaveFunction broken = f;
  broken.values[d.index_of_root({0, 1, -1})] += 1;
  LeviCompatCheck bad = check_levi_compat(broken, {0});
  CHECK_FALSE(bad.ok);
  REQUIRE(bad.witness.has_value());
}

TEST_CASE("extension from the complement of the Levi") {
  RootDatum d = catalog_lookup("GL", 3);
  auto units = TruncatedUnits::make(5, 2);
  TorusCharacter mu = TorusCharacter::make(d, units, {Rat(0), Rat(0), Rat(1, 5)});
  PositiveSystem pos = PositiveSystem::standard(d);
  ConcaveFunction f = roche_function(mu, pos);

  std::vector<std::pair<int, int>> g_vals;
  std::vector<bool> in_levi(d.num_roots(), false);
  for (int i : d.levi_roots({0})) in_levi[i] = true;
  for (int i = 0; i < d.num_roots(); ++i)
    if (!in_levi[i]) g_vals.push_back({i, f(i)});

  ConcaveFunction fp = fprime_from_g(d, g_vals, {0}, pos);
  for (int i = 0; i < d.num_roots(); ++i) {
    if (in_levi[i])
      CHECK(fp(i) == (d.positive[i] ? 0 : 1));  // iwahori values inside
    else
      CHECK(fp(i) == f(i));
  }

  // empty Levi: the extension is g itself
  std::vector<std::pair<int, int>> all_vals;
  for (int i = 0; i < d.num_roots(); ++i) all_vals.push_back({i, f(i)});
  ConcaveFunction same = fprime_from_g(d, all_vals, {}, pos);
  CHECK(same.values == f.values);

  // full Levi: the iwahori function
  ConcaveFunction iw = fprime_from_g(d, {}, {0, 1}, pos);
  for (int i = 0; i < d.num_roots(); ++i) CHECK(iw(i) == (d.positive[i] ? 0 : 1));

  // broken g is rejected with a witness
  auto bad_vals = g_vals;
  bad_vals[0].second = -5;
  CHECK_THROWS_AS(fprime_from_g(d, bad_vals, {0}, pos), std::invalid_argument);
}

TEST_CASE("K-spec of the worked example: the displayed matrix shape") {
  RootDatum d = catalog_lookup("GL", 3);
  for (int n = 2; n <= 6; ++n) {
    auto units = TruncatedUnits::make(5, n);
    i64 den = 1;
    for (int i = 1; i < n; ++i) den *= 5;
    TorusCharacter mu = TorusCharacter::make(d, units, {Rat(0), Rat(0), Rat(1, den)});
    ClassificationReport rep = classify(mu);
    REQUIRE(rep.strongly_parabolic);
    FiltrationSpec k = build_k_spec(mu, rep, PositiveSystem::standard(d));
    auto mat = exponent_matrix(k);
    REQUIRE(mat.has_value());
    Mat expect{{0, 0, n / 2}, {0, 0, n / 2}, {(n + 1) / 2, (n + 1) / 2, 0}};
    CAPTURE(n);
    CHECK(*mat == expect);
  }
}

TEST_CASE("K-spec degenerate cases: trivial and regular characters") {
  RootDatum d = catalog_lookup("GL", 3);
  auto units = TruncatedUnits::make(7, 1);
  PositiveSystem pos = PositiveSystem::standard(d);

  TorusCharacter triv = TorusCharacter::make(d, units, std::vector<Rat>(3, Rat(0)));
  ClassificationReport rt = classify(triv);
  FiltrationSpec kt = build_k_spec(triv, rt, pos);
  CHECK((int)kt.levi->size() == d.num_simple());
  for (int v : kt.exponents) CHECK(v == 0);

  TorusCharacter reg = TorusCharacter::make(d, units, {Rat(1, 6), Rat(2, 6), Rat(3, 6)});
  ClassificationReport rr = classify(reg);
  REQUIRE(rr.parabolic);
  REQUIRE(rr.levi_subset.empty());
  FiltrationSpec kr = build_k_spec(reg, rr, pos);
  FiltrationSpec jr = build_j_spec(reg, pos);
  CHECK(kr.exponents == jr.exponents);  // empty Levi: K-spec is the J-spec

  // K-spec refuses characters that are not strongly parabolic
  RootDatum sl2 = catalog_lookup("SL", 2);
  auto u5 = TruncatedUnits::make(5, 1);
  TorusCharacter theta = TorusCharacter::make(sl2, u5, {Rat(1, 2)});
  ClassificationReport rth = classify(theta);
  CHECK_THROWS_AS(build_k_spec(theta, rth, PositiveSystem::standard(sl2)),
                  std::invalid_argument);
}

TEST_CASE("sampled filtration properties at good primes") {
  std::mt19937_64 rng(53);
  for (auto [family, n] :
       std::vector<std::pair<std::string, int>>{{"GL", 3}, {"SL", 3}, {"Sp", 4}, {"SO", 7}}) {
    RootDatum d = catalog_lookup(family, n);
    auto units = TruncatedUnits::make(7, 2);
    PositiveSystem pos = PositiveSystem::standard(d);
    int found = 0;
    for (int t = 0; t < 400 && found < 100; ++t) {
      TorusCharacter mu = random_character(d, units, rng);
      ConcaveFunction f = roche_function(mu, pos);  // asserts concavity internally
      CHECK(check_concave(f).ok);
      ClassificationReport rep = classify(mu);
      if (!rep.strongly_parabolic) continue;
      ++found;
      CHECK(check_levi_compat(f, rep.levi_subset).ok);
      FiltrationSpec k = build_k_spec(mu, rep, pos);
      std::vector<bool> in_levi(d.num_roots(), false);
      for (int i : d.levi_roots(rep.levi_subset)) in_levi[i] = true;
      for (int i = 0; i < d.num_roots(); ++i) {
        if (in_levi[i])
          CHECK(k.exponents[i] == 0);
        else
          CHECK(k.exponents[i] + k.exponents[d.negation[i]] >= 1);
      }
    }
    CHECK(found > 0);
  }
}

TEST_CASE("exponent matrix for the symplectic family") {
  RootDatum d = catalog_lookup("Sp", 4);
  FiltrationSpec iw{&d, {}, std::nullopt};
  iw.exponents.assign(d.num_roots(), 0);
  for (int i = 0; i < d.num_roots(); ++i) iw.exponents[i] = d.positive[i] ? 0 : 1;
  auto m = exponent_matrix(iw);
  REQUIRE(m.has_value());
  REQUIRE(m->size() == 4);
  // standard split chart: block A strictly above the diagonal at depth 0,
  // strictly below at depth 1; B block (e_i + e_j directions) at 0, C at 1
  Mat expect{{0, 0, 0, 0}, {1, 0, 0, 0}, {1, 1, 0, 1}, {1, 1, 0, 0}};
  CHECK(*m == expect);
  // exceptional data only get the per-root table
  RootDatum g2 = catalog_lookup("G2", 0);
  FiltrationSpec spec_g2{&g2, std::vector<int>(g2.num_roots(), 0), std::nullopt};
  CHECK_FALSE(exponent_matrix(spec_g2).has_value());
}
