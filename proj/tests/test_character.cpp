#include <random>
#include <set>

#include "doctest.h"
#include "satake/character.hpp"

using namespace satake;

TEST_CASE("truncated units: canonical generator and dlog") {
  auto u = TruncatedUnits::make(5, 2);
  CHECK(u->order == 20);
  CHECK(u->generator == 2);  // 2 is primitive mod 5 and mod 25
  CHECK(u->dlog_of(1) == 0);
  CHECK(u->dlog_of(2) == 1);
  CHECK_THROWS_AS(u->dlog_of(10), std::invalid_argument);

  auto u7 = TruncatedUnits::make(7, 3);
  CHECK(u7->order == 294);
  // full cyclic coverage
  std::set<int> logs;
  for (i64 x = 1; x < u7->modulus; ++x)
    if (x % 7 != 0) logs.insert(u7->dlog_of(x));
  CHECK((i64)logs.size() == u7->order);

  CHECK_THROWS_AS(TruncatedUnits::make(2, 1), std::invalid_argument);
  CHECK_THROWS_AS(TruncatedUnits::make(9, 1), std::invalid_argument);
}

TEST_CASE("conductor: formula agrees with direct subgroup evaluation") {
  auto u = TruncatedUnits::make(5, 3);
  // the image of 1+p^c is the cyclic subgroup generated by g^(order/5^(m-c))
  auto direct_conductor = [&](const Rat& exponent) {
    for (int c = 0; c <= u->level; ++c) {
      bool trivial = true;
      for (i64 x = 1; x < u->modulus && trivial; ++x) {
        if (x % 5 == 0) continue;
        i64 pc = 1;
        for (int t = 0; t < c; ++t) pc *= 5;
        if (c > 0 && (x - 1) % pc != 0) continue;  // x not in 1+p^c
        if (!(exponent * u->dlog_of(x)).mod1().is_zero()) trivial = false;
      }
      if (trivial) return c;
    }
    return -1;
  };
  std::vector<Rat> exps{Rat(0),      Rat(1, 2),  Rat(1, 4),   Rat(1, 5),
                        Rat(2, 25),  Rat(1, 100), Rat(3, 20), Rat(7, 50)};
  for (const Rat& e : exps) {
    CyclicCharacter chi{5, 3, e.mod1()};
    CAPTURE(e.str());
    CHECK(chi.conductor() == direct_conductor(e));
  }
  CHECK(CyclicCharacter{5, 3, Rat(0)}.conductor() == 0);
  CHECK(CyclicCharacter{5, 3, Rat(1, 4)}.conductor() == 1);  // tame
  CHECK(CyclicCharacter{5, 3, Rat(1, 25)}.conductor() == 3);
}

TEST_CASE("coroot restrictions on the worked examples") {
  // quadratic character on SL_2 restricts nontrivially along the coroot
  RootDatum sl2 = catalog_lookup("SL", 2);
  auto u = TruncatedUnits::make(5, 1);
  TorusCharacter theta = TorusCharacter::make(sl2, u, {Rat(1, 2)});
  CHECK_FALSE(theta.restrict_along_coroot(sl2.simple[0]).trivial());

  // trivial character restricts trivially
  TorusCharacter triv = TorusCharacter::make(sl2, u, {Rat(0)});
  CHECK(triv.restrict_along_coroot(0).trivial());

  // GL_3 with equal first two slots kills e1 - e2
  RootDatum gl3 = catalog_lookup("GL", 3);
  auto u52 = TruncatedUnits::make(5, 2);
  TorusCharacter mu =
      TorusCharacter::make(gl3, u52, {Rat(1, 4), Rat(1, 4), Rat(1, 5)});
  int idx12 = gl3.index_of_root({1, -1, 0});
  int idx13 = gl3.index_of_root({1, 0, -1});
  CHECK(mu.restrict_along_coroot(idx12).trivial());
  CHECK(mu.restrict_along_coroot(idx13).conductor() == 2);
}

TEST_CASE("weyl action: group action on characters, exact examples") {
  RootDatum sl2 = catalog_lookup("SL", 2);
  auto u = TruncatedUnits::make(5, 1);
  TorusCharacter theta = TorusCharacter::make(sl2, u, {Rat(1, 2)});
  WeylElement s = simple_reflection(sl2, 0);
  // s takes theta to theta^{-1}; quadratic means fixed
  CHECK(weyl_act(s, theta) == theta);
  TorusCharacter quartic = TorusCharacter::make(sl2, u, {Rat(1, 4)});
  CHECK_FALSE(weyl_act(s, quartic) == quartic);
  CHECK(weyl_act(s, quartic).exponents[0] == Rat(3, 4));

  // identity acts trivially; action is compatible with composition
  RootDatum gl3 = catalog_lookup("GL", 3);
  auto u7 = TruncatedUnits::make(7, 2);
  std::mt19937_64 rng(5);
  for (int t = 0; t < 40; ++t) {
    TorusCharacter mu = random_character(gl3, u7, rng);
    CHECK(weyl_act(WeylElement::identity(3), mu) == mu);
    WeylElement a = simple_reflection(gl3, t % 2);
    WeylElement b = simple_reflection(gl3, (t + 1) % 2);
    CHECK(weyl_act(a, weyl_act(b, mu)) == weyl_act(a * b, mu));
  }
}

TEST_CASE("kernel subsystem on the worked examples") {
  RootDatum gl3 = catalog_lookup("GL", 3);
  auto u52 = TruncatedUnits::make(5, 2);
  TorusCharacter triv = TorusCharacter::make(gl3, u52, std::vector<Rat>(3, Rat(0)));
  CHECK((int)kernel_subsystem(triv).size() == gl3.num_roots());

  TorusCharacter mu = TorusCharacter::make(gl3, u52, {Rat(0), Rat(0), Rat(1, 5)});
  auto ker = kernel_subsystem(mu);
  std::set<Vec> roots;
  for (int i : ker) roots.insert(gl3.roots[i]);
  CHECK(roots == std::set<Vec>{{1, -1, 0}, {-1, 1, 0}});

  // Sp_4 with (theta, theta): exactly the short roots survive
  RootDatum sp4 = catalog_lookup("Sp", 4);
  auto u5 = TruncatedUnits::make(5, 1);
  TorusCharacter tt = TorusCharacter::make(sp4, u5, {Rat(1, 2), Rat(1, 2)});
  std::set<Vec> kroots;
  for (int i : kernel_subsystem(tt)) kroots.insert(sp4.roots[i]);
  CHECK(kroots == std::set<Vec>{{1, -1}, {-1, 1}, {1, 1}, {-1, -1}});
  // and the kernel subsystem is not closed here (non-simply-laced)
  RootDatum d = sp4;
  bool closed = true;
  auto ker2 = kernel_subsystem(tt);
  std::set<int> kset(ker2.begin(), ker2.end());
  for (int a : ker2)
    for (int b : ker2) {
      int s = d.sum_index(a, b);
      if (s >= 0 && !kset.count(s)) closed = false;
    }
  CHECK_FALSE(closed);
}

TEST_CASE("classification of the three counterexample characters") {
  // SL_2 quadratic: invariant, parabolic with full Levi, not strongly
  // parabolic, not extendable
  RootDatum sl2 = catalog_lookup("SL", 2);
  auto u5 = TruncatedUnits::make(5, 1);
  TorusCharacter theta = TorusCharacter::make(sl2, u5, {Rat(1, 2)});
  ClassificationReport r1 = classify(theta);
  CHECK(r1.w_invariant);
  CHECK(r1.parabolic);
  CHECK_FALSE(r1.strongly_parabolic);
  CHECK_FALSE(r1.extendable);
  CHECK_FALSE(r1.easy);

  // Sp_4 (theta, theta): invariant but not extendable
  RootDatum sp4 = catalog_lookup("Sp", 4);
  TorusCharacter tt = TorusCharacter::make(sp4, u5, {Rat(1, 2), Rat(1, 2)});
  ClassificationReport r2 = classify(tt);
  CHECK(r2.w_invariant);
  CHECK(r2.parabolic);
  CHECK_FALSE(r2.strongly_parabolic);
  CHECK_FALSE(r2.extendable);

  // SL_3 with exponents (0, 1/2): coroot squares trivial, not invariant
  RootDatum sl3 = catalog_lookup("SL", 3);
  TorusCharacter nu = TorusCharacter::make(sl3, u5, {Rat(0), Rat(1, 2)});
  ClassificationReport r3 = classify(nu);
  CHECK_FALSE(r3.w_invariant);
  for (int s = 0; s < sl3.num_simple(); ++s) {
    Rat sq = 2 * nu.restrict_along_coroot(sl3.simple[s]).exponent;
    CHECK(sq.mod1().is_zero());
  }
}

TEST_CASE("parabolic GL characters are easy; parabolic PGL strongly parabolic") {
  // The parabolic test is the literal one (stabilizer equal to a standard
  // parabolic). Slot patterns like (a,b,a,b) have stabilizers that are only
  // conjugate to standard parabolics, so the blanket statements hold for the
  // parabolic samples; the conjugacy-relaxed test covers the rest.
  std::mt19937_64 rng(41);
  auto u = TruncatedUnits::make(5, 2);
  RootDatum gl = catalog_lookup("GL", 4);
  int parabolic_count = 0;
  for (int t = 0; t < 300; ++t) {
    TorusCharacter mu = random_character(gl, u, rng);
    ClassificationReport rep = classify(mu);
    if (!rep.parabolic) {
      CHECK(stabilizer_parabolic_up_to_conjugacy(gl, mu.exponents));
      continue;
    }
    ++parabolic_count;
    CHECK(rep.strongly_parabolic);
    CHECK(rep.easy);
  }
  CHECK(parabolic_count > 200);
  RootDatum pgl = catalog_lookup("PGL", 4);
  for (int t = 0; t < 300; ++t) {
    ClassificationReport rep = classify(random_character(pgl, u, rng));
    if (rep.parabolic) CHECK(rep.strongly_parabolic);
  }
  // the canonical non-contiguous pattern: not a standard parabolic
  // stabilizer, but conjugate to one
  TorusCharacter interleaved =
      TorusCharacter::make(gl, u, {Rat(1, 4), Rat(0), Rat(1, 4), Rat(0)});
  ClassificationReport rep = classify(interleaved);
  CHECK_FALSE(rep.parabolic);
  CHECK(stabilizer_parabolic_up_to_conjugacy(gl, interleaved.exponents));
}

TEST_CASE("invariant rational characters: ranks and generators") {
  RootDatum sln = catalog_lookup("SL", 4);
  std::vector<int> all{0, 1, 2};
  CHECK(w_invariant_rational_characters(sln, all).rank() == 0);

  RootDatum gln = catalog_lookup("GL", 4);
  Lattice det = w_invariant_rational_characters(gln, {0, 1, 2});
  CHECK(det.rank() == 1);
  CHECK(det.basis[0] == Vec{1, 1, 1, 1});

  RootDatum gl3 = catalog_lookup("GL", 3);
  CHECK(w_invariant_rational_characters(gl3, {0}).rank() == 2);
}

TEST_CASE("easy decomposition: examples and round trips") {
  auto u = TruncatedUnits::make(5, 2);

  // trivial character: all cyclic parts trivial
  RootDatum gl2 = catalog_lookup("GL", 2);
  TorusCharacter triv = TorusCharacter::make(gl2, u, {Rat(0), Rat(0)});
  for (const EasyFactor& f : easy_decomposition(triv, {0}))
    CHECK(f.exponent.is_zero());

  // (theta, theta) on GL_2 with the full Levi: the determinant direction
  TorusCharacter tt = TorusCharacter::make(gl2, u, {Rat(1, 4), Rat(1, 4)});
  auto fs = easy_decomposition(tt, {0});
  REQUIRE(fs.size() == 1);
  CHECK(fs[0].rational_character == Vec{1, 1});
  CHECK(fs[0].exponent == Rat(1, 4));

  // the GL_3 example with Levi GL_2 x GL_1
  RootDatum gl3 = catalog_lookup("GL", 3);
  TorusCharacter mu = TorusCharacter::make(gl3, u, {Rat(1, 4), Rat(1, 4), Rat(1, 5)});
  auto fs3 = easy_decomposition(mu, {0});
  REQUIRE(fs3.size() == 2);
  // recomposition is part of the call; also check the shape of the basis
  Lattice inv = w_invariant_rational_characters(gl3, {0});
  CHECK(inv.contains(fs3[0].rational_character));
  CHECK(inv.contains(fs3[1].rational_character));

  // a non-easy pair is rejected
  RootDatum sl2 = catalog_lookup("SL", 2);
  TorusCharacter theta = TorusCharacter::make(sl2, u, {Rat(1, 2)});
  CHECK_THROWS_AS(easy_decomposition(theta, {0}), std::invalid_argument);

  // random easy characters round-trip (already asserted inside the call)
  std::mt19937_64 rng(43);
  RootDatum gl4 = catalog_lookup("GL", 4);
  int seen = 0;
  for (int t = 0; t < 100; ++t) {
    TorusCharacter m = random_character(gl4, u, rng);
    ClassificationReport rep = classify(m);
    if (!rep.parabolic) continue;
    REQUIRE(rep.easy);
    CHECK_FALSE(rep.easy_factors.empty());
    ++seen;
  }
  CHECK(seen > 50);
}

TEST_CASE("conductors are Weyl equivariant") {
  std::mt19937_64 rng(47);
  auto u = TruncatedUnits::make(7, 2);
  for (auto [family, n] :
       std::vector<std::pair<std::string, int>>{{"GL", 3}, {"Sp", 4}, {"SO", 7}}) {
    RootDatum d = catalog_lookup(family, n);
    for (int t = 0; t < 50; ++t) {
      TorusCharacter mu = random_character(d, u, rng);
      int s = t % d.num_simple();
      WeylElement w = simple_reflection(d, s);
      TorusCharacter wmu = weyl_act(w, mu);
      for (int i = 0; i < d.num_roots(); ++i) {
        Vec walpha = w.apply_char(d.roots[i]);
        int wi = d.index_of_root(walpha);
        REQUIRE(wi >= 0);
        CHECK(wmu.restrict_along_coroot(wi).conductor() ==
              mu.restrict_along_coroot(i).conductor());
      }
    }
  }
}

TEST_CASE("classification warns at excluded primes but proceeds") {
  RootDatum g2 = catalog_lookup("G2", 0);
  auto u3 = TruncatedUnits::make(3, 1);
  TorusCharacter mu = TorusCharacter::make(g2, u3, {Rat(1, 2), Rat(0)});
  ClassificationReport rep = classify(mu);
  CHECK_FALSE(rep.warnings.empty());
}

TEST_CASE("character input validation") {
  RootDatum gl2 = catalog_lookup("GL", 2);
  auto u = TruncatedUnits::make(5, 1);
  CHECK_THROWS_AS(TorusCharacter::make(gl2, u, {Rat(1, 3)}), std::invalid_argument);
  CHECK_THROWS_AS(TorusCharacter::make(gl2, u, {Rat(1, 3), Rat(1, 7)}),
                  std::invalid_argument);
  // denominator 4 divides phi(5) = 4
  CHECK_NOTHROW(TorusCharacter::make(gl2, u, {Rat(1, 4), Rat(1, 2)}));
}
