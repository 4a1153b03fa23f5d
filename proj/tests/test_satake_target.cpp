#include "doctest.h"
#include "satake/satake_target.hpp"
#include "support/orbit_sum_oracle.hpp"

using namespace satake;

namespace {

// all lattice points with coordinates in [-b, b]
std::vector<Vec> box(int rank, int b) {
  std::vector<Vec> pts;
  Vec cur(rank, -b);
  while (true) {
    pts.push_back(cur);
    int k = rank - 1;
    while (k >= 0 && cur[k] == b) {
      cur[k] = -b;
      --k;
    }
    if (k < 0) break;
    ++cur[k];
  }
  return pts;
}

std::vector<std::pair<Vec, i64>> oracle_product(const Vec& a, const Vec& b,
                                                const oracle::Group& g) {
  oracle::Poly pa = oracle::orbit_sum(a, g);
  oracle::Poly pb = oracle::orbit_sum(b, g);
  return oracle::to_orbit_basis(oracle::mul(pa, pb), g);
}

}  // namespace

TEST_CASE("orbit sums: identity, swaps, fixed points") {
  RootDatum gl2 = catalog_lookup("GL", 2);
  InvariantRing full(gl2, {0});

  OrbitSum zero = full.orbit_sum({0, 0});
  CHECK(zero.orbit_size == 1);
  CHECK(zero.rep == Vec{0, 0});

  OrbitSum m10 = full.orbit_sum({1, 0});
  CHECK(m10.orbit_size == 2);
  CHECK(m10.rep == Vec{1, 0});
  LatticeAlgebraElement expect;
  expect.add({1, 0}, Rat(1));
  expect.add({0, 1}, Rat(1));
  CHECK(m10.expanded == expect);

  RootDatum gl3 = catalog_lookup("GL", 3);
  InvariantRing s1(gl3, {0});
  OrbitSum fixed = s1.orbit_sum({0, 0, 1});
  CHECK(fixed.orbit_size == 1);

  // dominant representative picks the lexicographic maximum
  CHECK(s1.dominant_rep({0, 1, 2}) == Vec{1, 0, 2});
}

TEST_CASE("frozen products computed by the independent oracle") {
  // GL_2, full Weyl group: m_(1,0)^2 = m_(2,0) + 2 m_(1,1)
  RootDatum gl2 = catalog_lookup("GL", 2);
  InvariantRing ring(gl2, {0});
  auto prod = ring.multiply({1, 0}, {1, 0});
  std::vector<std::pair<Vec, i64>> expect{{{2, 0}, 1}, {{1, 1}, 2}};
  CHECK(prod == expect);
  CHECK(prod == oracle_product({1, 0}, {1, 0}, oracle::symmetric_group(2)));

  // unit element
  CHECK(ring.multiply({0, 0}, {1, 0}) ==
        std::vector<std::pair<Vec, i64>>{{{1, 0}, 1}});

  // GL_3 under <s_1>: a 2-element orbit times a fixed point
  RootDatum gl3 = catalog_lookup("GL", 3);
  InvariantRing half(gl3, {0});
  auto p2 = half.multiply({1, 0, 0}, {0, 0, 1});
  CHECK(p2 == std::vector<std::pair<Vec, i64>>{{{1, 0, 1}, 1}});
  CHECK(p2 == oracle_product({1, 0, 0}, {0, 0, 1}, oracle::adjacent_swap_group(3, 0)));
}

TEST_CASE("products match the oracle across a bound-2 box") {
  struct Case {
    std::string family;
    int n;
    std::vector<int> positions;
    oracle::Group group;
  };
  std::vector<Case> cases;
  cases.push_back({"GL", 2, {}, oracle::trivial_group(2)});
  cases.push_back({"GL", 2, {0}, oracle::symmetric_group(2)});
  cases.push_back({"GL", 3, {}, oracle::trivial_group(3)});
  cases.push_back({"GL", 3, {0}, oracle::adjacent_swap_group(3, 0)});
  cases.push_back({"GL", 3, {0, 1}, oracle::symmetric_group(3)});

  for (const Case& c : cases) {
    RootDatum d = catalog_lookup(c.family, c.n);
    InvariantRing ring(d, c.positions);
    std::vector<Vec> reps;
    for (const Vec& v : box(d.rank, 2))
      if (ring.dominant_rep(v) == v) reps.push_back(v);
    CAPTURE(c.family);
    CAPTURE(c.n);
    for (size_t i = 0; i < reps.size(); ++i)
      for (size_t j = i; j < reps.size(); ++j) {
        CHECK(oracle::dominant(reps[i], c.group) == reps[i]);
        auto lib = ring.multiply(reps[i], reps[j]);
        auto orc = oracle_product(reps[i], reps[j], c.group);
        CHECK(lib == orc);
      }
  }
}

TEST_CASE("ring summary: trivial subgroup is the free basis, empty box") {
  RootDatum gl2 = catalog_lookup("GL", 2);
  InvariantRing free_ring(gl2, {});
  RingSummary s = free_ring.summary(1);
  CHECK(s.basis.size() == 9);  // all points of the box are dominant

  InvariantRing sym(gl2, {0});
  RingSummary s2 = sym.summary(1);
  CHECK(s2.basis.size() == 6);  // pairs with first coordinate >= second

  RingSummary s0 = sym.summary(0);
  REQUIRE(s0.basis.size() == 1);
  CHECK(s0.basis[0] == Vec{0, 0});
  REQUIRE(s0.products.size() == 1);
  CHECK_FALSE(s0.products[0].clipped);

  // clipping is flagged when expansions leave the box
  bool any_clipped = false;
  for (const auto& p : s2.products) any_clipped = any_clipped || p.clipped;
  CHECK(any_clipped);
}

TEST_CASE("commutativity and associativity on a small table") {
  RootDatum gl3 = catalog_lookup("GL", 3);
  for (const std::vector<int>& pos :
       std::vector<std::vector<int>>{{}, {0}, {0, 1}}) {
    InvariantRing ring(gl3, pos);
    std::vector<Vec> reps;
    for (const Vec& v : box(3, 1))
      if (ring.dominant_rep(v) == v) reps.push_back(v);
    for (const Vec& a : reps)
      for (const Vec& b : reps) {
        CHECK(ring.multiply(a, b) == ring.multiply(b, a));
        for (const Vec& c : reps) {
          // (ab)c = a(bc) through the structure constants
          std::map<Vec, i64> lhs, rhs;
          for (const auto& [k, ck] : ring.multiply(a, b))
            for (const auto& [v, cv] : ring.multiply(k, c)) lhs[v] += ck * cv;
          for (const auto& [k, ck] : ring.multiply(b, c))
            for (const auto& [v, cv] : ring.multiply(a, k)) rhs[v] += ck * cv;
          CHECK(lhs == rhs);
        }
      }
  }
}

TEST_CASE("GL_4 structure constants under the full Weyl group match the oracle") {
  RootDatum d = catalog_lookup("GL", 4);
  InvariantRing ring(d, {0, 1, 2});
  oracle::Group s4 = oracle::symmetric_group(4);
  std::vector<Vec> reps;
  for (const Vec& v : box(4, 2))
    if (ring.dominant_rep(v) == v) reps.push_back(v);
  for (size_t i = 0; i < reps.size(); ++i)
    for (size_t j = i; j < reps.size(); ++j) {
      auto lib = ring.multiply(reps[i], reps[j]);
      auto orc = oracle_product(reps[i], reps[j], s4);
      REQUIRE(lib.size() == orc.size());
      for (size_t t = 0; t < lib.size(); ++t) {
        CHECK(lib[t].first == orc[t].first);
        CHECK(lib[t].second == orc[t].second);
      }
    }
}
