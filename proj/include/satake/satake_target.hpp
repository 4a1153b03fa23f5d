#pragma once

#include <map>
#include <vector>

#include "satake/weyl.hpp"

namespace satake {

// Finitely supported rational-coefficient function on the cocharacter
// lattice; the group algebra C[X-dual] in exact arithmetic.
struct LatticeAlgebraElement {
  std::map<Vec, Rat> terms;

  void add(const Vec& v, const Rat& c);
  bool operator==(const LatticeAlgebraElement& o) const { return terms == o.terms; }
};

LatticeAlgebraElement convolve(const LatticeAlgebraElement& a,
                               const LatticeAlgebraElement& b);

struct OrbitSum {
  Vec rep;  // lexicographically maximal orbit element
  LatticeAlgebraElement expanded;
  i64 orbit_size = 0;
};

struct RingSummary {
  std::vector<Vec> basis;  // dominant representatives within the box
  // products keyed by basis index pairs (i <= j); clipped marks expansions
  // reaching outside the box
  struct Product {
    int i = 0, j = 0;
    std::vector<std::pair<Vec, i64>> expansion;
    bool clipped = false;
  };
  std::vector<Product> products;
};

// The invariant subring C[X-dual]^{W'} for the subgroup W' generated by the
// given simple positions, with the orbit-sum basis.
class InvariantRing {
 public:
  InvariantRing(const RootDatum& d, std::vector<int> simple_positions,
                size_t orbit_cap = kDefaultOrbitCap);

  const RootDatum& datum() const { return *datum_; }
  Vec dominant_rep(const Vec& v);
  OrbitSum orbit_sum(const Vec& v);

  // structure constants of m_rep1 * m_rep2 in the orbit-sum basis; checks
  // structurally that the expansion is invariant with nonnegative integer
  // coefficients
  std::vector<std::pair<Vec, i64>> multiply(const Vec& rep1, const Vec& rep2);

  RingSummary summary(int coordinate_bound);

 private:
  std::vector<Vec> orbit_of(const Vec& v);

  const RootDatum* datum_;
  std::vector<int> positions_;
  std::vector<WeylElement> gens_;
  size_t cap_;
  std::map<Vec, std::vector<Vec>> orbit_cache_;
};

}  // namespace satake
