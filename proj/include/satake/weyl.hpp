#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "satake/root_datum.hpp"

namespace satake {

struct cap_exceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

constexpr size_t kDefaultOrbitCap = 10'000'000;

// Weyl group element as a pair of contragredient lattice automorphisms.
// on_cochar acts on X-dual (column-vector convention), on_char on X; for any
// product of reflections, on_char = transpose(inverse(on_cochar)).
struct WeylElement {
  Mat on_cochar;
  Mat on_char;
  std::vector<int> word;  // simple positions, optional cache

  static WeylElement identity(int rank);
  WeylElement operator*(const WeylElement& o) const;
  WeylElement inverse() const;
  bool operator==(const WeylElement& o) const {
    return on_cochar == o.on_cochar;
  }

  Vec apply_cochar(const Vec& v) const { return mat_vec(on_cochar, v); }
  Vec apply_char(const Vec& v) const { return mat_vec(on_char, v); }
  std::vector<Rat> apply_char(const std::vector<Rat>& v) const {
    return mat_vec_rat(on_char, v);
  }
};

// Reflection attached to the i-th simple position of the datum.
WeylElement simple_reflection(const RootDatum& d, int simple_position);
// Reflection attached to an arbitrary root index.
WeylElement root_reflection(const RootDatum& d, int root_index);

// |W| by the product formula over diagram components.
i64 group_order(const RootDatum& d);
// |W_S| for the standard parabolic on the given simple positions.
i64 group_order(const RootDatum& d, const std::vector<int>& simple_positions);

struct ParabolicSubgroupDescriptor {
  std::vector<int> simple_positions;
  i64 order = 1;
};

// Generic orbit closure under the given generator action, breadth-first with
// a deterministic frontier; words are witness expressions in the generators.
template <typename T>
struct OrbitResult {
  std::vector<T> elements;                // BFS order, seed first
  std::vector<std::vector<int>> words;    // generator word per element
  bool contains(const T& x) const {
    for (const T& e : elements)
      if (e == x) return true;
    return false;
  }
};

template <typename T, typename Act>
OrbitResult<T> orbit(const T& seed, int num_generators, Act&& act,
                     size_t cap = kDefaultOrbitCap) {
  OrbitResult<T> res;
  std::map<T, int> index;
  res.elements.push_back(seed);
  res.words.push_back({});
  index[seed] = 0;
  for (size_t head = 0; head < res.elements.size(); ++head) {
    for (int g = 0; g < num_generators; ++g) {
      T next = act(g, res.elements[head]);
      if (index.count(next)) continue;
      if (res.elements.size() >= cap)
        throw cap_exceeded("orbit cap exceeded (" + std::to_string(cap) + ")");
      index[next] = static_cast<int>(res.elements.size());
      std::vector<int> w = res.words[head];
      w.push_back(g);
      res.elements.push_back(next);
      res.words.push_back(std::move(w));
    }
  }
  return res;
}

struct ParabolicCheck {
  bool parabolic = false;
  std::vector<int> fixing_simples;  // S' = simple positions fixing the seed
  i64 orbit_size = 0;
  i64 stabilizer_order = 0;  // |W| / orbit size
  ParabolicSubgroupDescriptor descriptor;  // meaningful when parabolic
};

// Exact standard-parabolic criterion: W_{S'} is always contained in the
// stabilizer, so |orbit| * |W_{S'}| == |W| decides equality.
ParabolicCheck parabolic_from_orbit(const RootDatum& d,
                                    const std::vector<int>& fixing_simples,
                                    i64 orbit_size);

// Full enumeration of W (BFS over matrices); throws cap_exceeded beyond cap.
std::vector<WeylElement> enumerate_weyl(const RootDatum& d,
                                        size_t cap = kDefaultOrbitCap);

// Experimental: whether the stabilizer of the exponent vector is conjugate in
// W to a standard parabolic subgroup. Enumerates W, so only usable for small
// groups; not part of any acceptance path.
bool stabilizer_parabolic_up_to_conjugacy(const RootDatum& d,
                                          const std::vector<Rat>& exponents,
                                          size_t cap = 100'000);

}  // namespace satake
