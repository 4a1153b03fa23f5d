#pragma once

#include <memory>
#include <random>
#include <string>
#include <vector>

#include "satake/root_datum.hpp"
#include "satake/weyl.hpp"

namespace satake {

// The level-m unit group of a p-adic integer ring, p odd: cyclic of order
// phi(p^m) with a canonical generator (smallest positive primitive root mod
// p, bumped by p when it fails to generate mod p^2).
struct TruncatedUnits {
  i64 p = 0;
  int level = 0;
  i64 modulus = 0;  // p^level
  i64 order = 0;    // phi(p^level)
  i64 generator = 0;
  std::vector<int> dlog;  // index u -> discrete log, -1 on non-units

  static std::shared_ptr<const TruncatedUnits> make(i64 p, int level);
  int dlog_of(i64 u) const;
};

using UnitsPtr = std::shared_ptr<const TruncatedUnits>;

// Smooth character of the level-m unit group: u -> e(exponent * dlog u).
struct CyclicCharacter {
  i64 p = 0;
  int level = 0;
  Rat exponent;  // canonical representative in [0,1), denominator | phi(p^m)

  bool trivial() const { return exponent.is_zero(); }
  i64 order() const { return exponent.is_zero() ? 1 : exponent.den; }
  // Smallest c >= 0 such that the character kills the image of 1+p^c,
  // with 1+p^0 meaning the full unit group.
  int conductor() const;
};

// Smooth character of T(O) at finite level, stored as exact exponents per
// cocharacter basis vector: value on (lambda ox u) = (lambda . exponents) *
// dlog(u) in Q/Z.
struct TorusCharacter {
  const RootDatum* datum = nullptr;
  UnitsPtr units;
  std::vector<Rat> exponents;  // size rank, canonical mod 1

  static TorusCharacter make(const RootDatum& d, UnitsPtr units,
                             std::vector<Rat> exponents);

  CyclicCharacter restrict_along(const Vec& cochar) const;
  CyclicCharacter restrict_along_coroot(int root_index) const;
  bool trivial_on(const Lattice& sublattice) const;
  bool operator==(const TorusCharacter& o) const {
    return exponents == o.exponents;
  }
};

TorusCharacter weyl_act(const WeylElement& w, const TorusCharacter& mu);

// Roots alpha with mu o alpha-coroot trivial on the units.
std::vector<int> kernel_subsystem(const TorusCharacter& mu);

struct EasyFactor {
  Vec rational_character;  // element of X, W_L-invariant
  Rat exponent;            // cyclic character exponent
};

struct ClassificationReport {
  std::vector<int> conductors;         // per root index
  std::vector<int> kernel_roots;       // indices of the kernel subsystem
  bool w_invariant = false;
  std::vector<int> levi_subset;        // S' (simple positions fixing mu)
  i64 orbit_size = 0;
  i64 stabilizer_order = 0;
  bool parabolic = false;
  bool strongly_parabolic = false;
  bool easy = false;
  bool extendable = false;
  std::vector<EasyFactor> easy_factors;  // present when easy
  std::vector<std::string> warnings;
};

ClassificationReport classify(const TorusCharacter& mu,
                              size_t orbit_cap = kDefaultOrbitCap);

// Basis of the W_L-invariant rational characters X^{W_L}; equals the
// annihilator of the Levi coroot lattice inside X.
Lattice w_invariant_rational_characters(const RootDatum& d,
                                        const std::vector<int>& simple_positions);

// Writes mu as a product of cyclic characters composed with W_L-invariant
// rational characters. Throws std::invalid_argument when mu is not easy with
// respect to the given Levi.
std::vector<EasyFactor> easy_decomposition(const TorusCharacter& mu,
                                           const std::vector<int>& simple_positions);

TorusCharacter random_character(const RootDatum& d, UnitsPtr units,
                                std::mt19937_64& rng);

}  // namespace satake
