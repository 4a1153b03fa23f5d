#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "satake/character.hpp"
#include "satake/filtration.hpp"

namespace satake {

constexpr size_t kDefaultGroupCap = 10'000'000;

enum class GroupTag { GL, SL, Sp };

// Square matrix over Z/p^m with exact modular arithmetic.
struct TruncMat {
  int n = 0;
  i64 q = 1;  // p^m
  std::vector<i64> a;  // row-major, entries in [0, q)

  static TruncMat identity(int n, i64 q);
  i64& at(int i, int j) { return a[i * n + j]; }
  i64 at(int i, int j) const { return a[i * n + j]; }

  TruncMat operator*(const TruncMat& o) const;
  bool operator==(const TruncMat& o) const { return n == o.n && q == o.q && a == o.a; }
  bool operator<(const TruncMat& o) const { return a < o.a; }

  i64 det() const;                      // n <= 4
  std::optional<TruncMat> inverse() const;  // empty when not invertible
  TruncMat commutator(const TruncMat& o) const;  // this o this^-1 o^-1
};

TruncMat elementary(int n, i64 q, int i, int j, i64 x);  // I + x E_ij
TruncMat diagonal(i64 q, const std::vector<i64>& entries);

// Membership in the standard matrix group over Z/p^m.
bool in_group(const TruncMat& m, GroupTag tag);

// --- brute-force oracles -------------------------------------------------

struct CheckOutcome {
  std::string claim;
  bool ok = true;
  std::string mode;  // "exhaustive" or "sampled"
  i64 trials = 0;
  uint64_t seed = 0;
  std::string witness;  // set on failure
  std::string params;
};

// 2x2 identity expressing the diagonal torus element as a conjugated
// commutator of unipotents, checked for every unit f of Z/p^m.
CheckOutcome verify_explicit_commutator(i64 p, int m);

// [lower(x), diag(g, g^{-1})] identity and the surjectivity of x(1-g^2)
// onto p Z/p^m (p = 3) or the whole ring (p >= 5). Exhaustive for m <= 2,
// sampled identity checks for m >= 3.
CheckOutcome verify_comm_tech(i64 p, int m, i64 trials = 20000, uint64_t seed = 1);

// Derived subgroup of SL_2(Z/p^m) contains the full diagonal torus,
// by commutator closure with word-free BFS. Enumerable sizes only.
CheckOutcome derived_contains_torus(GroupTag tag, int n, i64 p, int m,
                                    size_t cap = kDefaultGroupCap);

enum class DecompMode { Exhaustive, Sampled };

// Exhaustive: GL_2/SL_2 at small p^m; generate the subgroup of the spec and
// compare its size against the product of the factor sizes (triple products
// counted by hashing). Sampled: GL_n round-trip through iwahori_factorize.
CheckOutcome decomposition_check(const FiltrationSpec& spec, GroupTag tag,
                                 const std::vector<int>& levi_blocks, i64 p, int m,
                                 DecompMode mode, i64 trials = 100000,
                                 uint64_t seed = 1, size_t cap = kDefaultGroupCap);

// Valuation-pattern membership is stable under products and inverses.
CheckOutcome k_closure_check(const FiltrationSpec& spec, i64 p, int m, i64 trials,
                             uint64_t seed = 1);

// Unique block factorization x = u+ * l * u- for members of the spec.
struct IwahoriFactors {
  TruncMat upper, levi, lower;
};
IwahoriFactors iwahori_factorize(const TruncMat& x, const FiltrationSpec& spec,
                                 const std::vector<int>& levi_blocks);

// Extension of mu to the K-spec via block determinants of the Levi part.
struct ExtendedCharacter {
  FiltrationSpec spec;
  std::vector<int> blocks;          // block sizes, in order
  std::vector<Rat> block_exponents; // theta_b
  UnitsPtr units;
};

ExtendedCharacter make_extended_character(const TorusCharacter& mu,
                                          const ClassificationReport& rep,
                                          const PositiveSystem& pos);

// mu(x) as an exponent in Q/Z; requires x in the spec.
Rat evaluate_mu(const TruncMat& x, const ExtendedCharacter& chi);

// membership in the valuation pattern of the spec (exponents clamped at m)
bool spec_member(const TruncMat& x, const FiltrationSpec& spec);

// random member of the valuation pattern (det unit), for sampling oracles
TruncMat random_spec_member(const FiltrationSpec& spec, i64 p, int m,
                            std::mt19937_64& rng);

}  // namespace satake
