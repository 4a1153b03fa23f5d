#pragma once

#include <optional>
#include <vector>

#include "satake/character.hpp"
#include "satake/root_datum.hpp"

namespace satake {

// A choice of positive roots; defaults to the catalog's standard one
// (nonnegative coordinates in the simple basis).
struct PositiveSystem {
  std::vector<bool> positive;  // per root index

  static PositiveSystem standard(const RootDatum& d);
  // alpha positive iff <v, alpha> > 0 for a regular covector v in X-dual
  static PositiveSystem from_regular_covector(const RootDatum& d, const Vec& v);
};

// Integer-valued function on the roots; the filtration datum.
struct ConcaveFunction {
  const RootDatum* datum = nullptr;
  std::vector<int> values;  // per root index

  int operator()(int root_index) const { return values.at(root_index); }
};

struct ConcavityViolation {
  // kind 0: f(a)+f(b) < f(a+b); kind 1: f(a)+f(-a) < 1 (b, sum unused)
  int kind = 0;
  int a = -1, b = -1, sum = -1;
  friend bool operator==(const ConcavityViolation& x, const ConcavityViolation& y) {
    return x.kind == y.kind && x.a == y.a && x.b == y.b && x.sum == y.sum;
  }
};

struct ConcaveCheck {
  bool ok = true;
  std::vector<ConcavityViolation> violations;  // lexicographic order
};

ConcaveCheck check_concave(const ConcaveFunction& f);

// Roche's filtration function attached to the conductors of mu along the
// coroots: floor(c/2) on positive roots, floor((c+1)/2) on negative ones.
// Conductors of directions where the restriction is trivial enter as 1 (the
// smallest positive level), which keeps conditions (a) and (b) intact; the
// classification report still records those conductors as 0.
ConcaveFunction roche_function(const TorusCharacter& mu, const PositiveSystem& pos);
ConcaveFunction roche_function_from_conductors(const RootDatum& d,
                                               const std::vector<int>& conductors,
                                               const PositiveSystem& pos);

struct LeviCompatCheck {
  bool ok = true;
  // first failing triple (alpha in Levi, beta outside, alpha+beta)
  std::optional<ConcavityViolation> witness;
};

// f(beta) == f(alpha+beta) for alpha in the Levi subsystem, beta outside.
LeviCompatCheck check_levi_compat(const ConcaveFunction& f,
                                  const std::vector<int>& simple_positions);

// Extension of a function given off the Levi subsystem by the Iwahori values
// 0/1 inside it. Throws std::invalid_argument (with a witness in the message)
// when g violates its preconditions.
ConcaveFunction fprime_from_g(const RootDatum& d,
                              const std::vector<std::pair<int, int>>& g_values,
                              const std::vector<int>& simple_positions,
                              const PositiveSystem& pos);

// Subgroup spec: exponents per root plus depth-zero torus. levi present
// exactly when this is an enlarged K-spec.
struct FiltrationSpec {
  const RootDatum* datum = nullptr;
  std::vector<int> exponents;
  std::optional<std::vector<int>> levi;  // simple positions
};

FiltrationSpec build_j_spec(const TorusCharacter& mu, const PositiveSystem& pos);

// K-spec for a strongly parabolic character: exponents vanish on the Levi
// subsystem and follow the filtration function outside it. Throws unless the
// report says strongly parabolic.
FiltrationSpec build_k_spec(const TorusCharacter& mu, const ClassificationReport& rep,
                            const PositiveSystem& pos);

// n x n matrix of required valuations per matrix position for the GL and Sp
// families; empty optional for data without a plain matrix chart here.
std::optional<Mat> exponent_matrix(const FiltrationSpec& spec);

}  // namespace satake
