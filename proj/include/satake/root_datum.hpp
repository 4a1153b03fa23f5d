#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "satake/linalg.hpp"

namespace satake {

// Split root datum in paired coordinates: X and X-dual are both Z^rank with
// dual bases, roots carry X-coordinates, coroots carry X-dual coordinates,
// and the pairing is the dot product. Immutable after construction.
struct RootDatum {
  std::string name;
  std::string family;
  int size_param = 0;
  int rank = 0;
  Mat roots;              // row per root, X-coordinates
  Mat coroots;            // row i = coroot of roots[i], X-dual coordinates
  std::vector<int> simple;  // indices into roots
  std::vector<i64> excluded_primes;

  // derived, filled by finish()
  std::vector<int> negation;      // index of -alpha
  Mat simple_coords;              // per root: coordinates in the simple basis
  std::vector<bool> positive;     // standard positivity (nonneg simple coords)
  std::map<Vec, int> root_index;  // X-coordinates -> index
  std::vector<std::vector<int>> sum_table;  // [i][j] -> index of roots[i]+roots[j], -1

  int num_roots() const { return static_cast<int>(roots.size()); }
  int num_simple() const { return static_cast<int>(simple.size()); }
  int index_of_root(const Vec& r) const;  // -1 if absent
  // index of alpha+beta if it is a root, else -1
  int sum_index(int i, int j) const;

  Lattice character_lattice() const { return Lattice::full(rank); }
  Lattice cocharacter_lattice() const { return Lattice::full(rank); }
  Lattice root_lattice() const;    // Q inside X
  Lattice coroot_lattice() const;  // Q-dual inside X-dual
  // coroot lattice of the Levi spanned by the given simple positions
  Lattice coroot_lattice_of(const std::vector<int>& simple_positions) const;
  Lattice root_lattice_of(const std::vector<int>& simple_positions) const;

  // root indices lying in the span of the chosen simple positions
  std::vector<int> levi_roots(const std::vector<int>& simple_positions) const;

  // validates all invariants and computes derived data; throws on violation
  void finish();
};

struct StructuralPredicates {
  bool simply_laced = false;
  bool x_mod_q_free = false;
  bool xv_mod_qv_free = false;
  bool no_a1_or_cn_factor = false;
  bool condition_i_prime = false;
};

// Connected component of the Dynkin diagram on a set of simple positions.
struct DiagramComponent {
  char type = 'A';  // A,B,C,D,E,F,G  (B2 = C2 reported as 'C')
  int n = 0;        // rank of the component
  std::vector<int> members;  // simple positions
};

// Catalog families: GL, SL, PGL, Sp, GSp, Sp/Z, SO, Spin, GO, SO/Z,
// E6, E7, E8, E6/Z, E7/Z, F4, G2. size_param is the matrix size N for the
// classical families and is ignored (0 allowed) for the exceptional ones.
RootDatum catalog_lookup(const std::string& name, int size_param);
std::vector<std::string> catalog_families();

// Decompose the diagram on the given simple positions (default: all).
std::vector<DiagramComponent> diagram_components(const RootDatum& d,
                                                 const std::vector<int>& simple_positions);
std::vector<DiagramComponent> diagram_components(const RootDatum& d);

i64 weyl_order_of_components(const std::vector<DiagramComponent>& comps);

StructuralPredicates structural_predicates(const RootDatum& d);

// Sub-datum generated by the torus and the chosen simple positions; the
// lattices are unchanged.
RootDatum levi_subdatum(const RootDatum& d, const std::vector<int>& simple_positions);

// Lattice spanned by { <lambda, alpha_i> alpha_i-coroot } over lattice basis
// vectors lambda and simple positions i.
Lattice lambda_minus_w_lambda_lattice(const RootDatum& d);

}  // namespace satake
