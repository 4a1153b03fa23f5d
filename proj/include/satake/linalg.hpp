#pragma once

#include <optional>
#include <vector>

#include "satake/rational.hpp"

namespace satake {

using Vec = std::vector<i64>;
using Mat = std::vector<Vec>;  // row-major

i64 dot(const Vec& a, const Vec& b);
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_neg(const Vec& a);
Vec vec_scaled(const Vec& a, i64 k);
bool is_zero_vec(const Vec& a);

Mat identity_mat(int n);
Mat mat_mul(const Mat& a, const Mat& b);
Vec mat_vec(const Mat& a, const Vec& x);
Mat transpose(const Mat& a);
std::vector<Rat> mat_vec_rat(const Mat& a, const std::vector<Rat>& x);

// floor division (round toward -infinity)
i64 floor_div(i64 a, i64 b);

// Canonical row-style Hermite normal form of the lattice spanned by the
// input rows: upper echelon, positive pivots, entries above each pivot
// reduced into [0, pivot). Zero rows are dropped.
Mat row_hnf(Mat rows);

// Smith normal form S = U * A * V with U, V unimodular. diag holds the
// min(m,n) diagonal entries of S (nonnegative, divisibility chain, zeros
// trailing); rank is the number of nonzero entries.
struct Snf {
  std::vector<i64> diag;
  Mat U, V, Vinv;
  int rank = 0;
};
Snf smith_normal_form(const Mat& a);

// One integer solution of A x = b, if any.
std::optional<Vec> solve_integer(const Mat& a, const Vec& b);

// Basis (rows, HNF-canonical) of {x : A x = 0}; always a saturated lattice.
Mat integer_kernel(const Mat& a);

// Sublattice of Z^ambient with a canonical HNF basis.
struct Lattice {
  int ambient = 0;
  Mat basis;  // HNF rows; rank() == basis.size()

  static Lattice from_generators(int ambient, const Mat& gens);
  static Lattice full(int ambient);
  static Lattice zero(int ambient);

  int rank() const { return static_cast<int>(basis.size()); }
  bool contains(const Vec& v) const;
  bool contains(const Lattice& other) const;
  friend bool operator==(const Lattice& a, const Lattice& b) {
    return a.ambient == b.ambient && a.basis == b.basis;
  }
};

// Elementary divisors of ambient/sub, zeros encoding free factors.
struct QuotientStructure {
  std::vector<i64> divisors;
  bool torsion_free() const {
    for (i64 d : divisors)
      if (d > 1) return false;
    return true;
  }
};

// Throws std::invalid_argument unless sub is contained in ambient.
QuotientStructure quotient_structure(const Lattice& sub, const Lattice& ambient);

// Smallest sublattice of ambient containing sub with torsion-free quotient.
Lattice saturation(const Lattice& sub, const Lattice& ambient);

}  // namespace satake
