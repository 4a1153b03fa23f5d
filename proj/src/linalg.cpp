#include "satake/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace satake {

Rat parse_fraction(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty fraction");
  size_t slash = s.find('/');
  try {
    size_t used = 0;
    if (slash == std::string::npos) {
      i64 n = std::stoll(s, &used);
      if (used != s.size()) throw std::invalid_argument("trailing junk");
      return Rat(n);
    }
    i64 n = std::stoll(s.substr(0, slash), &used);
    if (used != slash) throw std::invalid_argument("trailing junk");
    i64 d = std::stoll(s.substr(slash + 1), &used);
    if (used != s.size() - slash - 1) throw std::invalid_argument("trailing junk");
    return Rat(n, d);
  } catch (const std::exception&) {
    throw std::invalid_argument("malformed fraction: " + s);
  }
}

i64 dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: size mismatch");
  i64 s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Vec vec_add(const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vec vec_sub(const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vec vec_neg(const Vec& a) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

Vec vec_scaled(const Vec& a, i64 k) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = k * a[i];
  return r;
}

bool is_zero_vec(const Vec& a) {
  for (i64 x : a)
    if (x != 0) return false;
  return true;
}

Mat identity_mat(int n) {
  Mat m(n, Vec(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

Mat mat_mul(const Mat& a, const Mat& b) {
  int m = a.size(), k = b.size(), n = k ? b[0].size() : 0;
  Mat r(m, Vec(n, 0));
  for (int i = 0; i < m; ++i)
    for (int t = 0; t < k; ++t) {
      i64 av = a[i][t];
      if (av == 0) continue;
      for (int j = 0; j < n; ++j) r[i][j] += av * b[t][j];
    }
  return r;
}

Vec mat_vec(const Mat& a, const Vec& x) {
  Vec r(a.size(), 0);
  for (size_t i = 0; i < a.size(); ++i) r[i] = dot(a[i], x);
  return r;
}

std::vector<Rat> mat_vec_rat(const Mat& a, const std::vector<Rat>& x) {
  std::vector<Rat> r(a.size());
  for (size_t i = 0; i < a.size(); ++i) {
    Rat s(0);
    for (size_t j = 0; j < x.size(); ++j)
      if (a[i][j] != 0) s += a[i][j] * x[j];
    r[i] = s;
  }
  return r;
}

Mat transpose(const Mat& a) {
  int m = a.size(), n = m ? a[0].size() : 0;
  Mat r(n, Vec(m, 0));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) r[j][i] = a[i][j];
  return r;
}

i64 floor_div(i64 a, i64 b) {
  i64 q = a / b, r = a % b;
  if (r != 0 && ((r < 0) != (b < 0))) --q;
  return q;
}

namespace {

void row_axpy(Vec& target, const Vec& src, i64 k) {
  for (size_t i = 0; i < target.size(); ++i) target[i] += k * src[i];
}

}  // namespace

Mat row_hnf(Mat a) {
  a.erase(std::remove_if(a.begin(), a.end(), is_zero_vec), a.end());
  if (a.empty()) return a;
  const int n = a[0].size();
  size_t r = 0;
  for (int c = 0; c < n && r < a.size(); ++c) {
    while (true) {
      size_t piv = a.size();
      for (size_t i = r; i < a.size(); ++i)
        if (a[i][c] != 0 &&
            (piv == a.size() || std::llabs(a[i][c]) < std::llabs(a[piv][c])))
          piv = i;
      if (piv == a.size()) break;
      std::swap(a[r], a[piv]);
      bool clean = true;
      for (size_t i = r + 1; i < a.size(); ++i) {
        if (a[i][c] != 0) {
          i64 q = a[i][c] / a[r][c];
          if (q != 0) row_axpy(a[i], a[r], -q);
          if (a[i][c] != 0) clean = false;
        }
      }
      if (clean) break;
    }
    if (a[r][c] == 0) continue;
    if (a[r][c] < 0)
      for (i64& x : a[r]) x = -x;
    for (size_t i = 0; i < r; ++i) {
      i64 q = floor_div(a[i][c], a[r][c]);
      if (q != 0) row_axpy(a[i], a[r], -q);
    }
    ++r;
  }
  a.resize(r);
  return a;
}

Snf smith_normal_form(const Mat& a_in) {
  Mat s = a_in;
  const int m = s.size();
  const int n = m ? s[0].size() : 0;
  Snf out;
  out.U = identity_mat(m);
  out.V = identity_mat(n);
  out.Vinv = identity_mat(n);
  if (m == 0 || n == 0) return out;

  auto swap_rows = [&](int i, int j) {
    std::swap(s[i], s[j]);
    std::swap(out.U[i], out.U[j]);
  };
  auto swap_cols = [&](int i, int j) {
    for (int t = 0; t < m; ++t) std::swap(s[t][i], s[t][j]);
    for (int t = 0; t < n; ++t) std::swap(out.V[t][i], out.V[t][j]);
    std::swap(out.Vinv[i], out.Vinv[j]);
  };
  auto add_row = [&](int dst, int src, i64 q) {  // row_dst += q * row_src
    row_axpy(s[dst], s[src], q);
    row_axpy(out.U[dst], out.U[src], q);
  };
  auto add_col = [&](int dst, int src, i64 q) {  // col_dst += q * col_src
    for (int t = 0; t < m; ++t) s[t][dst] += q * s[t][src];
    for (int t = 0; t < n; ++t) out.V[t][dst] += q * out.V[t][src];
    row_axpy(out.Vinv[src], out.Vinv[dst], -q);
  };

  int lim = std::min(m, n);
  int t = 0;
  for (; t < lim; ++t) {
    // pivot: smallest nonzero entry in the remaining block
    int pi = -1, pj = -1;
    for (int i = t; i < m; ++i)
      for (int j = t; j < n; ++j)
        if (s[i][j] != 0 &&
            (pi == -1 || std::llabs(s[i][j]) < std::llabs(s[pi][pj]))) {
          pi = i;
          pj = j;
        }
    if (pi == -1) break;
    if (pi != t) swap_rows(t, pi);
    if (pj != t) swap_cols(t, pj);

    while (true) {
      bool again = false;
      for (int i = t + 1; i < m; ++i) {
        if (s[i][t] == 0) continue;
        i64 q = s[i][t] / s[t][t];
        add_row(i, t, -q);
        if (s[i][t] != 0) {
          swap_rows(t, i);
          again = true;
        }
      }
      for (int j = t + 1; j < n; ++j) {
        if (s[t][j] == 0) continue;
        i64 q = s[t][j] / s[t][t];
        add_col(j, t, -q);
        if (s[t][j] != 0) {
          swap_cols(t, j);
          again = true;
        }
      }
      if (again) continue;
      // enforce divisibility of the remaining block by s[t][t]
      bool fixed = false;
      for (int i = t + 1; i < m && !fixed; ++i)
        for (int j = t + 1; j < n && !fixed; ++j)
          if (s[i][j] % s[t][t] != 0) {
            add_row(t, i, 1);
            fixed = true;
          }
      if (!fixed) break;
    }
    if (s[t][t] < 0) {
      for (int j = 0; j < n; ++j) s[t][j] = -s[t][j];
      for (int j = 0; j < m; ++j) out.U[t][j] = -out.U[t][j];
    }
  }
  out.diag.assign(lim, 0);
  for (int i = 0; i < lim; ++i) out.diag[i] = i < m && i < n ? s[i][i] : 0;
  out.rank = 0;
  for (i64 d : out.diag)
    if (d != 0) ++out.rank;
  return out;
}

std::optional<Vec> solve_integer(const Mat& a, const Vec& b) {
  const int m = a.size();
  const int n = m ? a[0].size() : 0;
  if (static_cast<int>(b.size()) != m) throw std::invalid_argument("solve: size");
  if (m == 0) return Vec(n, 0);
  Snf snf = smith_normal_form(a);
  Vec c = mat_vec(snf.U, b);
  Vec y(n, 0);
  int lim = std::min(m, n);
  for (int i = 0; i < m; ++i) {
    i64 d = i < lim ? snf.diag[i] : 0;
    if (d != 0) {
      if (c[i] % d != 0) return std::nullopt;
      y[i] = c[i] / d;
    } else if (c[i] != 0) {
      return std::nullopt;
    }
  }
  return mat_vec(snf.V, y);
}

Mat integer_kernel(const Mat& a) {
  const int m = a.size();
  const int n = m ? a[0].size() : 0;
  if (m == 0) return identity_mat(n);
  Snf snf = smith_normal_form(a);
  Mat basis;
  for (int k = snf.rank; k < n; ++k) {
    Vec v(n);
    for (int i = 0; i < n; ++i) v[i] = snf.V[i][k];
    basis.push_back(v);
  }
  return row_hnf(basis);
}

Lattice Lattice::from_generators(int ambient, const Mat& gens) {
  for (const Vec& g : gens)
    if (static_cast<int>(g.size()) != ambient)
      throw std::invalid_argument("lattice generator of wrong dimension");
  Lattice l;
  l.ambient = ambient;
  l.basis = row_hnf(gens);
  return l;
}

Lattice Lattice::full(int ambient) {
  Lattice l;
  l.ambient = ambient;
  l.basis = identity_mat(ambient);
  return l;
}

Lattice Lattice::zero(int ambient) {
  Lattice l;
  l.ambient = ambient;
  return l;
}

bool Lattice::contains(const Vec& v) const {
  if (static_cast<int>(v.size()) != ambient)
    throw std::invalid_argument("contains: dimension mismatch");
  Vec w = v;
  for (const Vec& row : basis) {
    int pc = 0;
    while (pc < ambient && row[pc] == 0) ++pc;
    if (pc == ambient) continue;
    i64 q = floor_div(w[pc], row[pc]);
    if (q != 0) row_axpy(w, row, -q);
  }
  return is_zero_vec(w);
}

bool Lattice::contains(const Lattice& other) const {
  for (const Vec& row : other.basis)
    if (!contains(row)) return false;
  return true;
}

namespace {

// Coordinates of each generator of sub in the basis of ambient.
// Throws unless sub is contained in ambient.
Mat coords_in(const Lattice& sub, const Lattice& ambient) {
  Mat bt = transpose(ambient.basis);
  Mat coords;
  for (const Vec& g : sub.basis) {
    auto x = solve_integer(bt, g);
    if (!x) throw std::invalid_argument("sublattice not contained in ambient");
    coords.push_back(*x);
  }
  return coords;
}

}  // namespace

QuotientStructure quotient_structure(const Lattice& sub, const Lattice& ambient) {
  if (sub.ambient != ambient.ambient)
    throw std::invalid_argument("quotient: ambient rank mismatch");
  Mat coords = coords_in(sub, ambient);
  QuotientStructure q;
  int k = ambient.rank();
  if (coords.empty()) {
    q.divisors.assign(k, 0);
    return q;
  }
  Snf snf = smith_normal_form(coords);
  for (i64 d : snf.diag)
    if (d != 0) q.divisors.push_back(d);
  while (static_cast<int>(q.divisors.size()) < k) q.divisors.push_back(0);
  return q;
}

Lattice saturation(const Lattice& sub, const Lattice& ambient) {
  if (sub.ambient != ambient.ambient)
    throw std::invalid_argument("saturation: ambient rank mismatch");
  if (sub.rank() == 0) return Lattice::zero(sub.ambient);
  Mat coords = coords_in(sub, ambient);
  Snf snf = smith_normal_form(coords);
  Mat rows;
  for (int i = 0; i < snf.rank; ++i) rows.push_back(snf.Vinv[i]);
  // map coordinate vectors back into the ambient space
  Mat gens;
  for (const Vec& v : rows) {
    Vec g(sub.ambient, 0);
    for (int i = 0; i < ambient.rank(); ++i)
      if (v[i] != 0) row_axpy(g, ambient.basis[i], v[i]);
    gens.push_back(g);
  }
  return Lattice::from_generators(sub.ambient, gens);
}

}  // namespace satake
