#include "satake/root_datum.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>

namespace satake {

namespace {

[[noreturn]] void invalid(const std::string& msg) {
  throw std::invalid_argument(msg);
}

Vec unit_vec(int n, int i) {
  Vec v(n, 0);
  v[i] = 1;
  return v;
}

}  // namespace

int RootDatum::index_of_root(const Vec& r) const {
  auto it = root_index.find(r);
  return it == root_index.end() ? -1 : it->second;
}

int RootDatum::sum_index(int i, int j) const {
  return sum_table[i][j];
}

Lattice RootDatum::root_lattice() const {
  return Lattice::from_generators(rank, roots);
}

Lattice RootDatum::coroot_lattice() const {
  return Lattice::from_generators(rank, coroots);
}

Lattice RootDatum::coroot_lattice_of(const std::vector<int>& simple_positions) const {
  Mat gens;
  for (int s : simple_positions) gens.push_back(coroots[simple.at(s)]);
  return Lattice::from_generators(rank, gens);
}

Lattice RootDatum::root_lattice_of(const std::vector<int>& simple_positions) const {
  Mat gens;
  for (int s : simple_positions) gens.push_back(roots[simple.at(s)]);
  return Lattice::from_generators(rank, gens);
}

std::vector<int> RootDatum::levi_roots(const std::vector<int>& simple_positions) const {
  std::vector<bool> keep(num_simple(), false);
  for (int s : simple_positions) keep.at(s) = true;
  std::vector<int> out;
  for (int i = 0; i < num_roots(); ++i) {
    bool in = true;
    for (int s = 0; s < num_simple(); ++s)
      if (!keep[s] && simple_coords[i][s] != 0) in = false;
    if (in) out.push_back(i);
  }
  return out;
}

void RootDatum::finish() {
  const int nr = num_roots();
  if (static_cast<int>(coroots.size()) != nr) invalid("roots/coroots size mismatch");
  root_index.clear();
  for (int i = 0; i < nr; ++i) {
    if (static_cast<int>(roots[i].size()) != rank ||
        static_cast<int>(coroots[i].size()) != rank)
      invalid("root of wrong dimension");
    if (root_index.count(roots[i])) invalid("duplicate root");
    root_index[roots[i]] = i;
  }

  for (int i = 0; i < nr; ++i) {
    if (dot(coroots[i], roots[i]) != 2) invalid("pairing <coroot,root> != 2");
    if (root_index.count(vec_scaled(roots[i], 2))) invalid("non-reduced root system");
    for (int j = 0; j < nr; ++j) {
      i64 c = dot(coroots[i], roots[j]);
      i64 bound = (roots[j] == roots[i] || roots[j] == vec_neg(roots[i])) ? 2 : 3;
      if (c > bound || c < -bound) invalid("Cartan integer out of range");
    }
  }

  negation.assign(nr, -1);
  for (int i = 0; i < nr; ++i) {
    int j = index_of_root(vec_neg(roots[i]));
    if (j < 0) invalid("root set not symmetric");
    negation[i] = j;
    if (coroots[j] != vec_neg(coroots[i])) invalid("coroot of -alpha != -coroot");
  }

  // reflections permute the root set, compatibly on both sides
  for (int i = 0; i < nr; ++i)
    for (int j = 0; j < nr; ++j) {
      Vec r = vec_sub(roots[j], vec_scaled(roots[i], dot(coroots[i], roots[j])));
      int k = index_of_root(r);
      if (k < 0) invalid("reflection leaves the root set");
      Vec cr = vec_sub(coroots[j], vec_scaled(coroots[i], dot(coroots[j], roots[i])));
      if (coroots[k] != cr) invalid("reflection incompatible with coroots");
    }

  // simple coordinates: unique integer expansion, all of one sign
  const int ns = num_simple();
  Mat simple_mat_t(rank, Vec(ns, 0));
  for (int s = 0; s < ns; ++s)
    for (int k = 0; k < rank; ++k) simple_mat_t[k][s] = roots[simple[s]][k];
  simple_coords.assign(nr, Vec(ns, 0));
  positive.assign(nr, false);
  for (int i = 0; i < nr; ++i) {
    auto c = solve_integer(simple_mat_t, roots[i]);
    if (!c) invalid("root outside the integer span of the simple roots");
    simple_coords[i] = *c;
    bool nonneg = true, nonpos = true;
    for (i64 x : *c) {
      if (x < 0) nonneg = false;
      if (x > 0) nonpos = false;
    }
    if (!nonneg && !nonpos) invalid("root with mixed signs in the simple basis");
    positive[i] = nonneg && !is_zero_vec(*c);
  }
  for (int s = 0; s < ns; ++s)
    if (!positive[simple[s]]) invalid("simple root not positive");

  sum_table.assign(nr, std::vector<int>(nr, -1));
  for (int i = 0; i < nr; ++i)
    for (int j = 0; j < nr; ++j)
      sum_table[i][j] = index_of_root(vec_add(roots[i], roots[j]));
}

// ---------------------------------------------------------------------------
// catalog construction

namespace {

// Cartan matrix convention: C[i][j] = <coroot_i, root_j>. The row of a short
// simple root carries the -2/-3 entry at its long neighbor.
Mat cartan_A(int n) {
  Mat c = identity_mat(n);
  for (int i = 0; i < n; ++i) c[i][i] = 2;
  for (int i = 0; i + 1 < n; ++i) c[i][i + 1] = c[i + 1][i] = -1;
  return c;
}

Mat cartan_B(int n) {  // last simple root short
  Mat c = cartan_A(n);
  if (n >= 2) {
    c[n - 2][n - 1] = -1;
    c[n - 1][n - 2] = -2;
  }
  return c;
}

Mat cartan_C(int n) {  // last simple root long
  Mat c = cartan_A(n);
  if (n >= 2) {
    c[n - 2][n - 1] = -2;
    c[n - 1][n - 2] = -1;
  }
  return c;
}

Mat cartan_D(int n) {
  Mat c = cartan_A(n);
  if (n >= 2) {
    c[n - 2][n - 1] = c[n - 1][n - 2] = 0;
    if (n >= 3) {
      c[n - 3][n - 1] = c[n - 1][n - 3] = -1;
    }
  }
  return c;
}

Mat cartan_E(int n) {
  // Bourbaki numbering: chain 1-3-4-5-...-n with node 2 attached to node 4.
  Mat c(n, Vec(n, 0));
  for (int i = 0; i < n; ++i) c[i][i] = 2;
  auto link = [&](int a, int b) { c[a][b] = c[b][a] = -1; };
  link(0, 2);
  link(2, 3);
  link(1, 3);
  for (int i = 3; i + 1 < n; ++i) link(i, i + 1);
  return c;
}

Mat cartan_F4() {
  Mat c = cartan_A(4);
  c[1][2] = -1;
  c[2][1] = -2;
  return c;
}

Mat cartan_G2() {
  return Mat{{2, -3}, {-1, 2}};
}

// Generates the full root system from simple (root, coroot) pairs by closing
// under simple reflections.
void generate_roots(RootDatum& d, const Mat& simple_roots, const Mat& simple_coroots) {
  std::map<Vec, Vec> seen;  // root -> coroot
  std::deque<std::pair<Vec, Vec>> queue;
  for (size_t i = 0; i < simple_roots.size(); ++i) {
    seen[simple_roots[i]] = simple_coroots[i];
    queue.emplace_back(simple_roots[i], simple_coroots[i]);
  }
  while (!queue.empty()) {
    auto [r, cr] = queue.front();
    queue.pop_front();
    for (size_t s = 0; s < simple_roots.size(); ++s) {
      i64 pairing = dot(simple_coroots[s], r);
      Vec nr = vec_sub(r, vec_scaled(simple_roots[s], pairing));
      Vec ncr = vec_sub(cr, vec_scaled(simple_coroots[s], dot(cr, simple_roots[s])));
      if (!seen.count(nr)) {
        seen[nr] = ncr;
        queue.emplace_back(nr, ncr);
      }
    }
  }
  d.roots.clear();
  d.coroots.clear();
  for (auto& [r, cr] : seen) {
    d.roots.push_back(r);
    d.coroots.push_back(cr);
  }
  d.simple.clear();
  for (const Vec& sr : simple_roots) {
    for (int i = 0; i < d.num_roots(); ++i)
      if (d.roots[i] == sr) {
        d.simple.push_back(i);
        break;
      }
  }
  if (d.simple.size() != simple_roots.size()) invalid("lost a simple root");
}

// Semisimple datum from a Cartan matrix. sc: the cocharacter lattice has the
// simple coroots as its basis (X = weight lattice). adjoint: the character
// lattice has the simple roots as its basis.
RootDatum from_cartan(const Mat& cartan, bool sc) {
  int n = cartan.size();
  RootDatum d;
  d.rank = n;
  Mat sr, scr;
  for (int j = 0; j < n; ++j) {
    if (sc) {
      Vec root(n);
      for (int i = 0; i < n; ++i) root[i] = cartan[i][j];
      sr.push_back(root);
      scr.push_back(unit_vec(n, j));
    } else {
      sr.push_back(unit_vec(n, j));
      Vec coroot(n);
      for (int i = 0; i < n; ++i) coroot[i] = cartan[j][i];
      scr.push_back(coroot);
    }
  }
  generate_roots(d, sr, scr);
  return d;
}

int find_root(const Mat& roots, const Vec& v) {
  for (size_t i = 0; i < roots.size(); ++i)
    if (roots[i] == v) return static_cast<int>(i);
  invalid("expected root not present");
}

void push_pair(Mat& roots, Mat& coroots, const Vec& r, const Vec& cr) {
  roots.push_back(r);
  coroots.push_back(cr);
  roots.push_back(vec_neg(r));
  coroots.push_back(vec_neg(cr));
}

RootDatum datum_gl(int n) {
  RootDatum d;
  d.rank = n;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Vec r = vec_sub(unit_vec(n, i), unit_vec(n, j));
      push_pair(d.roots, d.coroots, r, r);
    }
  for (int i = 0; i + 1 < n; ++i)
    d.simple.push_back(find_root(d.roots, vec_sub(unit_vec(n, i), unit_vec(n, i + 1))));
  return d;
}

RootDatum datum_sp(int n) {  // Sp_{2n}, type C_n, epsilon coordinates
  RootDatum d;
  d.rank = n;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Vec r = vec_sub(unit_vec(n, i), unit_vec(n, j));
      push_pair(d.roots, d.coroots, r, r);
      Vec s = vec_add(unit_vec(n, i), unit_vec(n, j));
      push_pair(d.roots, d.coroots, s, s);
    }
  for (int i = 0; i < n; ++i)
    push_pair(d.roots, d.coroots, vec_scaled(unit_vec(n, i), 2), unit_vec(n, i));
  d.simple.clear();
  for (int i = 0; i + 1 < n; ++i)
    d.simple.push_back(find_root(d.roots, vec_sub(unit_vec(n, i), unit_vec(n, i + 1))));
  d.simple.push_back(find_root(d.roots, vec_scaled(unit_vec(n, n - 1), 2)));
  return d;
}

RootDatum datum_so_odd(int n) {  // SO_{2n+1}, type B_n, adjoint in epsilon coords
  RootDatum d;
  d.rank = n;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Vec r = vec_sub(unit_vec(n, i), unit_vec(n, j));
      push_pair(d.roots, d.coroots, r, r);
      Vec s = vec_add(unit_vec(n, i), unit_vec(n, j));
      push_pair(d.roots, d.coroots, s, s);
    }
  for (int i = 0; i < n; ++i)
    push_pair(d.roots, d.coroots, unit_vec(n, i), vec_scaled(unit_vec(n, i), 2));
  d.simple.clear();
  for (int i = 0; i + 1 < n; ++i)
    d.simple.push_back(find_root(d.roots, vec_sub(unit_vec(n, i), unit_vec(n, i + 1))));
  d.simple.push_back(find_root(d.roots, unit_vec(n, n - 1)));
  return d;
}

RootDatum datum_so_even(int n) {  // SO_{2n}, type D_n, epsilon coordinates
  RootDatum d;
  d.rank = n;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Vec r = vec_sub(unit_vec(n, i), unit_vec(n, j));
      push_pair(d.roots, d.coroots, r, r);
      Vec s = vec_add(unit_vec(n, i), unit_vec(n, j));
      push_pair(d.roots, d.coroots, s, s);
    }
  d.simple.clear();
  for (int i = 0; i + 1 < n; ++i)
    d.simple.push_back(find_root(d.roots, vec_sub(unit_vec(n, i), unit_vec(n, i + 1))));
  if (n >= 2)
    d.simple.push_back(find_root(d.roots, vec_add(unit_vec(n, n - 2), unit_vec(n, n - 1))));
  return d;
}

RootDatum datum_gsp(int n) {  // GSp_{2n}; last coordinate is the similitude slot
  RootDatum d;
  int r = n + 1;
  d.rank = r;
  Vec c = unit_vec(r, n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Vec a = vec_sub(unit_vec(r, i), unit_vec(r, j));
      push_pair(d.roots, d.coroots, a, a);
      Vec s = vec_sub(vec_add(unit_vec(r, i), unit_vec(r, j)), c);
      push_pair(d.roots, d.coroots, s, vec_add(unit_vec(r, i), unit_vec(r, j)));
    }
  for (int i = 0; i < n; ++i) {
    Vec l = vec_sub(vec_scaled(unit_vec(r, i), 2), c);
    push_pair(d.roots, d.coroots, l, unit_vec(r, i));
  }
  d.simple.clear();
  for (int i = 0; i + 1 < n; ++i)
    d.simple.push_back(find_root(d.roots, vec_sub(unit_vec(r, i), unit_vec(r, i + 1))));
  d.simple.push_back(find_root(d.roots, vec_sub(vec_scaled(unit_vec(r, n - 1), 2), c)));
  return d;
}

RootDatum datum_go_odd(int n) {  // connected GO_{2n+1} = SO_{2n+1} x GL_1
  RootDatum so = datum_so_odd(n);
  RootDatum d;
  d.rank = n + 1;
  for (int i = 0; i < so.num_roots(); ++i) {
    Vec r = so.roots[i];
    r.push_back(0);
    Vec cr = so.coroots[i];
    cr.push_back(0);
    d.roots.push_back(r);
    d.coroots.push_back(cr);
  }
  for (int s : so.simple) d.simple.push_back(s);
  return d;
}

RootDatum datum_go_even(int n) {  // connected GO_{2n} (similitude D_n)
  RootDatum d;
  int r = n + 1;
  d.rank = r;
  Vec c = unit_vec(r, n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Vec a = vec_sub(unit_vec(r, i), unit_vec(r, j));
      push_pair(d.roots, d.coroots, a, a);
      Vec s = vec_sub(vec_add(unit_vec(r, i), unit_vec(r, j)), c);
      push_pair(d.roots, d.coroots, s, vec_add(unit_vec(r, i), unit_vec(r, j)));
    }
  d.simple.clear();
  for (int i = 0; i + 1 < n; ++i)
    d.simple.push_back(find_root(d.roots, vec_sub(unit_vec(r, i), unit_vec(r, i + 1))));
  if (n >= 2)
    d.simple.push_back(
        find_root(d.roots, vec_sub(vec_add(unit_vec(r, n - 2), unit_vec(r, n - 1)), c)));
  return d;
}

constexpr int kMaxClassicalSize = 12;
constexpr int kMaxExceptionalRank = 8;

void check_classical(const std::string& name, int n, int min_n) {
  if (n < min_n) invalid("size parameter too small for " + name);
  if (n > kMaxClassicalSize)
    invalid(name + ": size parameter exceeds the catalog cap of " +
            std::to_string(kMaxClassicalSize));
}

}  // namespace

std::vector<std::string> catalog_families() {
  return {"GL", "SL",   "PGL", "Sp",   "GSp",  "Sp/Z", "SO",  "Spin", "GO",
          "SO/Z", "E6", "E7",  "E8",   "E6/Z", "E7/Z", "F4",  "G2"};
}

RootDatum catalog_lookup(const std::string& name, int size_param) {
  RootDatum d;
  int n = size_param;
  if (name == "GL") {
    check_classical(name, n, 1);
    d = datum_gl(n);
  } else if (name == "SL") {
    check_classical(name, n, 2);
    d = from_cartan(cartan_A(n - 1), true);
  } else if (name == "PGL") {
    check_classical(name, n, 2);
    d = from_cartan(cartan_A(n - 1), false);
  } else if (name == "Sp") {
    check_classical(name, n, 2);
    if (n % 2) invalid("Sp size parameter must be even");
    d = datum_sp(n / 2);
  } else if (name == "GSp") {
    check_classical(name, n, 2);
    if (n % 2) invalid("GSp size parameter must be even");
    d = datum_gsp(n / 2);
  } else if (name == "Sp/Z") {
    check_classical(name, n, 2);
    if (n % 2) invalid("Sp/Z size parameter must be even");
    d = from_cartan(cartan_C(n / 2), false);
  } else if (name == "SO") {
    check_classical(name, n, 2);
    d = n % 2 ? datum_so_odd(n / 2) : datum_so_even(n / 2);
  } else if (name == "Spin") {
    check_classical(name, n, 3);
    d = n % 2 ? from_cartan(cartan_B(n / 2), true)
              : from_cartan(cartan_D(n / 2), true);
  } else if (name == "GO") {
    check_classical(name, n, 2);
    d = n % 2 ? datum_go_odd(n / 2) : datum_go_even(n / 2);
  } else if (name == "SO/Z") {
    check_classical(name, n, 4);
    if (n % 2) invalid("SO/Z size parameter must be even");
    d = from_cartan(cartan_D(n / 2), false);
  } else if (name == "E6" || name == "E7" || name == "E8" || name == "E6/Z" ||
             name == "E7/Z" || name == "F4" || name == "G2") {
    int rk = name == "G2" ? 2 : (name == "F4" ? 4 : name[1] - '0');
    if (rk > kMaxExceptionalRank) invalid("exceptional rank cap exceeded");
    if (size_param != 0 && size_param != rk)
      invalid("size parameter does not match " + name);
    bool adjoint = name.size() > 2 && name.substr(2) == "/Z";
    if (name == "G2")
      d = from_cartan(cartan_G2(), true);
    else if (name == "F4")
      d = from_cartan(cartan_F4(), true);
    else
      d = from_cartan(cartan_E(rk), !adjoint);
    n = rk;
  } else {
    invalid("unknown catalog name: " + name);
  }
  bool exceptional = name[0] == 'E' || name[0] == 'F' || name[0] == 'G';
  d.name = exceptional ? name : name + "_" + std::to_string(n);
  d.family = name;
  d.size_param = n;
  d.finish();

  std::set<i64> primes;
  for (const auto& comp : diagram_components(d)) {
    switch (comp.type) {
      case 'A': break;
      case 'B':
      case 'C':
      case 'D': primes.insert(2); break;
      case 'F':
      case 'G': primes.insert({2, 3}); break;
      case 'E':
        primes.insert({2, 3});
        if (comp.n == 8) primes.insert(5);
        break;
      default: break;
    }
  }
  d.excluded_primes.assign(primes.begin(), primes.end());
  return d;
}

// ---------------------------------------------------------------------------
// diagram classification

std::vector<DiagramComponent> diagram_components(const RootDatum& d) {
  std::vector<int> all(d.num_simple());
  std::iota(all.begin(), all.end(), 0);
  return diagram_components(d, all);
}

namespace {

struct Edge {
  int to;
  int weight;  // <a_i-coroot, a_j-root> * <a_j-coroot, a_i-root>
};

DiagramComponent classify_component(const RootDatum& d, const std::vector<int>& verts,
                                    const std::map<int, std::vector<Edge>>& adj) {
  DiagramComponent comp;
  comp.members = verts;
  comp.n = static_cast<int>(verts.size());
  auto cartan_entry = [&](int a, int b) {
    return dot(d.coroots[d.simple[a]], d.roots[d.simple[b]]);
  };
  int n = comp.n;
  if (n == 1) {
    comp.type = 'A';
    return comp;
  }
  int doubles = 0, triples = 0;
  std::pair<int, int> double_edge{-1, -1};
  std::map<int, int> degree;
  for (int v : verts) {
    for (const Edge& e : adj.at(v)) {
      degree[v]++;
      if (v < e.to) {
        if (e.weight == 2) {
          ++doubles;
          double_edge = {v, e.to};
        } else if (e.weight == 3) {
          ++triples;
        }
      }
    }
  }
  if (triples > 0) {
    if (n != 2 || triples != 1) invalid("unrecognized diagram (triple edge)");
    comp.type = 'G';
    return comp;
  }
  if (doubles > 1) invalid("unrecognized diagram (multiple double edges)");
  int branch = -1;
  for (auto& [v, deg] : degree) {
    if (deg > 3) invalid("unrecognized diagram (vertex of degree > 3)");
    if (deg == 3) {
      if (branch != -1) invalid("unrecognized diagram (two branch vertices)");
      branch = v;
    }
  }
  if (doubles == 1) {
    if (branch != -1) invalid("unrecognized diagram (double edge with branch)");
    if (n == 2) {
      comp.type = 'C';  // B2 = C2
      return comp;
    }
    auto [u, v] = double_edge;
    bool u_end = degree[u] == 1, v_end = degree[v] == 1;
    if (!u_end && !v_end) {
      if (n == 4) {
        comp.type = 'F';
        return comp;
      }
      invalid("unrecognized diagram (interior double edge)");
    }
    int end = u_end ? u : v;
    int inner = u_end ? v : u;
    // the end vertex is long exactly when its neighbor's row shows -2
    bool end_long = cartan_entry(inner, end) == -2;
    comp.type = end_long ? 'C' : 'B';
    return comp;
  }
  // simply-laced component
  if (branch == -1) {
    comp.type = 'A';
    return comp;
  }
  std::vector<int> arms;
  for (const Edge& e : adj.at(branch)) {
    int len = 1, prev = branch, cur = e.to;
    while (degree[cur] == 2) {
      for (const Edge& f : adj.at(cur))
        if (f.to != prev) {
          prev = cur;
          cur = f.to;
          ++len;
          break;
        }
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  if (arms.size() != 3) invalid("unrecognized diagram (branch arms)");
  if (arms[0] == 1 && arms[1] == 1) {
    comp.type = 'D';
    return comp;
  }
  if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4) {
    comp.type = 'E';
    return comp;
  }
  invalid("unrecognized diagram (arm lengths)");
}

}  // namespace

std::vector<DiagramComponent> diagram_components(const RootDatum& d,
                                                 const std::vector<int>& simple_positions) {
  std::map<int, std::vector<Edge>> adj;
  for (int a : simple_positions) adj[a] = {};
  for (int a : simple_positions)
    for (int b : simple_positions) {
      if (a >= b) continue;
      i64 w = dot(d.coroots[d.simple[a]], d.roots[d.simple[b]]) *
              dot(d.coroots[d.simple[b]], d.roots[d.simple[a]]);
      if (w != 0) {
        adj[a].push_back({b, static_cast<int>(w)});
        adj[b].push_back({a, static_cast<int>(w)});
      }
    }
  std::set<int> unseen(simple_positions.begin(), simple_positions.end());
  std::vector<DiagramComponent> comps;
  while (!unseen.empty()) {
    std::vector<int> comp;
    std::deque<int> queue{*unseen.begin()};
    unseen.erase(unseen.begin());
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      comp.push_back(v);
      for (const Edge& e : adj[v])
        if (unseen.erase(e.to)) queue.push_back(e.to);
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(classify_component(d, comp, adj));
  }
  return comps;
}

i64 weyl_order_of_components(const std::vector<DiagramComponent>& comps) {
  auto factorial = [](int n) {
    i64 f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
  };
  i64 order = 1;
  for (const auto& c : comps) {
    switch (c.type) {
      case 'A': order *= factorial(c.n + 1); break;
      case 'B':
      case 'C': order *= (i64(1) << c.n) * factorial(c.n); break;
      case 'D': order *= (i64(1) << (c.n - 1)) * factorial(c.n); break;
      case 'G': order *= 12; break;
      case 'F': order *= 1152; break;
      case 'E':
        order *= c.n == 6 ? 51840LL : (c.n == 7 ? 2903040LL : 696729600LL);
        break;
      default: invalid("unrecognized component type");
    }
  }
  return order;
}

StructuralPredicates structural_predicates(const RootDatum& d) {
  StructuralPredicates p;
  auto comps = diagram_components(d);
  p.simply_laced = true;
  for (const auto& c : comps)
    if (c.type == 'B' || c.type == 'C' || c.type == 'F' || c.type == 'G')
      p.simply_laced = false;
  p.no_a1_or_cn_factor = true;
  for (const auto& c : comps)
    if (c.type == 'C' || (c.type == 'A' && c.n == 1)) p.no_a1_or_cn_factor = false;
  p.x_mod_q_free =
      quotient_structure(d.root_lattice(), d.character_lattice()).torsion_free();
  p.xv_mod_qv_free =
      quotient_structure(d.coroot_lattice(), d.cocharacter_lattice()).torsion_free();
  p.condition_i_prime = true;
  for (int s = 0; s < d.num_simple(); ++s) {
    i64 g = 0;
    for (i64 x : d.roots[d.simple[s]]) g = std::gcd(g, x < 0 ? -x : x);
    if (g != 1) p.condition_i_prime = false;
  }
  return p;
}

RootDatum levi_subdatum(const RootDatum& d, const std::vector<int>& simple_positions) {
  for (int s : simple_positions)
    if (s < 0 || s >= d.num_simple()) invalid("levi_subdatum: invalid simple position");
  std::vector<int> keep = d.levi_roots(simple_positions);
  RootDatum l;
  l.name = d.name + "+levi";
  l.family = d.family;
  l.size_param = d.size_param;
  l.rank = d.rank;
  l.excluded_primes = d.excluded_primes;
  for (int i : keep) {
    l.roots.push_back(d.roots[i]);
    l.coroots.push_back(d.coroots[i]);
  }
  std::vector<int> sorted = simple_positions;
  std::sort(sorted.begin(), sorted.end());
  for (int s : sorted) {
    for (int i = 0; i < l.num_roots(); ++i)
      if (l.roots[i] == d.roots[d.simple[s]]) {
        l.simple.push_back(i);
        break;
      }
  }
  l.finish();
  return l;
}

Lattice lambda_minus_w_lambda_lattice(const RootDatum& d) {
  Mat gens;
  for (int s = 0; s < d.num_simple(); ++s) {
    const Vec& root = d.roots[d.simple[s]];
    const Vec& coroot = d.coroots[d.simple[s]];
    for (int k = 0; k < d.rank; ++k)
      if (root[k] != 0) gens.push_back(vec_scaled(coroot, root[k]));
  }
  return Lattice::from_generators(d.rank, gens);
}

}  // namespace satake
