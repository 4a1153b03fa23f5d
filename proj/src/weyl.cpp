#include "satake/weyl.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace satake {

WeylElement WeylElement::identity(int rank) {
  WeylElement w;
  w.on_cochar = identity_mat(rank);
  w.on_char = identity_mat(rank);
  return w;
}

WeylElement WeylElement::operator*(const WeylElement& o) const {
  WeylElement r;
  r.on_cochar = mat_mul(on_cochar, o.on_cochar);
  r.on_char = mat_mul(on_char, o.on_char);
  r.word = word;
  r.word.insert(r.word.end(), o.word.begin(), o.word.end());
  return r;
}

WeylElement WeylElement::inverse() const {
  // on_char(w) = transpose(inverse(on_cochar(w))), so the inverse matrices
  // are just transposes of the partner action.
  WeylElement r;
  r.on_cochar = transpose(on_char);
  r.on_char = transpose(on_cochar);
  r.word.assign(word.rbegin(), word.rend());
  return r;
}

WeylElement root_reflection(const RootDatum& d, int root_index) {
  const Vec& alpha = d.roots.at(root_index);
  const Vec& coalpha = d.coroots.at(root_index);
  int n = d.rank;
  WeylElement w;
  w.on_cochar = identity_mat(n);
  w.on_char = identity_mat(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      w.on_cochar[i][j] -= coalpha[i] * alpha[j];
      w.on_char[i][j] -= alpha[i] * coalpha[j];
    }
  return w;
}

WeylElement simple_reflection(const RootDatum& d, int simple_position) {
  WeylElement w = root_reflection(d, d.simple.at(simple_position));
  w.word = {simple_position};
  return w;
}

i64 group_order(const RootDatum& d) {
  return weyl_order_of_components(diagram_components(d));
}

i64 group_order(const RootDatum& d, const std::vector<int>& simple_positions) {
  return weyl_order_of_components(diagram_components(d, simple_positions));
}

ParabolicCheck parabolic_from_orbit(const RootDatum& d,
                                    const std::vector<int>& fixing_simples,
                                    i64 orbit_size) {
  ParabolicCheck c;
  c.fixing_simples = fixing_simples;
  c.orbit_size = orbit_size;
  i64 full = group_order(d);
  if (full % orbit_size != 0)
    throw std::logic_error("orbit size does not divide |W|");
  c.stabilizer_order = full / orbit_size;
  i64 sub = group_order(d, fixing_simples);
  c.parabolic = sub * orbit_size == full;
  if (c.parabolic) c.descriptor = {fixing_simples, sub};
  return c;
}

std::vector<WeylElement> enumerate_weyl(const RootDatum& d, size_t cap) {
  std::vector<WeylElement> gens;
  for (int s = 0; s < d.num_simple(); ++s) gens.push_back(simple_reflection(d, s));
  auto act = [&](int g, const Mat& m) { return mat_mul(gens[g].on_cochar, m); };
  auto res = orbit<Mat>(identity_mat(d.rank), gens.size(), act, cap);
  std::vector<WeylElement> out;
  for (size_t i = 0; i < res.elements.size(); ++i) {
    WeylElement w = WeylElement::identity(d.rank);
    // words are recorded left-to-right as applied, so compose in reverse
    for (auto it = res.words[i].rbegin(); it != res.words[i].rend(); ++it)
      w = w * gens[*it];
    out.push_back(std::move(w));
  }
  return out;
}

bool stabilizer_parabolic_up_to_conjugacy(const RootDatum& d,
                                          const std::vector<Rat>& exponents,
                                          size_t cap) {
  auto mod1 = [](std::vector<Rat> v) {
    for (Rat& x : v) x = x.mod1();
    return v;
  };
  std::vector<Rat> seed = mod1(exponents);
  std::vector<WeylElement> all = enumerate_weyl(d, cap);
  std::vector<int> stab;
  for (size_t i = 0; i < all.size(); ++i)
    if (mod1(all[i].apply_char(seed)) == seed) stab.push_back(static_cast<int>(i));

  auto key = [](const WeylElement& w) { return w.on_cochar; };
  std::set<Mat> stab_set;
  for (int i : stab) stab_set.insert(key(all[i]));

  int ns = d.num_simple();
  for (int mask = 0; mask < (1 << ns); ++mask) {
    std::vector<int> subset;
    for (int s = 0; s < ns; ++s)
      if (mask & (1 << s)) subset.push_back(s);
    if (group_order(d, subset) != static_cast<i64>(stab.size())) continue;
    // enumerate W_subset
    std::vector<WeylElement> sgens;
    for (int s : subset) sgens.push_back(simple_reflection(d, s));
    auto act = [&](int g, const Mat& m) { return mat_mul(sgens[g].on_cochar, m); };
    auto sub = orbit<Mat>(identity_mat(d.rank), sgens.size(), act, cap);
    for (const WeylElement& w : all) {
      bool match = true;
      Mat winv_cochar = transpose(w.on_char);
      for (const Mat& m : sub.elements) {
        Mat conj = mat_mul(w.on_cochar, mat_mul(m, winv_cochar));
        if (!stab_set.count(conj)) {
          match = false;
          break;
        }
      }
      if (match) return true;
    }
  }
  return false;
}

}  // namespace satake
