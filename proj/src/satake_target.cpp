#include "satake/satake_target.hpp"

#include <algorithm>
#include <stdexcept>

namespace satake {

void LatticeAlgebraElement::add(const Vec& v, const Rat& c) {
  if (c.is_zero()) return;
  auto it = terms.find(v);
  if (it == terms.end()) {
    terms.emplace(v, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms.erase(it);
}

LatticeAlgebraElement convolve(const LatticeAlgebraElement& a,
                               const LatticeAlgebraElement& b) {
  LatticeAlgebraElement r;
  for (const auto& [va, ca] : a.terms)
    for (const auto& [vb, cb] : b.terms) r.add(vec_add(va, vb), ca * cb);
  return r;
}

InvariantRing::InvariantRing(const RootDatum& d, std::vector<int> simple_positions,
                             size_t orbit_cap)
    : datum_(&d), positions_(std::move(simple_positions)), cap_(orbit_cap) {
  for (int s : positions_) gens_.push_back(simple_reflection(d, s));
}

std::vector<Vec> InvariantRing::orbit_of(const Vec& v) {
  if (gens_.empty()) return {v};
  auto act = [&](int g, const Vec& x) { return gens_[g].apply_cochar(x); };
  auto res = orbit<Vec>(v, gens_.size(), act, cap_);
  return res.elements;
}

Vec InvariantRing::dominant_rep(const Vec& v) {
  std::vector<Vec> orb = orbit_of(v);
  return *std::max_element(orb.begin(), orb.end());
}

OrbitSum InvariantRing::orbit_sum(const Vec& v) {
  Vec rep = dominant_rep(v);
  auto it = orbit_cache_.find(rep);
  if (it == orbit_cache_.end()) {
    std::vector<Vec> orb = orbit_of(rep);
    std::sort(orb.begin(), orb.end());
    it = orbit_cache_.emplace(rep, std::move(orb)).first;
  }
  OrbitSum s;
  s.rep = rep;
  s.orbit_size = static_cast<i64>(it->second.size());
  for (const Vec& x : it->second) s.expanded.add(x, Rat(1));
  return s;
}

std::vector<std::pair<Vec, i64>> InvariantRing::multiply(const Vec& rep1,
                                                         const Vec& rep2) {
  OrbitSum a = orbit_sum(rep1);
  OrbitSum b = orbit_sum(rep2);
  LatticeAlgebraElement prod = convolve(a.expanded, b.expanded);

  std::vector<std::pair<Vec, i64>> out;
  while (!prod.terms.empty()) {
    // lexicographically maximal remaining support point
    auto top = std::prev(prod.terms.end());
    Vec kappa = top->first;
    Rat coeff = top->second;
    if (!coeff.is_integer() || coeff.num <= 0)
      throw std::logic_error("orbit-sum expansion with non-positive-integer coeff");
    OrbitSum mk = orbit_sum(kappa);
    if (mk.rep != kappa)
      throw std::logic_error("expansion not invariant: leading term not dominant");
    for (const auto& [v, c] : mk.expanded.terms) {
      prod.add(v, Rat(-coeff.num) * c);
      auto it = prod.terms.find(v);
      if (it != prod.terms.end() && it->second.num < 0)
        throw std::logic_error("expansion not invariant: orbit not fully covered");
    }
    out.push_back({kappa, coeff.num});
  }
  std::sort(out.begin(), out.end(),
            [](const auto& x, const auto& y) { return y.first < x.first; });
  return out;
}

RingSummary InvariantRing::summary(int bound) {
  const int r = datum_->rank;
  RingSummary s;
  Vec cur(r, -bound);
  while (true) {
    if (dominant_rep(cur) == cur) s.basis.push_back(cur);
    int k = r - 1;
    while (k >= 0 && cur[k] == bound) {
      cur[k] = -bound;
      --k;
    }
    if (k < 0) break;
    ++cur[k];
  }
  auto in_box = [&](const Vec& v) {
    for (i64 x : v)
      if (x < -bound || x > bound) return false;
    return true;
  };
  for (size_t i = 0; i < s.basis.size(); ++i)
    for (size_t j = i; j < s.basis.size(); ++j) {
      RingSummary::Product p;
      p.i = static_cast<int>(i);
      p.j = static_cast<int>(j);
      p.expansion = multiply(s.basis[i], s.basis[j]);
      for (const auto& [v, c] : p.expansion)
        if (!in_box(v)) p.clipped = true;
      s.products.push_back(std::move(p));
    }
  return s;
}

}  // namespace satake
