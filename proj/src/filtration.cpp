#include "satake/filtration.hpp"

#include <algorithm>
#include <stdexcept>

namespace satake {

PositiveSystem PositiveSystem::standard(const RootDatum& d) {
  PositiveSystem p;
  p.positive = d.positive;
  return p;
}

PositiveSystem PositiveSystem::from_regular_covector(const RootDatum& d, const Vec& v) {
  PositiveSystem p;
  p.positive.assign(d.num_roots(), false);
  for (int i = 0; i < d.num_roots(); ++i) {
    i64 s = dot(v, d.roots[i]);
    if (s == 0)
      throw std::invalid_argument("covector is not regular for this root system");
    p.positive[i] = s > 0;
  }
  return p;
}

ConcaveCheck check_concave(const ConcaveFunction& f) {
  const RootDatum& d = *f.datum;
  ConcaveCheck c;
  for (int a = 0; a < d.num_roots(); ++a) {
    for (int b = 0; b < d.num_roots(); ++b) {
      int s = d.sum_index(a, b);
      if (s < 0) continue;
      if (f(a) + f(b) < f(s)) {
        c.ok = false;
        c.violations.push_back({0, a, b, s});
      }
    }
    int na = d.negation[a];
    if (a < na && f(a) + f(na) < 1) {
      c.ok = false;
      c.violations.push_back({1, a, na, -1});
    }
  }
  return c;
}

ConcaveFunction roche_function_from_conductors(const RootDatum& d,
                                               const std::vector<int>& conductors,
                                               const PositiveSystem& pos) {
  ConcaveFunction f;
  f.datum = &d;
  f.values.assign(d.num_roots(), 0);
  for (int i = 0; i < d.num_roots(); ++i) {
    int c = std::max(conductors.at(i), 1);
    f.values[i] = pos.positive.at(i) ? c / 2 : (c + 1) / 2;
  }
  return f;
}

ConcaveFunction roche_function(const TorusCharacter& mu, const PositiveSystem& pos) {
  const RootDatum& d = *mu.datum;
  std::vector<int> cond(d.num_roots());
  for (int i = 0; i < d.num_roots(); ++i)
    cond[i] = mu.restrict_along_coroot(i).conductor();
  ConcaveFunction f = roche_function_from_conductors(d, cond, pos);
  bool prime_ok = std::find(d.excluded_primes.begin(), d.excluded_primes.end(),
                            mu.units->p) == d.excluded_primes.end();
  if (prime_ok && !check_concave(f).ok)
    throw std::logic_error("filtration function failed concavity at a good prime");
  return f;
}

LeviCompatCheck check_levi_compat(const ConcaveFunction& f,
                                  const std::vector<int>& simple_positions) {
  const RootDatum& d = *f.datum;
  std::vector<bool> in_levi(d.num_roots(), false);
  for (int i : d.levi_roots(simple_positions)) in_levi[i] = true;
  LeviCompatCheck out;
  for (int a = 0; a < d.num_roots(); ++a) {
    if (!in_levi[a]) continue;
    for (int b = 0; b < d.num_roots(); ++b) {
      if (in_levi[b]) continue;
      int s = d.sum_index(a, b);
      if (s < 0) continue;
      if (f(b) != f(s)) {
        out.ok = false;
        out.witness = ConcavityViolation{0, a, b, s};
        return out;
      }
    }
  }
  return out;
}

ConcaveFunction fprime_from_g(const RootDatum& d,
                              const std::vector<std::pair<int, int>>& g_values,
                              const std::vector<int>& simple_positions,
                              const PositiveSystem& pos) {
  std::vector<bool> in_levi(d.num_roots(), false);
  for (int i : d.levi_roots(simple_positions)) in_levi[i] = true;

  ConcaveFunction f;
  f.datum = &d;
  f.values.assign(d.num_roots(), 0);
  std::vector<bool> have(d.num_roots(), false);
  for (auto [idx, val] : g_values) {
    if (in_levi.at(idx))
      throw std::invalid_argument("g assigns a value inside the Levi subsystem");
    f.values[idx] = val;
    have[idx] = true;
  }
  for (int i = 0; i < d.num_roots(); ++i) {
    if (in_levi[i]) {
      f.values[i] = pos.positive[i] ? 0 : 1;
    } else if (!have[i]) {
      throw std::invalid_argument("g is not total on the complement of the Levi");
    }
  }

  // preconditions of the extension lemma, restricted to the complement
  for (int a = 0; a < d.num_roots(); ++a) {
    if (in_levi[a]) continue;
    int na = d.negation[a];
    if (f(a) + f(na) < 1)
      throw std::invalid_argument("g violates f(a)+f(-a) >= 1 at root " +
                                  std::to_string(a));
    for (int b = 0; b < d.num_roots(); ++b) {
      if (in_levi[b]) continue;
      int s = d.sum_index(a, b);
      if (s < 0 || in_levi[s]) continue;
      if (f(a) + f(b) < f(s))
        throw std::invalid_argument("g violates concavity at pair (" +
                                    std::to_string(a) + "," + std::to_string(b) + ")");
    }
  }
  ConcaveFunction probe = f;
  LeviCompatCheck compat = check_levi_compat(probe, simple_positions);
  if (!compat.ok)
    throw std::invalid_argument("g violates the Levi compatibility condition");

  ConcaveCheck full = check_concave(f);
  if (!full.ok)
    throw std::logic_error("extension lemma produced a non-concave function");
  return f;
}

FiltrationSpec build_j_spec(const TorusCharacter& mu, const PositiveSystem& pos) {
  FiltrationSpec spec;
  spec.datum = mu.datum;
  spec.exponents = roche_function(mu, pos).values;
  return spec;
}

FiltrationSpec build_k_spec(const TorusCharacter& mu, const ClassificationReport& rep,
                            const PositiveSystem& pos) {
  if (!rep.strongly_parabolic)
    throw std::invalid_argument("K-spec requires a strongly parabolic character");
  const RootDatum& d = *mu.datum;
  ConcaveFunction f = roche_function(mu, pos);
  std::vector<bool> in_levi(d.num_roots(), false);
  for (int i : d.levi_roots(rep.levi_subset)) in_levi[i] = true;

  FiltrationSpec spec;
  spec.datum = &d;
  spec.levi = rep.levi_subset;
  spec.exponents.assign(d.num_roots(), 0);
  for (int i = 0; i < d.num_roots(); ++i)
    spec.exponents[i] = in_levi[i] ? 0 : f(i);

  bool prime_ok = std::find(d.excluded_primes.begin(), d.excluded_primes.end(),
                            mu.units->p) == d.excluded_primes.end();
  if (prime_ok) {
    // conditions (ii) and (iii) on g, plus the round-trip through the
    // extension lemma off the Levi
    for (int i = 0; i < d.num_roots(); ++i) {
      if (in_levi[i]) continue;
      if (spec.exponents[i] + spec.exponents[d.negation[i]] < 1)
        throw std::logic_error("K-spec violates the positivity condition");
    }
    for (int a = 0; a < d.num_roots(); ++a)
      for (int b = 0; b < d.num_roots(); ++b) {
        int s = d.sum_index(a, b);
        if (s < 0) continue;
        if (spec.exponents[a] + spec.exponents[b] < spec.exponents[s])
          throw std::logic_error("K-spec violates concavity");
      }
    std::vector<std::pair<int, int>> g_vals;
    for (int i = 0; i < d.num_roots(); ++i)
      if (!in_levi[i]) g_vals.push_back({i, spec.exponents[i]});
    ConcaveFunction fp = fprime_from_g(d, g_vals, rep.levi_subset, pos);
    for (int i = 0; i < d.num_roots(); ++i)
      if (!in_levi[i] && fp(i) != spec.exponents[i])
        throw std::logic_error("K-spec round-trip mismatch off the Levi");
  }
  return spec;
}

std::optional<Mat> exponent_matrix(const FiltrationSpec& spec) {
  const RootDatum& d = *spec.datum;
  if (d.family == "GL") {
    int n = d.size_param;
    Mat e(n, Vec(n, 0));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        Vec r(n, 0);
        r[i] = 1;
        r[j] = -1;
        e[i][j] = spec.exponents.at(d.index_of_root(r));
      }
    return e;
  }
  if (d.family == "Sp") {
    int n = d.size_param / 2;
    Mat e(2 * n, Vec(2 * n, 0));
    auto val = [&](const Vec& root) { return spec.exponents.at(d.index_of_root(root)); };
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (i != j) {
          Vec r(n, 0);
          r[i] = 1;
          r[j] = -1;
          e[i][j] = val(r);            // block A
          e[n + j][n + i] = val(r);    // block D carries the transpose root
        }
        Vec s(n, 0);
        s[i] += 1;
        s[j] += 1;
        e[i][n + j] = val(s);  // block B: e_i + e_j (2e_i on the diagonal)
        Vec t(n, 0);
        t[i] -= 1;
        t[j] -= 1;
        e[n + i][j] = val(t);  // block C: -(e_i + e_j)
      }
    return e;
  }
  return std::nullopt;
}

}  // namespace satake
