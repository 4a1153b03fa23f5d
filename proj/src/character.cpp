#include "satake/character.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace satake {

namespace {

bool is_prime(i64 p) {
  if (p < 2) return false;
  for (i64 d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

i64 pow_mod(i64 b, i64 e, i64 m) {
  i64 r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = r * b % m;
    b = b * b % m;
    e >>= 1;
  }
  return r;
}

std::vector<i64> prime_factors(i64 n) {
  std::vector<i64> f;
  for (i64 d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      f.push_back(d);
      while (n % d == 0) n /= d;
    }
  if (n > 1) f.push_back(n);
  return f;
}

}  // namespace

std::shared_ptr<const TruncatedUnits> TruncatedUnits::make(i64 p, int level) {
  if (!is_prime(p)) throw std::invalid_argument("p must be prime");
  if (p == 2)
    throw std::invalid_argument("p = 2 is not supported (units not cyclic)");
  if (level < 1) throw std::invalid_argument("level must be >= 1");
  auto u = std::make_shared<TruncatedUnits>();
  u->p = p;
  u->level = level;
  u->modulus = 1;
  for (int i = 0; i < level; ++i) {
    u->modulus *= p;
    if (u->modulus > (i64(1) << 40))
      throw std::invalid_argument("p^level too large");
  }
  u->order = u->modulus / p * (p - 1);

  auto factors = prime_factors(p - 1);
  i64 g = 0;
  for (i64 cand = 2; cand < p; ++cand) {
    bool ok = true;
    for (i64 q : factors)
      if (pow_mod(cand, (p - 1) / q, p) == 1) {
        ok = false;
        break;
      }
    if (ok) {
      g = cand;
      break;
    }
  }
  if (g == 0) throw std::logic_error("no primitive root found");
  // a generator mod p^2 generates mod every p^m
  if (pow_mod(g, p - 1, p * p) == 1) g += p;
  u->generator = g % u->modulus;

  u->dlog.assign(u->modulus, -1);
  i64 x = 1;
  for (i64 k = 0; k < u->order; ++k) {
    if (u->dlog[x] != -1) throw std::logic_error("generator order too small");
    u->dlog[x] = static_cast<int>(k);
    x = x * u->generator % u->modulus;
  }
  if (x != 1) throw std::logic_error("generator order mismatch");
  return u;
}

int TruncatedUnits::dlog_of(i64 u) const {
  u %= modulus;
  if (u < 0) u += modulus;
  int d = dlog[u];
  if (d < 0) throw std::invalid_argument("dlog of a non-unit");
  return d;
}

int CyclicCharacter::conductor() const {
  if (exponent.is_zero()) return 0;
  // The order-p^{m-c} subgroup of the cyclic unit group is the image of
  // 1+p^c, so triviality there is a condition on the p-part of the
  // exponent's denominator.
  i64 d = exponent.den;
  int e = 0;
  while (d % p == 0) {
    d /= p;
    ++e;
  }
  return e + 1;
}

TorusCharacter TorusCharacter::make(const RootDatum& d, UnitsPtr units,
                                    std::vector<Rat> exponents) {
  if (static_cast<int>(exponents.size()) != d.rank)
    throw std::invalid_argument("exponent vector has wrong rank");
  TorusCharacter mu;
  mu.datum = &d;
  mu.units = std::move(units);
  for (Rat& q : exponents) {
    q = q.mod1();
    if (mu.units->order % q.den != 0)
      throw std::invalid_argument(
          "exponent denominator does not divide the unit group order");
  }
  mu.exponents = std::move(exponents);
  return mu;
}

CyclicCharacter TorusCharacter::restrict_along(const Vec& cochar) const {
  Rat e(0);
  for (size_t i = 0; i < cochar.size(); ++i)
    if (cochar[i] != 0) e += cochar[i] * exponents[i];
  CyclicCharacter c;
  c.p = units->p;
  c.level = units->level;
  c.exponent = e.mod1();
  return c;
}

CyclicCharacter TorusCharacter::restrict_along_coroot(int root_index) const {
  return restrict_along(datum->coroots.at(root_index));
}

bool TorusCharacter::trivial_on(const Lattice& sublattice) const {
  for (const Vec& v : sublattice.basis)
    if (!restrict_along(v).trivial()) return false;
  return true;
}

TorusCharacter weyl_act(const WeylElement& w, const TorusCharacter& mu) {
  TorusCharacter out = mu;
  out.exponents = w.apply_char(mu.exponents);
  for (Rat& q : out.exponents) q = q.mod1();
  return out;
}

std::vector<int> kernel_subsystem(const TorusCharacter& mu) {
  std::vector<int> out;
  for (int i = 0; i < mu.datum->num_roots(); ++i)
    if (mu.restrict_along_coroot(i).trivial()) out.push_back(i);
  return out;
}

Lattice w_invariant_rational_characters(const RootDatum& d,
                                        const std::vector<int>& simple_positions) {
  Mat rows;
  for (int s : simple_positions) rows.push_back(d.coroots[d.simple.at(s)]);
  Mat kernel = rows.empty() ? identity_mat(d.rank) : integer_kernel(rows);
  Lattice lat;
  lat.ambient = d.rank;
  lat.basis = kernel;
  // The three descriptions of this group have equal rank by construction;
  // cross-check the lattice-quotient ranks.
  Lattice qlv = d.coroot_lattice_of(simple_positions);
  int expected = d.rank - qlv.rank();
  if (lat.rank() != expected)
    throw std::logic_error("invariant character lattice has unexpected rank");
  return lat;
}

std::vector<EasyFactor> easy_decomposition(const TorusCharacter& mu,
                                           const std::vector<int>& simple_positions) {
  const RootDatum& d = *mu.datum;
  Lattice inv = w_invariant_rational_characters(d, simple_positions);
  int s = inv.rank();
  int r = d.rank;

  // Solve sum_j c_j eta_j == exponents (mod Z^r) for c in (Q/Z)^s by
  // clearing denominators: [H | D I] (c'; y) = D q.
  i64 dcom = 1;
  for (const Rat& q : mu.exponents) dcom = std::lcm(dcom, q.den);
  Mat a(r, Vec(s + r, 0));
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < s; ++j) a[i][j] = inv.basis[j][i];
    a[i][s + i] = dcom;
  }
  Vec b(r);
  for (int i = 0; i < r; ++i) b[i] = mu.exponents[i].num * (dcom / mu.exponents[i].den);
  auto sol = solve_integer(a, b);
  if (!sol)
    throw std::invalid_argument("character is not easy for the given Levi");
  std::vector<EasyFactor> factors;
  for (int j = 0; j < s; ++j)
    factors.push_back({inv.basis[j], Rat((*sol)[j], dcom).mod1()});

  // re-evaluate: the recomposition must reproduce mu exactly
  std::vector<Rat> recomposed(r, Rat(0));
  for (const EasyFactor& f : factors)
    for (int i = 0; i < r; ++i)
      if (f.rational_character[i] != 0)
        recomposed[i] += f.rational_character[i] * f.exponent;
  for (int i = 0; i < r; ++i)
    if (recomposed[i].mod1() != mu.exponents[i])
      throw std::logic_error("easy decomposition failed to recompose");
  return factors;
}

ClassificationReport classify(const TorusCharacter& mu, size_t orbit_cap) {
  const RootDatum& d = *mu.datum;
  ClassificationReport rep;

  for (i64 bad : d.excluded_primes)
    if (mu.units->p == bad)
      rep.warnings.push_back("residue characteristic " + std::to_string(bad) +
                             " is excluded for " + d.name +
                             "; filtration guarantees do not apply");

  rep.conductors.resize(d.num_roots());
  for (int i = 0; i < d.num_roots(); ++i)
    rep.conductors[i] = mu.restrict_along_coroot(i).conductor();
  rep.kernel_roots = kernel_subsystem(mu);

  std::vector<WeylElement> gens;
  for (int s = 0; s < d.num_simple(); ++s) gens.push_back(simple_reflection(d, s));

  std::vector<Rat> seed = mu.exponents;
  auto act = [&](int g, const std::vector<Rat>& q) {
    std::vector<Rat> next = gens[g].apply_char(q);
    for (Rat& x : next) x = x.mod1();
    return next;
  };
  for (int s = 0; s < d.num_simple(); ++s)
    if (act(s, seed) == seed) rep.levi_subset.push_back(s);

  auto orb = orbit<std::vector<Rat>>(seed, gens.size(), act, orbit_cap);
  rep.orbit_size = static_cast<i64>(orb.elements.size());
  rep.w_invariant = rep.orbit_size == 1;

  ParabolicCheck pc = parabolic_from_orbit(d, rep.levi_subset, rep.orbit_size);
  rep.parabolic = pc.parabolic;
  rep.stabilizer_order = pc.stabilizer_order;

  if (rep.parabolic) {
    std::vector<int> levi_root_idx = d.levi_roots(rep.levi_subset);
    std::vector<bool> in_kernel(d.num_roots(), false);
    for (int i : rep.kernel_roots) in_kernel[i] = true;
    rep.strongly_parabolic = true;
    for (int i : levi_root_idx)
      if (!in_kernel[i]) rep.strongly_parabolic = false;

    Lattice qlv = d.coroot_lattice_of(rep.levi_subset);
    Lattice sat = saturation(qlv, d.cocharacter_lattice());
    rep.easy = mu.trivial_on(sat);
    if (rep.easy) rep.easy_factors = easy_decomposition(mu, rep.levi_subset);
  }

  rep.extendable =
      rep.kernel_roots.size() == static_cast<size_t>(d.num_roots()) && rep.w_invariant;

  // implication chain: easy-for-G => extendable => W-invariant => squares
  bool easy_for_g = rep.easy && rep.w_invariant;
  if (easy_for_g && !rep.extendable)
    throw std::logic_error("implication chain violated: easy but not extendable");
  if (rep.extendable && !rep.w_invariant)
    throw std::logic_error("implication chain violated: extendable but moved by W");
  if (rep.w_invariant)
    for (int i = 0; i < d.num_roots(); ++i)
      if (!(2 * mu.restrict_along_coroot(i).exponent).mod1().is_zero())
        throw std::logic_error(
            "implication chain violated: invariant with coroot square != 1");
  return rep;
}

TorusCharacter random_character(const RootDatum& d, UnitsPtr units,
                                std::mt19937_64& rng) {
  std::uniform_int_distribution<i64> dist(0, units->order - 1);
  std::vector<Rat> exps(d.rank);
  for (int i = 0; i < d.rank; ++i) exps[i] = Rat(dist(rng), units->order);
  return TorusCharacter::make(d, units, std::move(exps));
}

}  // namespace satake
