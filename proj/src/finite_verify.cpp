#include "satake/finite_verify.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace satake {

namespace {

i64 mod(i64 x, i64 q) {
  x %= q;
  return x < 0 ? x + q : x;
}

i64 inv_mod(i64 a, i64 q) {
  i64 t = 0, nt = 1, r = q, nr = mod(a, q);
  while (nr != 0) {
    i64 qq = r / nr;
    std::swap(t -= qq * nt, nt);
    std::swap(r -= qq * nr, nr);
  }
  if (r != 1) throw std::invalid_argument("element not invertible");
  return mod(t, q);
}

int val_p(i64 x, i64 p, int m) {
  if (x == 0) return m;
  int v = 0;
  while (x % p == 0 && v < m) {
    x /= p;
    ++v;
  }
  return v;
}

std::string mat_str(const TruncMat& x) {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < x.n; ++i) {
    os << (i ? ";" : "");
    for (int j = 0; j < x.n; ++j) os << (j ? "," : "") << x.at(i, j);
  }
  os << "]";
  return os.str();
}

}  // namespace

TruncMat TruncMat::identity(int n, i64 q) {
  TruncMat m;
  m.n = n;
  m.q = q;
  m.a.assign(n * n, 0);
  for (int i = 0; i < n; ++i) m.a[i * n + i] = 1 % q;
  return m;
}

TruncMat TruncMat::operator*(const TruncMat& o) const {
  TruncMat r;
  r.n = n;
  r.q = q;
  r.a.assign(n * n, 0);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      i64 v = at(i, k);
      if (!v) continue;
      for (int j = 0; j < n; ++j)
        r.a[i * n + j] = (r.a[i * n + j] + v * o.at(k, j)) % q;
    }
  return r;
}

i64 TruncMat::det() const {
  if (n == 1) return at(0, 0) % q;
  if (n == 2) return mod(at(0, 0) * at(1, 1) - at(0, 1) * at(1, 0), q);
  if (n == 3) {
    i64 d = at(0, 0) * (at(1, 1) * at(2, 2) % q - at(1, 2) * at(2, 1) % q) -
            at(0, 1) * (at(1, 0) * at(2, 2) % q - at(1, 2) * at(2, 0) % q) +
            at(0, 2) * (at(1, 0) * at(2, 1) % q - at(1, 1) * at(2, 0) % q);
    return mod(d, q);
  }
  if (n == 4) {
    // Laplace along the first row with 3x3 cofactors
    i64 d = 0;
    for (int j = 0; j < 4; ++j) {
      TruncMat sub;
      sub.n = 3;
      sub.q = q;
      sub.a.assign(9, 0);
      for (int r = 1; r < 4; ++r) {
        int cc = 0;
        for (int c = 0; c < 4; ++c) {
          if (c == j) continue;
          sub.at(r - 1, cc++) = at(r, c);
        }
      }
      i64 term = at(0, j) * sub.det() % q;
      d += (j % 2 == 0) ? term : -term;
    }
    return mod(d, q);
  }
  throw std::invalid_argument("det supported for n <= 4");
}

std::optional<TruncMat> TruncMat::inverse() const {
  // Gauss-Jordan with unit pivots; valid over Z/p^m since a matrix is
  // invertible iff it is invertible mod p.
  TruncMat left = *this;
  TruncMat right = identity(n, q);
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (std::gcd(left.at(r, col), q) == 1) {
        piv = r;
        break;
      }
    if (piv < 0) return std::nullopt;
    if (piv != col)
      for (int j = 0; j < n; ++j) {
        std::swap(left.a[piv * n + j], left.a[col * n + j]);
        std::swap(right.a[piv * n + j], right.a[col * n + j]);
      }
    i64 inv = inv_mod(left.at(col, col), q);
    for (int j = 0; j < n; ++j) {
      left.at(col, j) = left.at(col, j) * inv % q;
      right.at(col, j) = right.at(col, j) * inv % q;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col) continue;
      i64 f = left.at(r, col);
      if (!f) continue;
      for (int j = 0; j < n; ++j) {
        left.at(r, j) = mod(left.at(r, j) - f * left.at(col, j), q);
        right.at(r, j) = mod(right.at(r, j) - f * right.at(col, j), q);
      }
    }
  }
  return right;
}

TruncMat TruncMat::commutator(const TruncMat& o) const {
  auto ai = inverse();
  auto bi = o.inverse();
  if (!ai || !bi) throw std::invalid_argument("commutator of non-invertible matrix");
  return *this * o * *ai * *bi;
}

TruncMat elementary(int n, i64 q, int i, int j, i64 x) {
  TruncMat m = TruncMat::identity(n, q);
  m.at(i, j) = mod(x, q);
  return m;
}

TruncMat diagonal(i64 q, const std::vector<i64>& entries) {
  TruncMat m = TruncMat::identity(entries.size(), q);
  for (size_t i = 0; i < entries.size(); ++i) m.at(i, i) = mod(entries[i], q);
  return m;
}

bool in_group(const TruncMat& m, GroupTag tag) {
  i64 d = m.det();
  switch (tag) {
    case GroupTag::GL: return std::gcd(d, m.q) == 1;
    case GroupTag::SL: return d == 1 % m.q;
    case GroupTag::Sp: {
      // split form with Gram matrix [[0, I], [-I, 0]]
      if (m.n % 2) return false;
      int h = m.n / 2;
      auto form = [&](int i, int j) -> i64 {
        if (i < h && j == i + h) return 1;
        if (i >= h && j == i - h) return m.q - 1;
        return 0;
      };
      for (int i = 0; i < m.n; ++i)
        for (int j = 0; j < m.n; ++j) {
          i64 s = 0;
          for (int k = 0; k < m.n; ++k)
            for (int l = 0; l < m.n; ++l)
              s = (s + m.at(k, i) * form(k, l) % m.q * m.at(l, j)) % m.q;
          if (s != form(i, j) % m.q) return false;
        }
      return true;
    }
  }
  return false;
}

// ---------------------------------------------------------------------------

CheckOutcome verify_explicit_commutator(i64 p, int m) {
  CheckOutcome out;
  out.claim = "torus-as-conjugated-commutator identity in SL_2";
  out.mode = "exhaustive";
  out.params = "p=" + std::to_string(p) + ",m=" + std::to_string(m);
  i64 q = 1;
  for (int i = 0; i < m; ++i) q *= p;
  for (i64 f = 1; f < q; ++f) {
    if (f % p == 0) continue;
    ++out.trials;
    i64 finv = inv_mod(f, q);
    TruncMat lhs = elementary(2, q, 1, 0, -(f - 1) * (f - 1) % q * finv % q) *
                   elementary(2, q, 1, 0, f - 1).commutator(elementary(2, q, 0, 1, -1)) *
                   elementary(2, q, 0, 1, (1 - f) * finv % q);
    TruncMat rhs = diagonal(q, {f, finv});
    if (!(lhs == rhs)) {
      out.ok = false;
      out.witness = "f=" + std::to_string(f);
      return out;
    }
  }
  return out;
}

CheckOutcome verify_comm_tech(i64 p, int m, i64 trials, uint64_t seed) {
  CheckOutcome out;
  out.claim = "[unipotent, torus] commutator and the ideal of 1-g^2";
  out.params = "p=" + std::to_string(p) + ",m=" + std::to_string(m);
  i64 q = 1;
  for (int i = 0; i < m; ++i) q *= p;

  // commutator convention a b a^-1 b^-1; with b = diag(g, g^-1) the lower
  // left entry is x (1 - g^-2), which ranges over the same set as x (1 - g^2)
  auto identity_holds = [&](i64 x, i64 g) {
    TruncMat a = elementary(2, q, 1, 0, x);
    TruncMat b = diagonal(q, {g, inv_mod(g, q)});
    TruncMat c = a.commutator(b);
    i64 ginv = inv_mod(g, q);
    i64 expect = mod(x * mod(1 - ginv * ginv % q, q), q);
    return c == elementary(2, q, 1, 0, expect);
  };

  if (m <= 2) {
    out.mode = "exhaustive";
    for (i64 x = 0; x < q; ++x)
      for (i64 g = 1; g < q; ++g) {
        if (g % p == 0) continue;
        ++out.trials;
        if (!identity_holds(x, g)) {
          out.ok = false;
          out.witness = "x=" + std::to_string(x) + ",g=" + std::to_string(g);
          return out;
        }
      }
  } else {
    out.mode = "sampled";
    out.seed = seed;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<i64> dist(0, q - 1);
    for (i64 t = 0; t < trials; ++t) {
      i64 x = dist(rng);
      i64 g = dist(rng);
      if (g % p == 0) g = (g + 1) % q;
      ++out.trials;
      if (!identity_holds(x, g)) {
        out.ok = false;
        out.witness = "x=" + std::to_string(x) + ",g=" + std::to_string(g);
        return out;
      }
    }
  }

  // the achievable set {x(1-g^2)}: equals pR for p = 3 and all of R for p >= 5
  std::set<i64> achieved;
  for (i64 g = 1; g < q; ++g) {
    if (g % p == 0) continue;
    i64 c = mod(1 - g * g % q, q);
    for (i64 x = 0; x < q; ++x) achieved.insert(x * c % q);
  }
  std::set<i64> expected;
  if (p == 3)
    for (i64 x = 0; x < q; x += p) expected.insert(x);
  else
    for (i64 x = 0; x < q; ++x) expected.insert(x);
  if (achieved != expected) {
    out.ok = false;
    out.witness = "ideal mismatch: |achieved|=" + std::to_string(achieved.size());
  }
  return out;
}

namespace {

uint64_t pack(const TruncMat& m) {
  uint64_t key = 0;
  for (i64 e : m.a) key = key * static_cast<uint64_t>(m.q) + static_cast<uint64_t>(e);
  return key;
}

// closure of a generating set inside a finite group, breadth-first
std::vector<TruncMat> bfs_closure(const std::vector<TruncMat>& gens, size_t cap) {
  if (gens.empty()) return {};
  std::vector<TruncMat> elems{TruncMat::identity(gens[0].n, gens[0].q)};
  std::unordered_set<uint64_t> seen{pack(elems[0])};
  for (size_t head = 0; head < elems.size(); ++head) {
    for (const TruncMat& g : gens) {
      TruncMat next = elems[head] * g;
      if (seen.insert(pack(next)).second) {
        if (elems.size() >= cap) throw cap_exceeded("group closure cap exceeded");
        elems.push_back(next);
      }
    }
  }
  return elems;
}

}  // namespace

CheckOutcome derived_contains_torus(GroupTag tag, int n, i64 p, int m, size_t cap) {
  CheckOutcome out;
  out.claim = "derived subgroup contains the diagonal torus";
  out.mode = "exhaustive";
  out.params = "n=" + std::to_string(n) + ",p=" + std::to_string(p) +
               ",m=" + std::to_string(m);
  if (tag != GroupTag::SL || n != 2)
    throw std::invalid_argument("derived_contains_torus: only SL_2 is enumerable here");
  i64 q = 1;
  for (int i = 0; i < m; ++i) q *= p;
  if (q > 9)
    throw cap_exceeded("derived_contains_torus: group too large to enumerate");

  std::vector<TruncMat> group;
  for (i64 a = 0; a < q; ++a)
    for (i64 b = 0; b < q; ++b)
      for (i64 c = 0; c < q; ++c)
        for (i64 d = 0; d < q; ++d) {
          if (mod(a * d - b * c, q) != 1 % q) continue;
          TruncMat x;
          x.n = 2;
          x.q = q;
          x.a = {a, b, c, d};
          group.push_back(x);
        }

  std::set<TruncMat> comms;
  for (const TruncMat& x : group)
    for (const TruncMat& y : group) comms.insert(x.commutator(y));
  std::vector<TruncMat> derived =
      bfs_closure(std::vector<TruncMat>(comms.begin(), comms.end()), cap);
  std::unordered_set<uint64_t> derived_keys;
  for (const TruncMat& x : derived) derived_keys.insert(pack(x));

  for (i64 g = 1; g < q; ++g) {
    if (g % p == 0) continue;
    ++out.trials;
    TruncMat t = diagonal(q, {g, inv_mod(g, q)});
    if (!derived_keys.count(pack(t))) {
      out.ok = false;
      out.witness = "torus element g=" + std::to_string(g);
      return out;
    }
  }
  return out;
}

bool spec_member(const TruncMat& x, const FiltrationSpec& spec) {
  const RootDatum& d = *spec.datum;
  if (d.family != "GL" || x.n != d.size_param)
    throw std::invalid_argument("spec membership implemented for GL_n only");
  i64 p = 1;
  // recover p from q = p^m: smallest prime factor
  for (i64 c = 2; c * c <= x.q; ++c)
    if (x.q % c == 0) {
      p = c;
      break;
    }
  if (p == 1) p = x.q;
  int m = 0;
  for (i64 t = x.q; t > 1; t /= p) ++m;
  for (int i = 0; i < x.n; ++i)
    for (int j = 0; j < x.n; ++j) {
      if (i == j) continue;
      Vec r(x.n, 0);
      r[i] = 1;
      r[j] = -1;
      int need = std::min(spec.exponents.at(d.index_of_root(r)), m);
      if (val_p(x.at(i, j), p, m) < need) return false;
    }
  return std::gcd(x.det(), x.q) == 1;
}

TruncMat random_spec_member(const FiltrationSpec& spec, i64 p, int m,
                            std::mt19937_64& rng) {
  const RootDatum& d = *spec.datum;
  int n = d.size_param;
  i64 q = 1;
  for (int i = 0; i < m; ++i) q *= p;
  std::uniform_int_distribution<i64> dist(0, q - 1);
  while (true) {
    TruncMat x = TruncMat::identity(n, q);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (i == j) {
          x.at(i, j) = dist(rng);
          continue;
        }
        Vec r(n, 0);
        r[i] = 1;
        r[j] = -1;
        int e = std::min(spec.exponents.at(d.index_of_root(r)), m);
        i64 scale = 1;
        for (int t = 0; t < e; ++t) scale *= p;
        x.at(i, j) = scale * (dist(rng) % (q / scale)) % q;
      }
    if (std::gcd(x.det(), q) == 1) return x;
  }
}

namespace {

std::vector<std::pair<int, int>> block_ranges(const std::vector<int>& blocks) {
  std::vector<std::pair<int, int>> r;
  int start = 0;
  for (int b : blocks) {
    r.push_back({start, start + b});
    start += b;
  }
  return r;
}

// blocks of consecutive indices from the Levi simple positions of a GL datum
std::vector<int> blocks_from_levi(int n, const std::vector<int>& levi_positions) {
  std::vector<bool> joined(n - 1, false);
  for (int s : levi_positions) joined.at(s) = true;
  std::vector<int> blocks;
  int cur = 1;
  for (int i = 0; i < n - 1; ++i) {
    if (joined[i]) {
      ++cur;
    } else {
      blocks.push_back(cur);
      cur = 1;
    }
  }
  blocks.push_back(cur);
  return blocks;
}

TruncMat submatrix(const TruncMat& x, int r0, int r1, int c0, int c1) {
  TruncMat s;
  s.n = r1 - r0;
  s.q = x.q;
  s.a.assign(s.n * s.n, 0);
  for (int i = r0; i < r1; ++i)
    for (int j = c0; j < c1; ++j) s.at(i - r0, j - c0) = x.at(i, j);
  return s;
}

}  // namespace

IwahoriFactors iwahori_factorize(const TruncMat& x, const FiltrationSpec& spec,
                                 const std::vector<int>& levi_blocks) {
  (void)spec;  // membership is the caller's precondition
  auto ranges = block_ranges(levi_blocks);
  int n = x.n;
  if (ranges.empty() || ranges.back().second != n)
    throw std::invalid_argument("block sizes do not sum to the matrix size");

  TruncMat upper = TruncMat::identity(n, x.q);
  TruncMat lower = TruncMat::identity(n, x.q);
  TruncMat core = x;

  // peel off the last block, then recurse on the leading principal part
  for (int k = static_cast<int>(ranges.size()) - 1; k >= 1; --k) {
    auto [b0, b1] = ranges[k];
    TruncMat dblock = submatrix(core, b0, b1, b0, b1);
    auto dinv = dblock.inverse();
    if (!dinv)
      throw std::invalid_argument("pivot failure: Levi block not invertible");
    // u has B D^-1 in the strip above the block, v has D^-1 C to the left
    TruncMat u = TruncMat::identity(n, x.q);
    TruncMat v = TruncMat::identity(n, x.q);
    for (int i = 0; i < b0; ++i)
      for (int j = b0; j < b1; ++j) {
        i64 s = 0;
        for (int t = b0; t < b1; ++t)
          s = (s + core.at(i, t) * dinv->at(t - b0, j - b0)) % x.q;
        u.at(i, j) = s;
      }
    for (int i = b0; i < b1; ++i)
      for (int j = 0; j < b0; ++j) {
        i64 s = 0;
        for (int t = b0; t < b1; ++t)
          s = (s + dinv->at(i - b0, t - b0) * core.at(t, j)) % x.q;
        v.at(i, j) = s;
      }
    // core <- u^-1 core v^-1 ; unipotent inverses flip the strip sign
    TruncMat uinv = TruncMat::identity(n, x.q);
    TruncMat vinv = TruncMat::identity(n, x.q);
    for (int i = 0; i < b0; ++i)
      for (int j = b0; j < b1; ++j) uinv.at(i, j) = mod(-u.at(i, j), x.q);
    for (int i = b0; i < b1; ++i)
      for (int j = 0; j < b0; ++j) vinv.at(i, j) = mod(-v.at(i, j), x.q);
    core = uinv * core * vinv;
    upper = upper * u;
    lower = v * lower;
  }

  IwahoriFactors f{upper, core, lower};
  if (!(f.upper * f.levi * f.lower == x))
    throw std::logic_error("factorization does not multiply back");

  // structural sanity: levi part block-diagonal, unipotent parts supported
  // strictly above/below the block diagonal
  auto block_of = [&](int i) {
    for (size_t k = 0; k < ranges.size(); ++k)
      if (i >= ranges[k].first && i < ranges[k].second) return static_cast<int>(k);
    return -1;
  };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int bi = block_of(i), bj = block_of(j);
      if (bi != bj && f.levi.at(i, j) != 0)
        throw std::logic_error("levi factor not block diagonal");
      if (bi >= bj && f.upper.at(i, j) != (i == j ? 1 : 0))
        throw std::logic_error("upper factor not block-upper unipotent");
      if (bi <= bj && f.lower.at(i, j) != (i == j ? 1 : 0))
        throw std::logic_error("lower factor not block-lower unipotent");
    }
  return f;
}

CheckOutcome decomposition_check(const FiltrationSpec& spec, GroupTag tag,
                                 const std::vector<int>& levi_blocks, i64 p, int m,
                                 DecompMode mode, i64 trials, uint64_t seed,
                                 size_t cap) {
  CheckOutcome out;
  out.claim = "subgroup decomposes as U+ x T x U-";
  out.params = "p=" + std::to_string(p) + ",m=" + std::to_string(m);
  i64 q = 1;
  for (int i = 0; i < m; ++i) q *= p;
  const RootDatum& d = *spec.datum;

  if (mode == DecompMode::Exhaustive) {
    out.mode = "exhaustive";
    if (d.rank > 2 || d.num_roots() != 2)
      throw std::invalid_argument("exhaustive mode covers GL_2 and SL_2 only");
    // positive root = index of e_1 - e_2 (GL) or alpha (SL realization)
    int pos_idx = d.simple.at(0);
    int neg_idx = d.negation[pos_idx];
    int fp = std::min(spec.exponents[pos_idx], m);
    int fm = std::min(spec.exponents[neg_idx], m);
    i64 sp = 1, sm = 1;
    for (int i = 0; i < fp; ++i) sp *= p;
    for (int i = 0; i < fm; ++i) sm *= p;

    auto units = TruncatedUnits::make(p, m);
    std::vector<TruncMat> gens;
    gens.push_back(elementary(2, q, 0, 1, sp));
    gens.push_back(elementary(2, q, 1, 0, sm));
    std::vector<TruncMat> torus;
    if (tag == GroupTag::GL) {
      for (i64 u = 1; u < q; ++u) {
        if (u % p == 0) continue;
        for (i64 v = 1; v < q; ++v) {
          if (v % p == 0) continue;
          torus.push_back(diagonal(q, {u, v}));
        }
      }
      gens.push_back(diagonal(q, {units->generator, 1}));
      gens.push_back(diagonal(q, {1, units->generator}));
    } else {
      for (i64 u = 1; u < q; ++u) {
        if (u % p == 0) continue;
        torus.push_back(diagonal(q, {u, inv_mod(u, q)}));
      }
      gens.push_back(diagonal(q, {units->generator, inv_mod(units->generator, q)}));
    }
    std::vector<TruncMat> group = bfs_closure(gens, cap);

    std::unordered_set<uint64_t> products;
    i64 plus_size = q / sp, minus_size = q / sm;
    for (i64 a = 0; a < plus_size; ++a)
      for (const TruncMat& t : torus)
        for (i64 b = 0; b < minus_size; ++b) {
          TruncMat prod = elementary(2, q, 0, 1, a * sp) * t * elementary(2, q, 1, 0, b * sm);
          products.insert(pack(prod));
        }
    out.trials = static_cast<i64>(products.size());
    i64 expect = plus_size * static_cast<i64>(torus.size()) * minus_size;
    if (static_cast<i64>(group.size()) != expect ||
        static_cast<i64>(products.size()) != expect) {
      out.ok = false;
      out.witness = "|J|=" + std::to_string(group.size()) +
                    " products=" + std::to_string(products.size()) +
                    " expected=" + std::to_string(expect);
    }
    return out;
  }

  out.mode = "sampled";
  out.seed = seed;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<i64> dist(0, q - 1);
  int n = d.size_param;
  auto ranges = block_ranges(levi_blocks);

  auto exponent_of = [&](int i, int j) {
    Vec r(n, 0);
    r[i] = 1;
    r[j] = -1;
    return std::min(spec.exponents.at(d.index_of_root(r)), m);
  };
  auto sample_block_invertible = [&](int size) {
    while (true) {
      TruncMat b;
      b.n = size;
      b.q = q;
      b.a.assign(size * size, 0);
      for (i64& e : b.a) e = dist(rng);
      if (std::gcd(b.det(), q) == 1) return b;
    }
  };

  for (i64 t = 0; t < trials; ++t) {
    TruncMat up = TruncMat::identity(n, q);
    TruncMat low = TruncMat::identity(n, q);
    TruncMat mid = TruncMat::identity(n, q);
    for (size_t bi = 0; bi < ranges.size(); ++bi) {
      auto [r0, r1] = ranges[bi];
      TruncMat blk = sample_block_invertible(r1 - r0);
      for (int i = r0; i < r1; ++i)
        for (int j = r0; j < r1; ++j) mid.at(i, j) = blk.at(i - r0, j - r0);
      for (size_t bj = bi + 1; bj < ranges.size(); ++bj) {
        auto [c0, c1] = ranges[bj];
        for (int i = r0; i < r1; ++i)
          for (int j = c0; j < c1; ++j) {
            i64 scale = 1;
            for (int e = 0; e < exponent_of(i, j); ++e) scale *= p;
            up.at(i, j) = scale * (dist(rng) % (q / scale)) % q;
            scale = 1;
            for (int e = 0; e < exponent_of(j, i); ++e) scale *= p;
            low.at(j, i) = scale * (dist(rng) % (q / scale)) % q;
          }
      }
    }
    TruncMat x = up * mid * low;
    IwahoriFactors f = iwahori_factorize(x, spec, levi_blocks);
    ++out.trials;
    if (!(f.upper == up && f.levi == mid && f.lower == low)) {
      out.ok = false;
      out.witness = "trial " + std::to_string(t) + ": " + mat_str(x);
      return out;
    }
  }
  return out;
}

CheckOutcome k_closure_check(const FiltrationSpec& spec, i64 p, int m, i64 trials,
                             uint64_t seed) {
  CheckOutcome out;
  out.claim = "valuation-pattern membership closed under products and inverses";
  out.mode = "sampled";
  out.seed = seed;
  out.params = "p=" + std::to_string(p) + ",m=" + std::to_string(m);
  std::mt19937_64 rng(seed);
  for (i64 t = 0; t < trials; ++t) {
    TruncMat x = random_spec_member(spec, p, m, rng);
    TruncMat y = random_spec_member(spec, p, m, rng);
    TruncMat prod = x * y;
    ++out.trials;
    if (!spec_member(prod, spec)) {
      out.ok = false;
      out.witness = "product " + mat_str(x) + " * " + mat_str(y);
      return out;
    }
    auto inv = x.inverse();
    if (!inv || !spec_member(*inv, spec)) {
      out.ok = false;
      out.witness = "inverse of " + mat_str(x);
      return out;
    }
  }
  return out;
}

ExtendedCharacter make_extended_character(const TorusCharacter& mu,
                                          const ClassificationReport& rep,
                                          const PositiveSystem& pos) {
  const RootDatum& d = *mu.datum;
  if (d.family != "GL")
    throw std::invalid_argument("extended characters implemented for GL_n only");
  ExtendedCharacter chi;
  chi.spec = build_k_spec(mu, rep, pos);
  chi.blocks = blocks_from_levi(d.size_param, rep.levi_subset);
  chi.units = mu.units;
  int idx = 0;
  for (int b : chi.blocks) {
    // the exponent is constant across a block for strongly parabolic mu
    Rat theta = mu.exponents[idx];
    for (int i = idx; i < idx + b; ++i)
      if (mu.exponents[i] != theta)
        throw std::logic_error("exponents not constant on a Levi block");
    chi.block_exponents.push_back(theta);
    idx += b;
  }
  return chi;
}

Rat evaluate_mu(const TruncMat& x, const ExtendedCharacter& chi) {
  if (!spec_member(x, chi.spec))
    throw std::invalid_argument("matrix is not a member of the K-spec");
  IwahoriFactors f = iwahori_factorize(x, chi.spec, chi.blocks);
  auto ranges = block_ranges(chi.blocks);
  Rat value(0);
  for (size_t k = 0; k < ranges.size(); ++k) {
    auto [b0, b1] = ranges[k];
    i64 det = submatrix(f.levi, b0, b1, b0, b1).det();
    value += chi.block_exponents[k] * chi.units->dlog_of(det);
  }
  return value.mod1();
}

}  // namespace satake
