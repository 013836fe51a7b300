#include "mono/hyperell.hpp"

#include <algorithm>
#include <random>
#include <unordered_set>

#include "mono/errors.hpp"

namespace mono {

void validate_hyperell(const HyperellFamilySpec& fam) {
  if (fam.genus < 2) throw GenusTooSmall("hyperelliptic module needs genus >= 2");
  int d = fam.f.deg_x();
  if (d != 2 * fam.genus + 2 && d != 2 * fam.genus + 1)
    throw Error("deg_x f must be 2g+2 or 2g+1");
  const RationalFunction& lc = fam.f.lc();
  if (!(lc.is_constant() && lc.constant_value() == Rational(1)))
    throw Error("f must be monic in x");
  RationalFunction disc = resultant_x(fam.f, fam.f.d_dx());
  if (disc.is_zero()) throw DegenerateFamily("generic fiber of y^2 = f is not squarefree");
}

Sp2gF2Element Sp2gF2Element::identity(int g) {
  Sp2gF2Element m;
  m.g = g;
  m.col.resize(2 * g);
  for (int c = 0; c < 2 * g; ++c) m.col[c] = 1u << c;
  return m;
}

Sp2gF2Element operator*(const Sp2gF2Element& a, const Sp2gF2Element& b) {
  // (a*b) x = a (b x)
  Sp2gF2Element m;
  m.g = a.g;
  m.col.resize(b.col.size());
  for (size_t c = 0; c < b.col.size(); ++c) {
    uint32_t v = 0;
    uint32_t bits = b.col[c];
    while (bits) {
      int r = __builtin_ctz(bits);
      bits &= bits - 1;
      v ^= a.col[r];
    }
    m.col[c] = v;
  }
  return m;
}

bool Sp2gF2Element::preserves_form() const {
  // Gram matrix of {P1+P2, P2+P3, ...}: <e_i, e_j> = 1 iff |i-j| = 1.
  int n = 2 * g;
  auto pair = [&](uint32_t x, uint32_t y) {
    uint32_t acc = 0;
    for (int i = 0; i < n; ++i)
      if (x >> i & 1u) {
        uint32_t row = 0;
        if (i > 0) row |= 1u << (i - 1);
        if (i + 1 < n) row |= 1u << (i + 1);
        acc ^= __builtin_popcount(row & y) & 1u;
      }
    return acc & 1u;
  };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      uint32_t expect = (std::abs(i - j) == 1) ? 1u : 0u;
      if (pair(col[i], col[j]) != expect) return false;
    }
  return true;
}

namespace {

// Even subset of {0..2g+1} (bit mask) -> canonical coordinates in the basis
// e_i = {P_i, P_{i+1}}, i = 0..2g-1, after reducing modulo the full set.
uint32_t even_subset_coords(uint32_t subset, int g) {
  int npts = 2 * g + 2;
  // prefix parities: coordinate on e_k is the parity of |S ∩ {0..k}|
  uint32_t coords = 0;
  int parity = 0;
  for (int k = 0; k < npts - 1; ++k) {
    parity ^= (subset >> k) & 1;
    if (parity) coords |= 1u << k;
  }
  // relation: the full set has coordinates e_0 + e_2 + e_4 + ...
  if (coords >> (npts - 2) & 1u) {
    uint32_t rel = 0;
    for (int k = 0; k < npts - 1; k += 2) rel |= 1u << k;
    coords ^= rel;
  }
  return coords & ((1u << (2 * g)) - 1);
}

}  // namespace

Sp2gF2Element permutation_to_sp(const std::vector<int>& perm, int g) {
  int npts = 2 * g + 2;
  if (static_cast<int>(perm.size()) != npts) throw Error("permutation size must be 2g+2");
  Sp2gF2Element m;
  m.g = g;
  m.col.resize(2 * g);
  for (int c = 0; c < 2 * g; ++c) {
    uint32_t image = (1u << perm[c]) | (1u << perm[c + 1]);
    m.col[c] = even_subset_coords(image, g);
  }
  if (!m.preserves_form()) throw InternalError("permutation_to_sp: form not preserved");
  return m;
}

std::vector<std::vector<int>> weierstrass_permutations(const HyperellFamilySpec& fam,
                                                       const PipelineOptions& opts) {
  validate_hyperell(fam);
  int d = fam.f.deg_x();
  int npts = 2 * fam.genus + 2;
  RationalFunction disc = resultant_x(fam.f, fam.f.d_dx());
  Polynomial punct_poly = (disc.num() * disc.den()).squarefree();
  for (int k = 0; k <= fam.f.deg_x(); ++k) {
    // poles of coefficients also degenerate the fiber
    punct_poly = (punct_poly * fam.f.coeff(k).den()).squarefree();
  }
  Punctures punct;
  punct.poly = punct_poly;
  punct.roots = isolate_roots(punct_poly, opts.precision, opts.precision_cap);
  LoopSystem loops = build_loops(punct.roots, opts);
  TrackOptions topts;
  topts.precision = opts.precision;
  topts.precision_cap = opts.precision_cap;
  topts.step_budget = opts.step_budget;
  std::vector<std::vector<int>> out;
  for (auto& w : braids_of_system(fam.f, loops.lassos, topts, opts.seed)) {
    std::vector<int> perm = permutation_of(w);
    if (d < npts) perm.push_back(npts - 1);  // the branch point at infinity stays put
    out.push_back(std::move(perm));
  }
  return out;
}

Integer sp2g_f2_order(int g) {
  if (g < 1) throw Error("sp2g_f2_order: g >= 1");
  Integer r = 1;
  mpz_mul_2exp(r.get_mpz_t(), r.get_mpz_t(), static_cast<mp_bitcnt_t>(g) * g);
  for (int k = 1; k <= g; ++k) {
    Integer f = 1;
    mpz_mul_2exp(f.get_mpz_t(), f.get_mpz_t(), 2 * k);
    r *= f - 1;
  }
  return r;
}

Rational hyperell_bound(int g) {
  if (g < 3) throw GenusTooSmall("hyperell_bound requires g >= 3");
  Integer fact = 1;
  for (int k = 2; k <= 2 * g + 2; ++k) fact *= k;
  return Rational(sp2g_f2_order(g), fact);
}

namespace {

struct VecHash {
  size_t operator()(const std::vector<uint32_t>& v) const {
    size_t h = 1469598103934665603ull;
    for (uint32_t x : v) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return h;
  }
};

}  // namespace

Integer sp_group_order(const std::vector<Sp2gF2Element>& gens, long cap) {
  if (gens.empty()) return 1;
  int g = gens.front().g;
  std::unordered_set<std::vector<uint32_t>, VecHash> seen;
  std::vector<Sp2gF2Element> frontier{Sp2gF2Element::identity(g)};
  seen.insert(frontier.front().col);
  while (!frontier.empty()) {
    std::vector<Sp2gF2Element> next;
    for (const auto& x : frontier)
      for (const auto& gen : gens) {
        Sp2gF2Element y = x * gen;
        if (seen.insert(y.col).second) {
          next.push_back(std::move(y));
          if (static_cast<long>(seen.size()) > cap)
            throw BudgetExceeded("sp_group_order: closure cap exceeded");
        }
      }
    frontier = std::move(next);
  }
  return Integer(static_cast<long>(seen.size()));
}

Integer permutation_group_order(const std::vector<std::vector<int>>& gens, long cap) {
  if (gens.empty()) return 1;
  size_t n = gens.front().size();
  std::unordered_set<std::vector<uint32_t>, VecHash> seen;
  std::vector<std::vector<int>> frontier;
  std::vector<int> id(n);
  for (size_t i = 0; i < n; ++i) id[i] = static_cast<int>(i);
  auto key = [](const std::vector<int>& p) {
    return std::vector<uint32_t>(p.begin(), p.end());
  };
  seen.insert(key(id));
  frontier.push_back(id);
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& x : frontier)
      for (const auto& gen : gens) {
        std::vector<int> y(n);
        for (size_t i = 0; i < n; ++i) y[i] = gen[x[i]];
        if (seen.insert(key(y)).second) {
          next.push_back(std::move(y));
          if (static_cast<long>(seen.size()) > cap)
            throw BudgetExceeded("permutation_group_order: closure cap exceeded");
        }
      }
    frontier = std::move(next);
  }
  return Integer(static_cast<long>(seen.size()));
}

HyperellReport mod2_monodromy(const HyperellFamilySpec& fam, const PipelineOptions& opts) {
  HyperellReport rep;
  rep.label = fam.label;
  rep.genus = fam.genus;
  rep.permutations = weierstrass_permutations(fam, opts);
  rep.puncture_count = static_cast<long>(rep.permutations.size());
  std::vector<Sp2gF2Element> sp_gens;
  for (const auto& perm : rep.permutations) sp_gens.push_back(permutation_to_sp(perm, fam.genus));
  rep.group_order = sp_group_order(sp_gens);
  rep.permutation_group_order = permutation_group_order(rep.permutations);
  rep.ambient_order = sp2g_f2_order(fam.genus);
  if (rep.ambient_order % rep.group_order != 0)
    throw InternalError("mod2_monodromy: group order does not divide the ambient order");
  rep.index = rep.ambient_order / rep.group_order;
  Integer fact = 1;
  for (int k = 2; k <= 2 * fam.genus + 2; ++k) fact *= k;
  rep.full_symmetric_image = rep.permutation_group_order == fact;
  if (fam.genus >= 3) {
    rep.bound = hyperell_bound(fam.genus);
    Rational idx(rep.index, Integer(1));
    rep.bound_holds = !(idx < rep.bound);
    rep.sharp = idx == rep.bound;
    if (rep.full_symmetric_image && !rep.bound_holds)
      throw InternalError("mod2_monodromy: index bound violated with full symmetric image");
  } else {
    rep.bound_holds = true;
  }
  return rep;
}

HyperellFamilySpec universal_slice(int g, uint64_t seed) {
  std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ull + 0x2545f4914f6cdd1dull);
  auto small = [&rng](long lo, long hi) {
    return static_cast<long>(rng() % static_cast<uint64_t>(hi - lo + 1)) + lo;
  };
  int d = 2 * g + 2;
  std::vector<RationalFunction> cx(d + 1);
  cx[d] = RationalFunction(1);
  cx[d - 1] = RationalFunction(0);  // the universal even-degree model has no x^(2g+1) term
  RationalFunction t = RationalFunction::variable();
  for (int i = 0; i <= d - 2; ++i)
    cx[i] = t * RationalFunction(Rational(small(-3, 3))) + RationalFunction(Rational(small(-4, 4)));
  HyperellFamilySpec fam;
  fam.f = BivarPoly(std::move(cx));
  fam.genus = g;
  fam.label = "universal-slice-g" + std::to_string(g) + "-seed" + std::to_string(seed);
  validate_hyperell(fam);
  return fam;
}

}  // namespace mono
