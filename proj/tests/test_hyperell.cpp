#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>

#include "mono/expr.hpp"
#include "mono/hyperell.hpp"

using namespace mono;

namespace {

std::vector<int> random_perm(std::mt19937_64& rng, int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  for (int i = n - 1; i > 0; --i) std::swap(p[i], p[static_cast<int>(rng() % (i + 1))]);
  return p;
}

std::vector<int> compose(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[i] = b[a[i]];
  return c;
}

}  // namespace

TEST_CASE("sp2g_f2_order formula") {
  CHECK(sp2g_f2_order(1) == 6);
  CHECK(sp2g_f2_order(2) == 720);
  CHECK(sp2g_f2_order(3) == 1451520);
}

TEST_CASE("hyperell_bound values and growth") {
  CHECK(hyperell_bound(3) == Rational(36));
  Integer f10 = 1;
  for (int k = 2; k <= 10; ++k) f10 *= k;
  CHECK(hyperell_bound(4) == Rational(sp2g_f2_order(4), f10));
  CHECK_THROWS_AS(hyperell_bound(2), GenusTooSmall);
  // the bound exceeds 1 for every g >= 3
  for (int g = 3; g <= 8; ++g) CHECK(hyperell_bound(g) > Rational(1));
}

TEST_CASE("permutation_to_sp basics") {
  for (int g : {2, 3}) {
    int n = 2 * g + 2;
    std::vector<int> id(n);
    std::iota(id.begin(), id.end(), 0);
    CHECK(permutation_to_sp(id, g) == Sp2gF2Element::identity(g));
    // a transposition maps to a transvection: order 2
    std::vector<int> tr = id;
    std::swap(tr[0], tr[1]);
    Sp2gF2Element m = permutation_to_sp(tr, g);
    CHECK_FALSE(m == Sp2gF2Element::identity(g));
    CHECK(m * m == Sp2gF2Element::identity(g));
    CHECK(m.preserves_form());
  }
}

TEST_CASE("permutation_to_sp is a homomorphism preserving the form") {
  std::mt19937_64 rng(55);
  for (int g : {2, 3}) {
    int n = 2 * g + 2;
    for (int i = 0; i < 100; ++i) {
      auto a = random_perm(rng, n), b = random_perm(rng, n);
      Sp2gF2Element ma = permutation_to_sp(a, g);
      Sp2gF2Element mb = permutation_to_sp(b, g);
      Sp2gF2Element mab = permutation_to_sp(compose(a, b), g);
      // action convention: (perm_to_sp(a b)) = perm_to_sp(b) * perm_to_sp(a)
      // or the other order; fix one and check it
      bool order1 = mab == ma * mb;
      bool order2 = mab == mb * ma;
      CHECK((order1 || order2));
      CHECK(ma.preserves_form());
    }
  }
}

TEST_CASE("injectivity of the symplectic action on sampled permutations") {
  std::mt19937_64 rng(66);
  for (int g : {2, 3}) {
    int n = 2 * g + 2;
    std::vector<std::vector<int>> perms;
    for (int i = 0; i < 40; ++i) perms.push_back(random_perm(rng, n));
    for (size_t i = 0; i < perms.size(); ++i)
      for (size_t j = i + 1; j < perms.size(); ++j) {
        if (perms[i] == perms[j]) continue;
        CHECK_FALSE(permutation_to_sp(perms[i], g) == permutation_to_sp(perms[j], g));
      }
  }
}

TEST_CASE("group order equality: permutations vs symplectic images") {
  std::mt19937_64 rng(77);
  int n = 8, g = 3;
  std::vector<std::vector<int>> gens{random_perm(rng, n), random_perm(rng, n)};
  std::vector<Sp2gF2Element> sp;
  for (const auto& p : gens) sp.push_back(permutation_to_sp(p, g));
  CHECK(permutation_group_order(gens) == sp_group_order(sp));
}

TEST_CASE("g = 1: four-point action matches mu4 mod 2") {
  // basis adjustment between the two modules is the swap of the two basis
  // vectors; check sigma_1, sigma_2, sigma_3 all satisfy
  // perm_to_sp(perm(sigma)) = C (mu4(sigma) mod 2) C^-1 with C = [[0,1],[1,0]]
  auto check_letter = [](int pos) {
    BraidWord w;
    w.strands = 4;
    w.letters = {{pos, 1}};
    auto sp = permutation_to_sp(permutation_of(w), 1);
    auto m = mu4(w).reduce_mod(2);
    // conjugate by the swap: [[a,b],[c,d]] -> [[d,c],[b,a]]
    uint32_t col0 = (m[3] ? 1u : 0u) | (m[1] ? 2u : 0u);
    uint32_t col1 = (m[2] ? 1u : 0u) | (m[0] ? 2u : 0u);
    CHECK(sp.col[0] == col0);
    CHECK(sp.col[1] == col1);
  };
  check_letter(1);
  check_letter(2);
  check_letter(3);
}

TEST_CASE("weierstrass permutations: sixth-root monodromy and constants") {
  PipelineOptions opts;
  opts.precision = 96;
  HyperellFamilySpec fam;
  fam.f = parse_expression("x^6 - t", ExprVars{"x", "t"});
  fam.genus = 2;
  fam.label = "sextic";
  auto perms = weierstrass_permutations(fam, opts);
  REQUIRE(perms.size() == 1);
  // a 6-cycle: no fixed points, order 6
  std::vector<int> p = perms[0];
  std::vector<int> it = p;
  int order = 1;
  while (order < 10) {
    bool identity = true;
    for (size_t i = 0; i < it.size(); ++i) identity = identity && it[i] == static_cast<int>(i);
    if (identity) break;
    it = compose(it, p);
    ++order;
  }
  CHECK(order == 6);
  for (size_t i = 0; i < p.size(); ++i) CHECK(p[i] != static_cast<int>(i));

  // squares of the single-traversal permutation via a doubled lasso is
  // covered by braid-level composition; here check the odd-degree marked
  // point stays put
  HyperellFamilySpec odd;
  odd.f = parse_expression("x^5 - t", ExprVars{"x", "t"});
  odd.genus = 2;
  odd.label = "quintic";
  auto operms = weierstrass_permutations(odd, opts);
  REQUIRE(operms.size() == 1);
  CHECK(operms[0].size() == 6);
  CHECK(operms[0][5] == 5);
}

TEST_CASE("doubled lasso gives the square of the permutation") {
  TrackOptions topts;
  topts.precision = 96;
  BivarPoly f = parse_expression("x^6 - t", ExprVars{"x", "t"});
  QComplex c0{Rational(0), Rational(0)}, s0{Rational(1), Rational(0)};
  PathPlan once, twice;
  once.segments.push_back(PathSegment::full_circle(c0, s0, +1));
  twice.segments.push_back(PathSegment::full_circle(c0, s0, +1));
  twice.segments.push_back(PathSegment::full_circle(c0, s0, +1));
  auto loops = std::vector<PathPlan>{once, twice};
  auto words = braids_of_system(f, loops, topts, 5);
  auto p1 = permutation_of(words[0]);
  auto p2 = permutation_of(words[1]);
  for (size_t i = 0; i < p1.size(); ++i) CHECK(p2[i] == p1[p1[i]]);
}

TEST_CASE("validation rejects bad hyperelliptic input") {
  HyperellFamilySpec fam;
  fam.f = parse_expression("x^6 - t", ExprVars{"x", "t"});
  fam.genus = 1;
  CHECK_THROWS_AS(validate_hyperell(fam), GenusTooSmall);
  fam.genus = 3;
  CHECK_THROWS(validate_hyperell(fam));  // degree must be 8 or 7
  fam.f = parse_expression("2*x^8 - t", ExprVars{"x", "t"});
  CHECK_THROWS(validate_hyperell(fam));  // monic
  fam.f = parse_expression("(x^4-t)^2", ExprVars{"x", "t"});
  CHECK_THROWS_AS(validate_hyperell(fam), DegenerateFamily);  // square
}

TEST_CASE("g = 3 universal slice: sharp index 36") {
  PipelineOptions opts;
  opts.precision = 96;
  HyperellFamilySpec fam = universal_slice(3, 0);
  auto rep = mod2_monodromy(fam, opts);
  CHECK(rep.full_symmetric_image);
  CHECK(rep.permutation_group_order == 40320);
  CHECK(rep.group_order == 40320);
  CHECK(rep.ambient_order == 1451520);
  CHECK(rep.index == 36);
  CHECK(rep.bound == Rational(36));
  CHECK(rep.sharp);
  CHECK(rep.bound_holds);
}

TEST_CASE("g = 2 slice: index bound machinery stays consistent") {
  PipelineOptions opts;
  opts.precision = 96;
  HyperellFamilySpec fam = universal_slice(2, 1);
  auto rep = mod2_monodromy(fam, opts);
  CHECK(rep.ambient_order == 720);
  CHECK(rep.ambient_order % rep.group_order == 0);
  // for g = 2 the sharp A'Campo value is |Sp(4,F2)| / 6! = 1: full image
  if (rep.full_symmetric_image) CHECK(rep.index == 1);
}
