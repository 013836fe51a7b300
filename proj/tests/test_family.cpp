#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "mono/expr.hpp"
#include "mono/family.hpp"

using namespace mono;

namespace {

FamilySpec family(const std::string& p, const std::string& q, const std::string& label) {
  FamilySpec f;
  f.p = parse_rational_function(p);
  f.q = parse_rational_function(q);
  f.label = label;
  return f;
}

PipelineOptions quick() {
  PipelineOptions o;
  o.precision = 96;
  return o;
}

}  // namespace

TEST_CASE("punctures_of examples") {
  PipelineOptions opts = quick();
  // p = t, q = 1: the three roots of 4t^3 + 27
  auto pn = punctures_of(family("t", "1", "a"), opts);
  CHECK(pn.roots.size() == 3);
  CHECK(pn.poly.degree() == 3);
  // p = 0, q = 1: no finite punctures (isotrivial j = 0)
  auto p0 = punctures_of(family("0", "1", "b"), opts);
  CHECK(p0.roots.empty());
  // depressed Legendre: punctures exactly {0, 1}
  auto pl = punctures_of(
      family("t-(1+t)^2/3", "(1+t)*t/3-2*(1+t)^3/27", "legendre"), opts);
  REQUIRE(pl.roots.size() == 2);
  CHECK(pl.poly.eval(Rational(0)).is_zero());
  CHECK(pl.poly.eval(Rational(1)).is_zero());
  // poles of p and q are punctures too
  auto pp = punctures_of(family("1/t", "1", "c"), opts);
  CHECK(pp.poly.eval(Rational(0)).is_zero());
  CHECK_THROWS_AS(punctures_of(family("-3", "2", "d"), opts), DegenerateFamily);
}

TEST_CASE("monodromy of y^2 = x^3 + tx + 1 is the full group") {
  auto rep = monodromy_group(family("t", "1", "full"), quick());
  REQUIRE(rep.subgroup.determined);
  CHECK(rep.subgroup.sl_index == 1);
  CHECK(rep.subgroup.psl_index == 1);
  CHECK(rep.subgroup.mod2_image_order == 6);
  CHECK(mod_n_image_order(rep.matrices, 3) == 24);  // mod-3 surjectivity witness
  CHECK(rep.deg_j == 3);
  CHECK(rep.all_bounds_hold);
}

TEST_CASE("Legendre family: the Sanov subgroup") {
  auto rep = monodromy_group(
      family("t-(1+t)^2/3", "(1+t)*t/3-2*(1+t)^3/27", "legendre"), quick());
  REQUIRE(rep.subgroup.determined);
  CHECK(rep.subgroup.psl_index == 6);
  // the image is generated by two unipotents (Picard-Lefschetz at two I2
  // fibers); it is free, hence misses -I, and the sl-index is 12
  CHECK(rep.subgroup.sl_index == 12);
  CHECK_FALSE(rep.subgroup.contains_minus_I);
  CHECK(rep.subgroup.mod2_image_order == 1);  // inside Gamma(2)
  CHECK(rep.deg_j == 6);
  CHECK(rep.m == 6);
  CHECK(rep.infinity_type == KodairaType::Instar);
  CHECK(rep.all_bounds_hold);
}

TEST_CASE("Legendre mod-2 triviality from root permutations") {
  // independent witness: the three roots of x(x-1)(x-t) never permute (all
  // 2-torsion is rational), so the mod-2 image must be trivial
  FamilySpec fam = family("t-(1+t)^2/3", "(1+t)*t/3-2*(1+t)^3/27", "legendre");
  PipelineOptions opts = quick();
  auto punct = punctures_of(fam, opts);
  LoopSystem loops = build_loops(punct.roots, opts);
  TrackOptions topts;
  topts.precision = 96;
  for (const auto& w : braids_of_system(fam.cubic(), loops.lassos, topts, 3)) {
    auto perm = permutation_of(w);
    for (size_t i = 0; i < perm.size(); ++i) CHECK(perm[i] == static_cast<int>(i));
  }
}

TEST_CASE("isotrivial family raises IsotrivialFamily") {
  CHECK_THROWS_AS(monodromy_group(family("0", "1", "iso"), quick()), IsotrivialFamily);
  CHECK_THROWS_AS(monodromy_group(family("0", "t", "iso2"), quick()), IsotrivialFamily);
}

TEST_CASE("j_map examples") {
  JMapData j = j_map(parse_rational_function("t"), parse_rational_function("1"));
  CHECK(j.degree == 3);
  JMapData jl = j_map(parse_rational_function("t-(1+t)^2/3"),
                      parse_rational_function("(1+t)*t/3-2*(1+t)^3/27"));
  CHECK(jl.degree == 6);
  // J(lambda) = 256 (lambda^2 - lambda + 1)^3 / (lambda^2 (1 - lambda)^2)
  RationalFunction t = RationalFunction::variable();
  RationalFunction expect =
      (t * t - t + RationalFunction(1)).pow(3) * RationalFunction(Rational(256)) /
      (t * t * (RationalFunction(1) - t).pow(2));
  CHECK(jl.j == expect);
}

TEST_CASE("quadratic twist examples") {
  FamilySpec fam = family("t", "1", "tw");
  TwistSpec one{parse_rational_function("1")};
  FamilySpec same = quadratic_twist(fam, one);
  CHECK(same.p == fam.p);
  CHECK(same.q == fam.q);
  TwistSpec by_t{parse_rational_function("t")};
  FamilySpec tw = quadratic_twist(fam, by_t);
  CHECK(tw.p == parse_rational_function("t^3"));
  CHECK(tw.q == parse_rational_function("t^3"));
  // twisting twice is a coordinate change: the j-map is unchanged
  FamilySpec twtw = quadratic_twist(tw, by_t);
  CHECK(j_map(twtw.p, twtw.q).j == j_map(fam.p, fam.q).j);
  CHECK_THROWS_AS(quadratic_twist(fam, TwistSpec{parse_rational_function("0")}), ZeroTwist);
}

TEST_CASE("chi_D examples") {
  PathPlan circle;
  circle.segments.push_back(
      PathSegment::full_circle(QComplex{Rational(0), Rational(0)},
                               QComplex{Rational(1), Rational(0)}, +1));
  CHECK(chi_d(TwistSpec{parse_rational_function("t")}, circle, 96) == -1);
  CHECK(chi_d(TwistSpec{parse_rational_function("t^2")}, circle, 96) == +1);
  CHECK(chi_d(TwistSpec{parse_rational_function("5")}, circle, 96) == +1);
  CHECK(chi_d(TwistSpec{parse_rational_function("t^3")}, circle, 96) == -1);
  // D with a zero on the loop
  CHECK_THROWS_AS(chi_d(TwistSpec{parse_rational_function("t-1")}, circle, 96), ZeroOnLoop);
}

TEST_CASE("chi_D is multiplicative") {
  std::mt19937_64 rng(404);
  RationalFunction t = RationalFunction::variable();
  int done = 0;
  for (int i = 0; done < 100 && i < 300; ++i) {
    long a = static_cast<long>(rng() % 7) - 3;
    long b = static_cast<long>(rng() % 7) - 3;
    long c = static_cast<long>(rng() % 5) + 1;
    unsigned e1 = static_cast<unsigned>(rng() % 3);
    unsigned e2 = static_cast<unsigned>(rng() % 3);
    RationalFunction d1 = t.pow(e1) * RationalFunction(Rational(c)) + RationalFunction(Rational(a));
    RationalFunction d2 = t.pow(e2) + RationalFunction(Rational(b));
    if (d1.is_zero() || d2.is_zero()) continue;
    long r = static_cast<long>(rng() % 3) + 2;
    PathPlan loop;
    loop.segments.push_back(PathSegment::full_circle(
        QComplex{Rational(static_cast<long>(rng() % 3) - 1), Rational(0)},
        QComplex{Rational(r + 5), Rational(0)}, +1));
    int c1, c2, c12;
    try {
      c1 = chi_d(TwistSpec{d1}, loop, 96);
      c2 = chi_d(TwistSpec{d2}, loop, 96);
      c12 = chi_d(TwistSpec{d1 * d2}, loop, 96);
    } catch (const ZeroOnLoop&) {
      continue;
    }
    CHECK(c12 == c1 * c2);
    ++done;
  }
  CHECK(done == 100);
}

TEST_CASE("chi_D on composed loops is a homomorphism") {
  RationalFunction t = RationalFunction::variable();
  TwistSpec d{t};
  PathPlan one_turn, two_turns;
  QComplex c0{Rational(0), Rational(0)}, s0{Rational(2), Rational(0)};
  one_turn.segments.push_back(PathSegment::full_circle(c0, s0, +1));
  two_turns.segments.push_back(PathSegment::full_circle(c0, s0, +1));
  two_turns.segments.push_back(PathSegment::full_circle(c0, s0, +1));
  CHECK(chi_d(d, two_turns, 96) == chi_d(d, one_turn, 96) * chi_d(d, one_turn, 96));
}

TEST_CASE("twist relation: (p, q) = (t, 1), D = t") {
  FamilySpec fam = family("t", "1", "full");
  TwistSpec tw{parse_rational_function("t")};
  auto rep = verify_twist_relation(fam, tw, quick());
  CHECK(rep.base.subgroup.sl_index == 1);
  CHECK(rep.twisted.subgroup.sl_index == 1);  // SL(2,Z) is preserved
  CHECK(rep.predicted_matches_direct);
  CHECK(rep.psl_indices_equal);
  CHECK(rep.sl_ratio_admissible);
  CHECK(rep.classification.twist_case == TwistCase::Equal);
}

TEST_CASE("twist relation on the Legendre family") {
  FamilySpec fam = family("t-(1+t)^2/3", "(1+t)*t/3-2*(1+t)^3/27", "legendre");
  TwistSpec tw{parse_rational_function("t")};
  auto rep = verify_twist_relation(fam, tw, quick());
  CHECK(rep.predicted_matches_direct);
  CHECK(rep.psl_indices_equal);
  CHECK(rep.sl_ratio_admissible);
}

TEST_CASE("restriction stability: spurious punctures change nothing") {
  PipelineOptions opts = quick();
  FamilySpec fam = family("t", "1", "full");
  auto base = monodromy_group(fam, opts);
  auto marked = monodromy_group_with_marks(
      fam, opts, {QComplex{Rational(1, 2), Rational(0)}, QComplex{Rational(-2), Rational(1)}});
  CHECK(marked.puncture_count == base.puncture_count + 3);  // complex mark adds its conjugate
  CHECK(marked.subgroup.sl_index == base.subgroup.sl_index);
  CHECK(marked.subgroup.psl_index == base.subgroup.psl_index);
  CHECK(marked.subgroup.contains_minus_I == base.subgroup.contains_minus_I);

  auto legendre = family("t-(1+t)^2/3", "(1+t)*t/3-2*(1+t)^3/27", "legendre");
  auto lbase = monodromy_group(legendre, opts);
  auto lmarked = monodromy_group_with_marks(legendre, opts, {QComplex{Rational(3), Rational(0)}});
  CHECK(lmarked.subgroup.sl_index == lbase.subgroup.sl_index);
  CHECK(lmarked.subgroup.psl_index == lbase.subgroup.psl_index);
}

TEST_CASE("pullback along t -> t^2 has index at most 2") {
  PipelineOptions opts = quick();
  for (auto fam : {family("t", "1", "full"),
                   family("t-(1+t)^2/3", "(1+t)*t/3-2*(1+t)^3/27", "legendre")}) {
    auto base = monodromy_group(fam, opts);
    auto pulled = monodromy_group(pullback_square(fam), opts);
    REQUIRE(base.subgroup.determined);
    REQUIRE(pulled.subgroup.determined);
    bool at_most_two = pulled.subgroup.sl_index == base.subgroup.sl_index ||
                       pulled.subgroup.sl_index == 2 * base.subgroup.sl_index;
    CHECK(at_most_two);
  }
}

TEST_CASE("seed independence of the index data") {
  std::vector<FamilySpec> fams = {
      family("t", "1", "full"),
      family("t-(1+t)^2/3", "(1+t)*t/3-2*(1+t)^3/27", "legendre"),
      family("1", "t", "j2"),
      family("t", "t", "j1"),
  };
  for (const auto& fam : fams) {
    long sl = -1, psl = -1, mod2 = -1;
    bool minus = false;
    for (uint64_t seed : {1ull, 2ull, 3ull, 4ull, 5ull}) {
      PipelineOptions o = quick();
      o.seed = seed;
      auto rep = monodromy_group(fam, o);
      REQUIRE(rep.subgroup.determined);
      if (sl < 0) {
        sl = rep.subgroup.sl_index;
        psl = rep.subgroup.psl_index;
        mod2 = rep.subgroup.mod2_image_order;
        minus = rep.subgroup.contains_minus_I;
      } else {
        CHECK(rep.subgroup.sl_index == sl);
        CHECK(rep.subgroup.psl_index == psl);
        CHECK(rep.subgroup.mod2_image_order == mod2);
        CHECK(rep.subgroup.contains_minus_I == minus);
      }
    }
  }
}

TEST_CASE("product law trace across randomized families") {
  std::mt19937_64 rng(2024);
  int done = 0;
  for (int i = 0; done < 100 && i < 500; ++i) {
    long a = static_cast<long>(rng() % 5) - 2;
    long b = static_cast<long>(rng() % 5) - 2;
    long c = static_cast<long>(rng() % 5) - 2;
    long d = static_cast<long>(rng() % 5) - 2;
    std::string ps = std::to_string(a) + "*t + " + std::to_string(b);
    std::string qs = std::to_string(c) + "*t + " + std::to_string(d);
    FamilySpec fam = family(ps, qs, "rnd");
    PipelineOptions o = quick();
    o.seed = rng();
    try {
      auto rep = monodromy_group(fam, o);
      CHECK(rep.bounds_checked.at("infinity_trace"));
      CHECK(rep.all_bounds_hold);
      ++done;
    } catch (const IsotrivialFamily&) {
    } catch (const DegenerateFamily&) {
    }
  }
  CHECK(done == 100);
}
