#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mono/expr.hpp"
#include "mono/kodaira.hpp"
#include "mono/weierstrass.hpp"

using namespace mono;

namespace {
RationalFunction rf(const std::string& s) { return parse_rational_function(s); }
}  // namespace

TEST_CASE("y^2 = x^3 + x + t: two I1 fibers and II* at infinity") {
  RationalFunction p = rf("1"), q = rf("t");
  auto places = classify_family(p, q);
  REQUIRE(places.size() == 2);
  CHECK(places[0].type == KodairaType::In);
  CHECK(places[0].n == 1);
  CHECK(places[0].count == 2);  // the two complex roots of 27t^2 + 4
  CHECK_FALSE(places[0].at_infinity);
  CHECK(places[1].at_infinity);
  CHECK(places[1].type == KodairaType::IIstar);
  CHECK(places[1].ord_c4 == 4);
  CHECK(places[1].ord_c6 == 5);
  CHECK(places[1].ord_disc == 10);
  CHECK(places[1].e_value == 0);
  auto sb = surface_bound(p, q);
  CHECK(sb.sum_e == 2);
  CHECK(sb.bound == 4);
  CHECK(sb.deg_j == 2);
}

TEST_CASE("simple zero of the discriminant is I1") {
  // y^2 = x^3 + tx + t degenerates at the simple zero t = -27/4 of 4t + 27
  KodairaPlace pl = classify_at(rf("t"), rf("t"), Rational(-27, 4));
  CHECK(pl.type == KodairaType::In);
  CHECK(pl.n == 1);
  CHECK(pl.e_value == 1);
}

TEST_CASE("Legendre: I2 + I2 + I2* with sum e = 6 = deg J") {
  RationalFunction t = RationalFunction::variable();
  RationalFunction p = t - (t + rf("1")).pow(2) / rf("3");
  RationalFunction q = (t + rf("1")) * t / rf("3") - (t + rf("1")).pow(3) * rf("2/27");
  KodairaPlace at0 = classify_at(p, q, Rational(0));
  CHECK(at0.type == KodairaType::In);
  CHECK(at0.n == 2);
  CHECK(at0.e_value == 2);
  KodairaPlace at1 = classify_at(p, q, Rational(1));
  CHECK(at1.type == KodairaType::In);
  CHECK(at1.n == 2);
  KodairaPlace inf = classify_infinity(p, q);
  CHECK(inf.type == KodairaType::Instar);
  CHECK(inf.n == 2);
  CHECK(inf.e_value == 2);
  auto sb = surface_bound(p, q);
  CHECK(sb.sum_e == 6);
  CHECK(sb.deg_j == 6);
  CHECK(sb.bound == 12);
}

TEST_CASE("smooth place classifies as I0") {
  KodairaPlace pl = classify_at(rf("1"), rf("t"), Rational(1));
  CHECK(pl.type == KodairaType::I0);
  CHECK(pl.e_value == 0);
}

TEST_CASE("isotrivial families are rejected by surface_bound") {
  CHECK_THROWS_AS(surface_bound(rf("0"), rf("t")), IsotrivialFamily);
  CHECK_THROWS_AS(surface_bound(rf("t^2"), rf("0")), IsotrivialFamily);
}

TEST_CASE("minimality postcondition and e-value consistency across a corpus") {
  std::vector<std::pair<std::string, std::string>> corpus = {
      {"t", "1"},          {"1", "t"},      {"t", "t"},
      {"t^2+1", "t^3"},    {"t^3", "t^2"},  {"t-(1+t)^2/3", "(1+t)*t/3-2*(1+t)^3/27"},
      {"1/t", "1"},        {"t^5+1", "t"},  {"(t+2)/(t-1)", "t"},
  };
  for (const auto& [ps, qs] : corpus) {
    RationalFunction p = rf(ps), q = rf(qs);
    JMapData j = j_map(p, q);
    if (j.isotrivial) continue;
    auto sb = surface_bound(p, q);
    CHECK(sb.sum_e == sb.deg_j);
    for (const auto& pl : sb.places) {
      // minimality: not (ord c4 >= 4, ord c6 >= 6, ord disc >= 12)
      CHECK_FALSE((pl.ord_c4 >= 4 && pl.ord_c6 >= 6 && pl.ord_disc >= 12));
      // e from the stored valuations
      if (pl.type == KodairaType::In) CHECK(pl.e_value == pl.ord_disc);
      else if (pl.type == KodairaType::Instar) CHECK(pl.e_value == pl.ord_disc - 6);
      else CHECK(pl.e_value == 0);
    }
  }
}

TEST_CASE("valuation table covers the classified shapes") {
  CHECK(classify_valuations(0, 0, 3).type == KodairaType::In);
  CHECK(classify_valuations(1, 1, 2).type == KodairaType::II);
  CHECK(classify_valuations(1, 2, 3).type == KodairaType::III);
  CHECK(classify_valuations(2, 2, 4).type == KodairaType::IV);
  CHECK(classify_valuations(2, 3, 6).type == KodairaType::I0star);
  CHECK(classify_valuations(2, 3, 9).type == KodairaType::Instar);
  CHECK(classify_valuations(2, 3, 9).n == 3);
  CHECK(classify_valuations(3, 4, 8).type == KodairaType::IVstar);
  CHECK(classify_valuations(3, 5, 9).type == KodairaType::IIIstar);
  CHECK(classify_valuations(4, 5, 10).type == KodairaType::IIstar);
  // non-minimal input gets minimalized first: (4, 6, 12) -> (0, 0, 0)
  CHECK(classify_valuations(4, 6, 12).type == KodairaType::I0);
  // poles minimalize upward: ord(p,q,disc) = (0,-1,-2) -> (4,5,10) = II*
  CHECK(classify_valuations(0, -1, -2).type == KodairaType::IIstar);
}

TEST_CASE("local monodromy traces per type") {
  CHECK(kodaira_trace(KodairaType::I0) == 2);
  CHECK(kodaira_trace(KodairaType::In) == 2);
  CHECK(kodaira_trace(KodairaType::II) == 1);
  CHECK(kodaira_trace(KodairaType::III) == 0);
  CHECK(kodaira_trace(KodairaType::IV) == -1);
  CHECK(kodaira_trace(KodairaType::I0star) == -2);
  CHECK(kodaira_trace(KodairaType::Instar) == -2);
  CHECK(kodaira_trace(KodairaType::IVstar) == -1);
  CHECK(kodaira_trace(KodairaType::IIIstar) == 0);
  CHECK(kodaira_trace(KodairaType::IIstar) == 1);
}
