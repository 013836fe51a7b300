#pragma once

#include "mono/poly.hpp"

namespace mono {

/// Normalized discriminant 4p^3 + 27q^2 of x^3 + p x + q. The geometric
/// discriminant is -16(4p^3 + 27q^2); only the zero locus is consumed
/// downstream, so the sign-free normalization is fixed here once.
RationalFunction discriminant_cubic(const RationalFunction& p, const RationalFunction& q);

/// j = 1728 * 4p^3 / (4p^3 + 27q^2). Throws DegenerateCurve when the
/// discriminant vanishes identically.
Rational j_invariant(const Rational& p, const Rational& q);
RationalFunction j_invariant(const RationalFunction& p, const RationalFunction& q);

struct JMapData {
  RationalFunction j;
  long degree = 0;  // max(deg num, deg den)
  long m = 0;       // components of the general J-fiber over a curve base: deg J
  bool isotrivial = false;
};

JMapData j_map(const RationalFunction& p, const RationalFunction& q);

}  // namespace mono
