#pragma once

#include <string>
#include <vector>

#include "mono/poly.hpp"

namespace mono {

enum class KodairaType { I0, In, II, III, IV, I0star, Instar, IVstar, IIIstar, IIstar };

std::string kodaira_type_name(KodairaType t, int n);

/// Local monodromy trace of the fiber type (conjugacy invariant).
long kodaira_trace(KodairaType t);

/// One classified place of the base: either t = infinity or the full set of
/// roots of an exact squarefree `place_poly` (all of which carry identical
/// valuation data, so they share a type).
struct KodairaPlace {
  bool at_infinity = false;
  Polynomial place_poly;  // squarefree, monic; ignored when at_infinity
  long count = 1;         // number of places = deg place_poly (1 at infinity)
  int ord_c4 = 0, ord_c6 = 0, ord_disc = 0;  // after minimalization
  KodairaType type = KodairaType::I0;
  int n = 0;       // the n of I_n / I_n*
  long e_value = 0;  // n for I_n and I_n*, else 0
};

/// Classify one finite place given the valuations of p, q and the
/// discriminant there. Throws UnclassifiablePlace on a table miss.
KodairaPlace classify_valuations(int ord_p, int ord_q, int ord_disc);

/// Classify the place t = a (rational a) of y^2 = x^3 + p x + q.
KodairaPlace classify_at(const RationalFunction& p, const RationalFunction& q, const Rational& a);

/// Classify the place t = infinity via the s = 1/t chart.
KodairaPlace classify_infinity(const RationalFunction& p, const RationalFunction& q);

/// All degenerate places (finite clusters and infinity). Clusters are
/// pairwise coprime squarefree polynomials whose roots all share the same
/// valuation profile, so no irreducible factorization is needed.
std::vector<KodairaPlace> classify_family(const RationalFunction& p, const RationalFunction& q);

struct SurfaceBound {
  long sum_e = 0;
  long bound = 0;  // 2 * sum_e
  long deg_j = 0;
  std::vector<KodairaPlace> places;
};

/// Sum of e over all places; asserts sum_e == deg J (two independent
/// computations). Throws IsotrivialFamily when J is constant.
SurfaceBound surface_bound(const RationalFunction& p, const RationalFunction& q);

}  // namespace mono
