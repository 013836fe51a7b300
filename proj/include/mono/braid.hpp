#pragma once

#include <cstdint>
#include <vector>

#include "mono/complexfp.hpp"
#include "mono/poly.hpp"
#include "mono/roots.hpp"
#include "mono/sl2.hpp"

namespace mono {

/// Piecewise path in the complex plane with exact rational data. Arcs are
/// circles traversed by a signed number of full turns (positive =
/// counterclockwise), so endpoints of closed loops match exactly.
struct PathSegment {
  enum class Kind { Line, Arc };
  Kind kind = Kind::Line;
  QComplex a;       // start point
  QComplex b;       // end point (Line); for a full-turn Arc, b == a
  QComplex center;  // Arc only
  Rational turns;   // Arc only, signed full turns

  static PathSegment line(QComplex from, QComplex to);
  static PathSegment full_circle(QComplex center, QComplex start, int orientation);

  Complex eval(const Real& s, mpfr_prec_t prec) const;     // s in [0,1]
  Complex velocity(const Real& s, mpfr_prec_t prec) const;  // d/ds
};

struct PathPlan {
  std::vector<PathSegment> segments;
  bool closed() const;
};

struct TrackOptions {
  mpfr_prec_t precision = 128;
  mpfr_prec_t precision_cap = 1024;
  double max_step = 0.125;
  long step_budget = 400000;
};

/// Root positions along a path with continuation identity. Every stored
/// sample satisfies the disjoint-disk certificate: pairwise separation
/// exceeds twice the sum of the certified radii.
struct TrackedStrands {
  int n = 0;
  struct Sample {
    std::vector<Complex> z;
    std::vector<Real> radius;
  };
  std::vector<Sample> samples;
  /// strand i ends where initial root end_match[i] started (closed loops).
  std::vector<int> end_match;
  mpfr_prec_t precision = 128;
};

/// Analytic continuation of the roots of f(x, t) along the path. The path
/// must avoid the discriminant locus of f in x.
TrackedStrands track_roots(const BivarPoly& f, const PathPlan& path, const TrackOptions& opts);

/// Word in the Artin generators sigma_i (1-based position, sign).
struct BraidWord {
  int strands = 0;
  std::vector<std::pair<int, int>> letters;

  BraidWord reduced() const;  // freely reduced
  BraidWord inverse() const;
  friend BraidWord operator*(const BraidWord& u, const BraidWord& v);
};

/// Read the braid word off the tracked strands by projecting to a generic
/// direction. Retries a few seeded directions internally before surfacing
/// NonGenericProjection.
BraidWord extract_braid(const TrackedStrands& strands, uint64_t seed);

/// Deterministic projection-direction candidates.
QComplex extraction_direction(uint64_t seed, int attempt);

/// Extraction against one fixed direction; empty on a non-generic
/// projection. Strand matrices of different loops over one basepoint are
/// only comparable when read in a common frame, i.e. with one shared
/// direction.
bool try_extract_braid(const TrackedStrands& strands, const QComplex& direction, BraidWord* out);

/// Underlying permutation (sigma_i -> (i, i+1)), one-line images, 0-based.
std::vector<int> permutation_of(const BraidWord& w);

/// H^1 representation of B_3: sigma_1 -> [[1,0],[-1,1]], sigma_2 -> [[1,1],[0,1]].
SL2Matrix mu3(const BraidWord& w);

/// Genus-1 double-cover representation of B_4: sigma_1, sigma_3 map like
/// sigma_1 of B_3, sigma_2 like sigma_2 (the two far transpositions act
/// identically on homology).
SL2Matrix mu4(const BraidWord& w);

/// Whether two extractions agree on the consumed data: permutation always,
/// the H^1 image for 3 or 4 strands.
bool braid_data_agree(const BraidWord& a, const BraidWord& b);

/// Track + extract with a deterministic retry ladder (fresh projection
/// directions, then halved step) for robustness. Every word is validated
/// against a step-halved re-track in the same frame.
struct BraidResult {
  BraidWord word;
  TrackedStrands strands;
};
BraidResult braid_along(const BivarPoly& f, const PathPlan& path, const TrackOptions& opts,
                        uint64_t seed);

/// Braids of a whole system of loops over one shared basepoint, all read in
/// one common projection frame (their images are only comparable that way).
/// Step-halving validation per loop; deterministic in the seed.
std::vector<BraidWord> braids_of_system(const BivarPoly& f, const std::vector<PathPlan>& loops,
                                        const TrackOptions& opts, uint64_t seed);

}  // namespace mono
