#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mono/braid.hpp"
#include "mono/kodaira.hpp"
#include "mono/poly.hpp"
#include "mono/roots.hpp"
#include "mono/subgroup.hpp"
#include "mono/weierstrass.hpp"

namespace mono {

/// Genus-1 family y^2 = x^3 + p(t) x + q(t) with exact rational p, q.
struct FamilySpec {
  RationalFunction p, q;
  std::string label;

  BivarPoly cubic() const;  // x^3 + p x + q
};

struct PipelineOptions {
  mpfr_prec_t precision = 128;
  mpfr_prec_t precision_cap = 1024;
  long max_cosets = 1'000'000;
  uint64_t seed = 0;
  long step_budget = 400000;
};

/// Finite punctures: zeros of 4p^3 + 27q^2 together with poles of p and q.
struct Punctures {
  Polynomial poly;  // exact squarefree polynomial with the punctures as roots
  std::vector<IsolatedRoot> roots;
};
Punctures punctures_of(const FamilySpec& fam, const PipelineOptions& opts);

/// A basepoint with one lasso (tail + counterclockwise circle + return) per
/// puncture, pairwise non-crossing, ordered by the viewing angle from the
/// basepoint (ties by modulus). Composed in order the lassos are homotopic
/// to a large circle around all punctures.
struct LoopSystem {
  QComplex basepoint;
  std::vector<QComplex> centers;  // snapped rational centers, lasso order
  std::vector<PathPlan> lassos;
};
LoopSystem build_loops(const std::vector<IsolatedRoot>& punctures, const PipelineOptions& opts);

struct MonodromyReport {
  std::string label;
  long puncture_count = 0;
  QComplex basepoint;
  std::vector<BraidWord> braids;
  std::vector<SL2Matrix> matrices;  // per lasso, loop order
  SubgroupDescriptor subgroup;
  long deg_j = 0;
  long m = 0;
  long rank = 0;  // free rank of pi_1 of the punctured base (incl. infinity)
  KodairaType infinity_type = KodairaType::I0;
  int infinity_n = 0;
  SL2Matrix lasso_product;  // product over lassos in order
  std::map<std::string, bool> bounds_checked;
  bool all_bounds_hold = false;
};

/// The end-to-end pipeline: punctures, loops, per-lasso braids and matrices,
/// subgroup data, and every index bound. Throws IsotrivialFamily when the
/// J-map is constant.
MonodromyReport monodromy_group(const FamilySpec& fam, const PipelineOptions& opts);

/// As above with extra marked points removed from the base (the generated
/// subgroup must not change; used by the restriction-stability property).
MonodromyReport monodromy_group_with_marks(const FamilySpec& fam, const PipelineOptions& opts,
                                           const std::vector<QComplex>& spurious);

struct TwistSpec {
  RationalFunction d;
};

/// y^2 = x^3 + D^2 p x + D^3 q.
FamilySpec quadratic_twist(const FamilySpec& fam, const TwistSpec& tw);

/// Parity of the winding of D along the loop: the quadratic character.
int chi_d(const TwistSpec& tw, const PathPlan& loop, mpfr_prec_t precision);

struct TwistReport {
  MonodromyReport base;             // family on the joint loop system
  MonodromyReport twisted;          // twisted family on the same loops
  std::vector<int> chi;             // per lasso
  SubgroupDescriptor predicted;     // per-lasso chi twist of the base matrices
  TwistClassification classification;
  bool predicted_matches_direct = false;
  bool psl_indices_equal = false;
  bool sl_ratio_admissible = false;  // ratio in {1/2, 1, 2}
};

/// Computes Mon(fam) and Mon(twist) on one joint loop system, the per-lasso
/// characters, and checks the predicted-vs-direct twist relations.
TwistReport verify_twist_relation(const FamilySpec& fam, const TwistSpec& tw,
                                  const PipelineOptions& opts);

/// Substitute t -> t^2 (degree-2 pullback of the base).
FamilySpec pullback_square(const FamilySpec& fam);

/// Pencil-of-lines pipeline for a smooth plane quartic F(x, y) = 0: lines
/// through the base point, 4-point fibers, mu4 images.
struct QuarticPencil {
  BivarPoly quartic;   // F(x, y) with y in the parameter slot
  Rational x0, y0;     // pencil base point
};

struct QuarticReport {
  long tangency_count = 0;   // parameters where the line is tangent (the punctures)
  long auxiliary_count = 0;  // chart degenerations (line meets the curve at x = infinity)
  MonodromyReport mono;
  RationalFunction jacobian_p, jacobian_q;  // Weierstrass data of the fiber Jacobian
  bool j_cross_check = false;  // cross-ratio j equals Weierstrass j at basepoint
};

QuarticReport quartic_pencil_family(const QuarticPencil& pencil, const PipelineOptions& opts);

}  // namespace mono
