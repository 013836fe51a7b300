#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mono/family.hpp"
#include "mono/poly.hpp"
#include "mono/rational.hpp"

namespace mono {

/// Family of hyperelliptic curves y^2 = f(x, t), f monic in x of degree
/// 2g+2, or 2g+1 with the point at infinity as a marked branch point.
struct HyperellFamilySpec {
  BivarPoly f;
  int genus = 2;
  std::string label;
};

/// Validates monicity, degree and squarefreeness of the generic fiber.
void validate_hyperell(const HyperellFamilySpec& fam);

/// Element of Sp(2g, F2) in the basis {P1+P2, P2+P3, ...} of the even-subset
/// space modulo {empty, full}; column c is the bit mask of the image of
/// basis vector c.
struct Sp2gF2Element {
  int g = 0;
  std::vector<uint32_t> col;

  static Sp2gF2Element identity(int g);
  friend Sp2gF2Element operator*(const Sp2gF2Element& a, const Sp2gF2Element& b);
  friend bool operator==(const Sp2gF2Element& a, const Sp2gF2Element& b) {
    return a.g == b.g && a.col == b.col;
  }
  /// M^T J M = J for the intersection form <S,T> = |S cap T| mod 2.
  bool preserves_form() const;
};

/// Induced symplectic action of a permutation of the 2g+2 Weierstrass
/// points on the 2-torsion (one-line notation, 0-based).
Sp2gF2Element permutation_to_sp(const std::vector<int>& perm, int g);

/// Per-lasso permutations of the branch points (the point at infinity is
/// the fixed last point for odd-degree models).
std::vector<std::vector<int>> weierstrass_permutations(const HyperellFamilySpec& fam,
                                                       const PipelineOptions& opts);

/// |Sp(2g, F2)| = 2^(g^2) * prod_{k=1..g} (2^(2k) - 1).
Integer sp2g_f2_order(int g);

/// The index bound |Sp(2g,F2)| / (2g+2)! of the mod-2 monodromy, g >= 3.
Rational hyperell_bound(int g);

struct HyperellReport {
  std::string label;
  int genus = 0;
  long puncture_count = 0;
  std::vector<std::vector<int>> permutations;  // per lasso
  Integer permutation_group_order;
  Integer group_order;    // subgroup of Sp(2g, F2) generated by the images
  Integer ambient_order;  // |Sp(2g, F2)|
  Integer index;          // ambient / group
  Rational bound;         // hyperell_bound(g) when g >= 3
  bool bound_holds = false;
  bool sharp = false;  // index equals the bound
  bool full_symmetric_image = false;
};

/// Tracks the branch points, closes the mod-2 monodromy group, and checks
/// the index bound (asserted when the permutation image is all of S_{2g+2}).
HyperellReport mod2_monodromy(const HyperellFamilySpec& fam, const PipelineOptions& opts);

/// Group order by breadth-first closure; guarded by `cap` elements.
Integer sp_group_order(const std::vector<Sp2gF2Element>& gens, long cap = 10'000'000);
Integer permutation_group_order(const std::vector<std::vector<int>>& gens,
                                long cap = 10'000'000);

/// A seeded line slice of the universal even-degree family
/// y^2 = x^(2g+2) + a_{2g}(t) x^(2g) + ... + a_0(t), a_i affine in t.
HyperellFamilySpec universal_slice(int g, uint64_t seed);

}  // namespace mono
