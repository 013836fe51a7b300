#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "mono/sl2.hpp"

namespace mono {

/// Alphabet for coset enumeration: a = S, A = S^-1, b = U, B = U^-1,
/// where U = S*T. SL(2,Z) = <a,b | a^4, b^3, a^2 b a^-2 b^-1> (the central
/// double cover of PSL(2,Z) = <s,u | s^2, u^3>; the sign fiber is <a^2>).
enum Letter : uint8_t { kA = 0, kAinv = 1, kB = 2, kBinv = 3 };

using Word = std::vector<uint8_t>;

/// Rewrite a word in S, T into the enumeration alphabet (T = a^-1 b).
Word enumeration_word(const GeneratorWord& w);

/// Closed coset table: the right action of the four letters on cosets,
/// coset 0 = the subgroup itself. Deterministic FIFO numbering.
class CosetTable {
 public:
  int32_t target(int32_t coset, uint8_t letter) const { return rows_[coset][letter]; }
  int32_t trace(int32_t coset, const Word& w) const;
  long size() const { return static_cast<long>(rows_.size()); }

  std::vector<std::array<int32_t, 4>> rows_;
};

struct EnumerationResult {
  bool closed = false;  // false: budget exhausted, index undetermined
  long index = 0;
  CosetTable table;
};

/// Todd-Coxeter (HLT with coincidences) for a 2-generator presentation.
EnumerationResult todd_coxeter(const std::vector<Word>& relators,
                               const std::vector<Word>& subgroup_generators, long max_cosets);

/// Enumerate cosets of the subgroup generated by `gens` in SL(2,Z).
EnumerationResult enumerate_sl(const std::vector<SL2Matrix>& gens, long max_cosets);
/// Enumerate cosets of the image of `gens` in PSL(2,Z).
EnumerationResult enumerate_psl(const std::vector<SL2Matrix>& gens, long max_cosets);

/// Exact -I membership, decided from the closed SL table (-I = a^2).
bool contains_minus_identity(const CosetTable& sl_table);

/// A finitely generated subgroup of SL(2,Z) with its computed index data.
/// `determined` is false when the enumeration budget was exhausted; that is
/// reported as "undetermined", never as infinite index.
struct SubgroupDescriptor {
  std::vector<SL2Matrix> generators;
  bool determined = false;
  long psl_index = 0;
  long sl_index = 0;
  bool contains_minus_I = false;
  long mod2_image_order = 0;
  CosetTable sl_table;

  /// Exact membership test; requires `determined`.
  bool contains(const SL2Matrix& m) const;
};

SubgroupDescriptor analyze_subgroup(const std::vector<SL2Matrix>& gens,
                                    long max_cosets = 1'000'000);

/// Mutual containment of two determined subgroups.
bool same_subgroup(const SubgroupDescriptor& g1, const SubgroupDescriptor& g2);

/// Index data of the intersection of two determined subgroups (orbit of the
/// pair of tables).
struct IntersectionData {
  long sl_index = 0;
  long psl_index = 0;
  bool contains_minus_I = false;
};
IntersectionData intersect(const SubgroupDescriptor& g1, const SubgroupDescriptor& g2);

/// Cases of the abstract twist trichotomy.
enum class TwistCase { Equal, IndexTwoSubgroup, AdjoinMinusI };

struct TwistClassification {
  TwistCase twist_case = TwistCase::Equal;
  std::optional<IntersectionData> witness;  // H, for IndexTwoSubgroup
};

/// Group generated by {sign_i * g_i} together with its classification
/// against the input group.
std::pair<SubgroupDescriptor, TwistClassification> twist_group(
    const std::vector<SL2Matrix>& gens, const std::vector<int>& signs,
    long max_cosets = 1'000'000);

/// 12(r-1), the index bound for an r-generated finite-index subgroup.
long schreier_bound(long r);

}  // namespace mono
