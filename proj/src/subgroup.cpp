#include "mono/subgroup.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "mono/errors.hpp"

namespace mono {

namespace {

uint8_t inv(uint8_t l) { return l ^ 1u; }

// Working table for the enumeration: live/dead cosets with union-find.
class Enumerator {
 public:
  Enumerator(std::vector<Word> relators, std::vector<Word> subgens, long max_cosets)
      : relators_(std::move(relators)), subgens_(std::move(subgens)), max_(max_cosets) {
    new_coset();
  }

  EnumerationResult run() {
    for (const Word& w : subgens_) scan_and_fill(0, w);
    // HLT main pass: scan every relator at every live coset in definition
    // order; repeat until a clean verification pass (coincidences can leave
    // earlier rows with fresh gaps only via merges, so iterate to fixpoint).
    bool dirty = true;
    while (dirty) {
      dirty = false;
      for (size_t c = 0; c < rows_.size(); ++c) {
        if (!alive(c)) continue;
        for (const Word& r : relators_) scan_and_fill(static_cast<int32_t>(c), r);
        if (overflow_) return {false, 0, {}};
      }
      // verify closure
      for (size_t c = 0; c < rows_.size() && !dirty; ++c) {
        if (!alive(c)) continue;
        for (int l = 0; l < 4 && !dirty; ++l)
          if (rows_[c][l] < 0) dirty = true;
      }
      if (overflow_) return {false, 0, {}};
    }
    // compact into a canonical table
    std::vector<int32_t> id(rows_.size(), -1);
    int32_t n = 0;
    for (size_t c = 0; c < rows_.size(); ++c)
      if (alive(c)) id[c] = n++;
    CosetTable t;
    t.rows_.resize(n);
    for (size_t c = 0; c < rows_.size(); ++c) {
      if (!alive(c)) continue;
      for (int l = 0; l < 4; ++l) t.rows_[id[c]][l] = id[find(rows_[c][l])];
    }
    // final sanity: relators and subgroup generators close
    for (int32_t c = 0; c < n; ++c)
      for (const Word& r : relators_)
        if (t.trace(c, r) != c) throw InternalError("todd_coxeter: relator not satisfied");
    for (const Word& w : subgens_)
      if (t.trace(0, w) != 0) throw InternalError("todd_coxeter: generator escapes coset 0");
    return {true, n, std::move(t)};
  }

 private:
  bool alive(size_t c) { return find(static_cast<int32_t>(c)) == static_cast<int32_t>(c); }

  int32_t find(int32_t c) {
    while (parent_[c] != c) {
      parent_[c] = parent_[parent_[c]];
      c = parent_[c];
    }
    return c;
  }

  int32_t new_coset() {
    rows_.push_back({-1, -1, -1, -1});
    parent_.push_back(static_cast<int32_t>(rows_.size()) - 1);
    if (static_cast<long>(rows_.size()) > max_) overflow_ = true;
    return static_cast<int32_t>(rows_.size()) - 1;
  }

  // Arcs are recorded in inverse pairs; a conflicting deduction collapses
  // into a coincidence of the two targets, and merge() reconciles the rest.
  void set_arc(int32_t x, uint8_t l, int32_t y) {
    x = find(x);
    y = find(y);
    int32_t fx = rows_[x][l];
    if (fx >= 0) {
      fx = find(fx);
      if (fx != y) merge(fx, y);
      return;
    }
    int32_t fy = rows_[y][inv(l)];
    if (fy >= 0) {
      fy = find(fy);
      if (fy != x) merge(fy, x);
      return;
    }
    rows_[x][l] = y;
    rows_[y][inv(l)] = x;
  }

  void merge(int32_t x, int32_t y) {
    std::deque<std::pair<int32_t, int32_t>> queue{{x, y}};
    while (!queue.empty()) {
      auto [p, q] = queue.front();
      queue.pop_front();
      p = find(p);
      q = find(q);
      if (p == q) continue;
      if (p > q) std::swap(p, q);  // keep the older coset as representative
      parent_[q] = p;
      for (int l = 0; l < 4; ++l) {
        int32_t t = rows_[q][l];
        if (t < 0) continue;
        t = find(t);
        int32_t pt = rows_[p][l];
        if (pt < 0) {
          rows_[p][l] = t;
          int32_t back = rows_[t][inv(l)];
          if (back < 0)
            rows_[t][inv(l)] = p;
          else if (find(back) != p)
            queue.emplace_back(find(back), p);
        } else if (find(pt) != t) {
          queue.emplace_back(find(pt), t);
        }
      }
    }
  }

  void scan_and_fill(int32_t start, const Word& w) {
    if (w.empty()) return;
    while (true) {
      start = find(start);
      int32_t f = start;
      size_t i = 0;
      while (i < w.size()) {
        int32_t t = rows_[f][w[i]];
        if (t < 0) break;
        f = find(t);
        ++i;
      }
      if (i == w.size()) {
        if (f != start) merge(f, start);
        return;
      }
      int32_t b = start;
      size_t j = w.size();
      while (j > i + 1) {
        int32_t t = rows_[b][inv(w[j - 1])];
        if (t < 0) break;
        b = find(t);
        --j;
      }
      if (j == i + 1) {
        set_arc(f, w[i], b);
        return;  // deduction closes the scan (or queued a coincidence)
      }
      if (overflow_) return;
      set_arc(f, w[i], new_coset());
      if (overflow_) return;
      // continue scanning from the top (positions may have merged)
    }
  }

  std::vector<Word> relators_;
  std::vector<Word> subgens_;
  long max_;
  bool overflow_ = false;
  std::vector<std::array<int32_t, 4>> rows_;
  std::vector<int32_t> parent_;
};

std::vector<Word> sl_relators() {
  return {
      {kA, kA, kA, kA},                    // S^4
      {kB, kB, kB},                        // U^3
      {kA, kA, kB, kAinv, kAinv, kBinv},   // S^2 central
  };
}

std::vector<Word> psl_relators() {
  return {{kA, kA}, {kB, kB, kB}};
}

std::vector<Word> generator_words(const std::vector<SL2Matrix>& gens) {
  std::vector<Word> ws;
  ws.reserve(gens.size());
  for (const auto& g : gens) ws.push_back(enumeration_word(g.decompose_word()));
  return ws;
}

}  // namespace

Word enumeration_word(const GeneratorWord& w) {
  Word out;
  for (Gen g : w.letters()) {
    switch (g) {
      case Gen::S: out.push_back(kA); break;
      case Gen::Sinv: out.push_back(kAinv); break;
      case Gen::T:  // T = S^-1 U
        out.push_back(kAinv);
        out.push_back(kB);
        break;
      case Gen::Tinv:
        out.push_back(kBinv);
        out.push_back(kA);
        break;
    }
  }
  return out;
}

int32_t CosetTable::trace(int32_t coset, const Word& w) const {
  for (uint8_t l : w) {
    coset = rows_[coset][l];
    if (coset < 0) return -1;
  }
  return coset;
}

EnumerationResult todd_coxeter(const std::vector<Word>& relators,
                               const std::vector<Word>& subgroup_generators, long max_cosets) {
  if (max_cosets < 1) throw Error("todd_coxeter: max_cosets must be >= 1");
  Enumerator e(relators, subgroup_generators, max_cosets);
  return e.run();
}

EnumerationResult enumerate_sl(const std::vector<SL2Matrix>& gens, long max_cosets) {
  return todd_coxeter(sl_relators(), generator_words(gens), max_cosets);
}

EnumerationResult enumerate_psl(const std::vector<SL2Matrix>& gens, long max_cosets) {
  return todd_coxeter(psl_relators(), generator_words(gens), max_cosets);
}

bool contains_minus_identity(const CosetTable& sl_table) {
  if (sl_table.rows_.empty()) throw RequiresClosedTable("empty coset table");
  return sl_table.trace(0, {kA, kA}) == 0;
}

bool SubgroupDescriptor::contains(const SL2Matrix& m) const {
  if (!determined) throw RequiresClosedTable("subgroup index undetermined");
  return sl_table.trace(0, enumeration_word(m.decompose_word())) == 0;
}

SubgroupDescriptor analyze_subgroup(const std::vector<SL2Matrix>& gens, long max_cosets) {
  SubgroupDescriptor d;
  d.generators = gens;
  d.mod2_image_order = mod_n_image_order(gens, 2);
  EnumerationResult sl = enumerate_sl(gens, max_cosets);
  if (!sl.closed) return d;  // undetermined
  d.determined = true;
  d.sl_table = std::move(sl.table);
  d.sl_index = sl.index;
  d.contains_minus_I = contains_minus_identity(d.sl_table);
  d.psl_index = d.contains_minus_I ? d.sl_index : d.sl_index / 2;
  if (!d.contains_minus_I && d.sl_index % 2 != 0)
    throw InternalError("sl index must be even when -I is missing");
  return d;
}

bool same_subgroup(const SubgroupDescriptor& g1, const SubgroupDescriptor& g2) {
  if (!g1.determined || !g2.determined) throw RequiresClosedTable("undetermined subgroup");
  if (g1.sl_index != g2.sl_index) return false;
  for (const auto& g : g2.generators)
    if (!g1.contains(g)) return false;
  for (const auto& g : g1.generators)
    if (!g2.contains(g)) return false;
  return true;
}

IntersectionData intersect(const SubgroupDescriptor& g1, const SubgroupDescriptor& g2) {
  if (!g1.determined || !g2.determined) throw RequiresClosedTable("undetermined subgroup");
  long n2 = g2.sl_table.size();
  auto key = [n2](int32_t x, int32_t y) { return static_cast<long>(x) * n2 + y; };
  std::vector<long> frontier{key(0, 0)};
  std::vector<char> seen(static_cast<size_t>(g1.sl_table.size()) * n2, 0);
  seen[0] = 1;
  long count = 1;
  while (!frontier.empty()) {
    std::vector<long> next;
    for (long k : frontier) {
      int32_t x = static_cast<int32_t>(k / n2), y = static_cast<int32_t>(k % n2);
      for (uint8_t l = 0; l < 4; ++l) {
        long k2 = key(g1.sl_table.target(x, l), g2.sl_table.target(y, l));
        if (!seen[k2]) {
          seen[k2] = 1;
          ++count;
          next.push_back(k2);
        }
      }
    }
    frontier = std::move(next);
  }
  IntersectionData h;
  h.sl_index = count;
  Word aa{kA, kA};
  h.contains_minus_I =
      g1.sl_table.trace(0, aa) == 0 && g2.sl_table.trace(0, aa) == 0;
  h.psl_index = h.contains_minus_I ? h.sl_index : h.sl_index / 2;
  return h;
}

std::pair<SubgroupDescriptor, TwistClassification> twist_group(
    const std::vector<SL2Matrix>& gens, const std::vector<int>& signs, long max_cosets) {
  if (signs.size() != gens.size()) throw Error("twist_group: signs/generators length mismatch");
  std::vector<SL2Matrix> twisted;
  twisted.reserve(gens.size());
  for (size_t i = 0; i < gens.size(); ++i) {
    if (signs[i] != 1 && signs[i] != -1) throw Error("twist_group: signs must be +-1");
    twisted.push_back(signs[i] == 1 ? gens[i] : -gens[i]);
  }
  SubgroupDescriptor g2 = analyze_subgroup(twisted, max_cosets);
  SubgroupDescriptor g1 = analyze_subgroup(gens, max_cosets);
  if (!g1.determined || !g2.determined)
    throw BudgetExceeded("twist_group: coset enumeration budget exhausted");
  TwistClassification cls;
  if (same_subgroup(g1, g2)) {
    cls.twist_case = TwistCase::Equal;
    return {g2, cls};
  }
  std::vector<SL2Matrix> adjoined = gens;
  adjoined.push_back(SL2Matrix::minus_identity());
  SubgroupDescriptor g1m = analyze_subgroup(adjoined, max_cosets);
  if (g1m.determined && same_subgroup(g2, g1m)) {
    cls.twist_case = TwistCase::AdjoinMinusI;
    return {g2, cls};
  }
  cls.twist_case = TwistCase::IndexTwoSubgroup;
  cls.witness = intersect(g1, g2);
  return {g2, cls};
}

long schreier_bound(long r) {
  if (r < 2) throw InvalidRank("schreier_bound requires r >= 2");
  return 12 * (r - 1);
}

}  // namespace mono
