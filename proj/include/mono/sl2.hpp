#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mono/rational.hpp"

namespace mono {

/// Letters of words in the standard generators S = [[0,1],[-1,0]] and
/// T = [[1,1],[0,1]] of SL(2,Z).
enum class Gen : uint8_t { S, Sinv, T, Tinv };

/// Freely reduced word over {S, S^-1, T, T^-1}.
class GeneratorWord {
 public:
  GeneratorWord() = default;
  explicit GeneratorWord(std::vector<Gen> letters);

  const std::vector<Gen>& letters() const { return l_; }
  bool empty() const { return l_.empty(); }
  size_t size() const { return l_.size(); }

  GeneratorWord operator*(const GeneratorWord& o) const;
  GeneratorWord inverse() const;

  std::string str() const;

 private:
  void reduce();
  std::vector<Gen> l_;
};

/// Exact 2x2 integer matrix of determinant 1.
class SL2Matrix {
 public:
  SL2Matrix() : a_(1), b_(0), c_(0), d_(1) {}
  SL2Matrix(Integer a, Integer b, Integer c, Integer d);

  static SL2Matrix identity() { return SL2Matrix(); }
  static SL2Matrix minus_identity() { return SL2Matrix(-1, 0, 0, -1); }
  static SL2Matrix S() { return SL2Matrix(0, 1, -1, 0); }
  static SL2Matrix T() { return SL2Matrix(1, 1, 0, 1); }
  /// U = S*T, of order 3; PSL(2,Z) = <s,u | s^2 = u^3 = 1>.
  static SL2Matrix U() { return mul(S(), T()); }

  const Integer& a() const { return a_; }
  const Integer& b() const { return b_; }
  const Integer& c() const { return c_; }
  const Integer& d() const { return d_; }

  static SL2Matrix mul(const SL2Matrix& m1, const SL2Matrix& m2);
  SL2Matrix inverse() const { return SL2Matrix(d_, -b_, -c_, a_); }
  SL2Matrix operator-() const { return SL2Matrix(-a_, -b_, -c_, -d_); }
  Integer trace() const { return a_ + d_; }

  friend SL2Matrix operator*(const SL2Matrix& x, const SL2Matrix& y) { return mul(x, y); }
  friend bool operator==(const SL2Matrix& x, const SL2Matrix& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_ && x.d_ == y.d_;
  }

  bool is_identity() const { return a_ == 1 && b_ == 0 && c_ == 0 && d_ == 1; }
  bool is_minus_identity() const { return a_ == -1 && b_ == 0 && c_ == 0 && d_ == -1; }

  /// The automorphism M -> (M^t)^-1.
  SL2Matrix tau() const { return SL2Matrix(d_, -c_, -b_, a_); }

  /// A word in S, T evaluating exactly to this matrix (continued-fraction
  /// style reduction on the first column; length O(log max|entry|)).
  GeneratorWord decompose_word() const;

  static SL2Matrix eval(const GeneratorWord& w);

  /// Entrywise reduction mod n (entries normalized to [0, n)), packed as
  /// four uint32 values a,b,c,d. Requires n >= 2.
  std::array<uint32_t, 4> reduce_mod(uint32_t n) const;

  std::string str() const;

 private:
  Integer a_, b_, c_, d_;
};

/// Image of M under the canonical epimorphism SL(2,Z) -> Z/12Z
/// (S -> 3, T -> 1). Satisfies phi(-I) = 6.
int abelianization_character(const SL2Matrix& m);

/// Order of the subgroup of SL(2,Z/n) generated by the reductions of the
/// given matrices (breadth-first closure; n small).
long mod_n_image_order(const std::vector<SL2Matrix>& gens, uint32_t n);

}  // namespace mono
