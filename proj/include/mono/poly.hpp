#pragma once

#include <string>
#include <utility>
#include <vector>

#include "mono/rational.hpp"

namespace mono {

/// Univariate polynomial over the exact rationals, dense representation,
/// coefficients indexed by degree with trailing zeros stripped.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(const Rational& c) { c_.push_back(c); normalize(); }
  Polynomial(long c) : Polynomial(Rational(c)) {}
  explicit Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { normalize(); }

  static Polynomial variable() { return Polynomial(std::vector<Rational>{Rational(0), Rational(1)}); }
  static Polynomial monomial(const Rational& c, int deg);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  const Rational& coeff(int k) const;
  const Rational& lc() const;
  const std::vector<Rational>& coeffs() const { return c_; }

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial operator*(const Rational& s) const;
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

  Polynomial pow(unsigned e) const;
  Polynomial derivative() const;
  Polynomial monic() const;

  /// Quotient and remainder; divisor must be nonzero.
  static std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
  /// Exact division; throws if the remainder is nonzero.
  static Polynomial exact_div(const Polynomial& a, const Polynomial& b);

  /// Monic gcd.
  static Polynomial gcd(const Polynomial& a, const Polynomial& b);

  /// Squarefree part (product of distinct irreducible factors), monic.
  Polynomial squarefree() const;

  /// Yun decomposition: returns a[1..], with *this = lc * prod a[k]^k and the
  /// a[k] monic squarefree pairwise coprime. a[0] of the result is a[1].
  std::vector<Polynomial> squarefree_decomposition() const;

  /// Multiplicity of the (squarefree, nonconstant) factor h in *this.
  int multiplicity_of(const Polynomial& h) const;

  Rational eval(const Rational& x) const;
  Polynomial compose(const Polynomial& inner) const;

  /// x^m * p(1/x) for m >= deg p.
  Polynomial reversed(int m) const;

  std::string str(const std::string& var = "t") const;

 private:
  void normalize();
  std::vector<Rational> c_;
};

/// Sylvester resultant of a and b. Throws BothZero if both are zero.
Rational resultant(const Polynomial& a, const Polynomial& b);

/// Reduced fraction of polynomials; denominator monic and nonzero.
class RationalFunction {
 public:
  RationalFunction() : num_(), den_(Rational(1)) {}
  RationalFunction(const Polynomial& p) : num_(p), den_(Rational(1)) {}
  RationalFunction(const Rational& c) : num_(Polynomial(c)), den_(Rational(1)) {}
  RationalFunction(long c) : RationalFunction(Rational(c)) {}
  RationalFunction(const Polynomial& num, const Polynomial& den);

  static RationalFunction variable() { return RationalFunction(Polynomial::variable()); }

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }
  bool is_polynomial() const { return den_.degree() == 0; }
  Rational constant_value() const;

  RationalFunction operator-() const;
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  RationalFunction pow(unsigned e) const;
  RationalFunction derivative() const;

  /// Substitute t -> inner(t) for a polynomial inner.
  RationalFunction compose(const Polynomial& inner) const;
  /// Substitute t -> 1/s (the chart at infinity).
  RationalFunction at_infinity_chart() const;

  /// Order of vanishing along the squarefree nonconstant factor h:
  /// multiplicity in the numerator minus multiplicity in the denominator.
  int ord_at(const Polynomial& h) const;

  std::string str(const std::string& var = "t") const;

 private:
  Polynomial num_, den_;
};

/// Polynomial in a distinguished variable x whose coefficients are rational
/// functions of the base parameter t. This is the working form for families:
/// x^3 + P(t) x + Q(t), hyperelliptic f(x, t), pencil restrictions G(x, t).
class BivarPoly {
 public:
  BivarPoly() = default;
  explicit BivarPoly(std::vector<RationalFunction> cx) : cx_(std::move(cx)) { normalize(); }
  BivarPoly(const RationalFunction& c) { cx_.push_back(c); normalize(); }

  static BivarPoly var_x() {
    return BivarPoly(std::vector<RationalFunction>{RationalFunction(0), RationalFunction(1)});
  }

  bool is_zero() const { return cx_.empty(); }
  int deg_x() const { return static_cast<int>(cx_.size()) - 1; }
  const RationalFunction& coeff(int k) const;
  const RationalFunction& lc() const;

  BivarPoly operator-() const;
  friend BivarPoly operator+(const BivarPoly& a, const BivarPoly& b);
  friend BivarPoly operator-(const BivarPoly& a, const BivarPoly& b);
  friend BivarPoly operator*(const BivarPoly& a, const BivarPoly& b);
  BivarPoly operator*(const RationalFunction& s) const;
  friend bool operator==(const BivarPoly& a, const BivarPoly& b) { return a.cx_ == b.cx_; }

  BivarPoly pow(unsigned e) const;
  BivarPoly d_dx() const;
  BivarPoly d_dt() const;

  /// Evaluate the x-polynomial at a rational x, leaving a function of t.
  RationalFunction eval_x(const Rational& x) const;

  std::string str(const std::string& xvar = "x", const std::string& tvar = "t") const;

 private:
  void normalize();
  std::vector<RationalFunction> cx_;
};

/// Resultant of f and g with respect to x, as a rational function of t.
/// Computed fraction-free (Bareiss) after clearing coefficient denominators.
RationalFunction resultant_x(const BivarPoly& f, const BivarPoly& g);

}  // namespace mono
