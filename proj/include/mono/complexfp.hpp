#pragma once

#include <mpfr.h>

#include <string>
#include <utility>

#include "mono/rational.hpp"

namespace mono {

/// Arbitrary-precision real number (MPFR, round-to-nearest). Binary
/// operations carry the larger operand precision. Values are immutable in
/// spirit: every operation returns a fresh value.
class Real {
 public:
  explicit Real(mpfr_prec_t prec = 64) {
    mpfr_init2(v_, prec);
    mpfr_set_zero(v_, 1);
  }
  Real(const Real& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  Real(Real&& o) noexcept {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_swap(v_, o.v_);
  }
  Real& operator=(const Real& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  Real& operator=(Real&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~Real() { mpfr_clear(v_); }

  static Real of(long x, mpfr_prec_t prec) {
    Real r(prec);
    mpfr_set_si(r.v_, x, MPFR_RNDN);
    return r;
  }
  static Real of(double x, mpfr_prec_t prec) {
    Real r(prec);
    mpfr_set_d(r.v_, x, MPFR_RNDN);
    return r;
  }
  static Real of(const Rational& q, mpfr_prec_t prec) {
    Real r(prec);
    mpfr_set_q(r.v_, q.raw().get_mpq_t(), MPFR_RNDN);
    return r;
  }

  mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

  friend Real operator+(const Real& a, const Real& b) { return bin(mpfr_add, a, b); }
  friend Real operator-(const Real& a, const Real& b) { return bin(mpfr_sub, a, b); }
  friend Real operator*(const Real& a, const Real& b) { return bin(mpfr_mul, a, b); }
  friend Real operator/(const Real& a, const Real& b) { return bin(mpfr_div, a, b); }
  Real operator-() const {
    Real r(prec());
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
  }

  friend bool operator<(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) < 0; }
  friend bool operator<=(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) <= 0; }
  friend bool operator>(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) > 0; }
  friend bool operator>=(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) >= 0; }
  friend bool operator==(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) == 0; }

  Real abs() const {
    Real r(prec());
    mpfr_abs(r.v_, v_, MPFR_RNDN);
    return r;
  }
  Real sqrt() const {
    Real r(prec());
    mpfr_sqrt(r.v_, v_, MPFR_RNDN);
    return r;
  }
  Real rootn(unsigned long n) const {
    Real r(prec());
    mpfr_rootn_ui(r.v_, v_, n, MPFR_RNDN);
    return r;
  }
  /// 2^e as a Real of this precision.
  static Real pow2(long e, mpfr_prec_t prec) {
    Real r(prec);
    mpfr_set_ui_2exp(r.v_, 1, e, MPFR_RNDN);
    return r;
  }

  /// sin/cos of pi*q, exact-argument trigonometry for path sampling.
  static std::pair<Real, Real> cos_sin_pi(const Rational& q, mpfr_prec_t prec);

  std::string str(int digits = 20) const;

  mpfr_srcptr raw() const { return v_; }
  mpfr_ptr raw() { return v_; }

 private:
  using MpfrBin = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t);
  static Real bin(MpfrBin op, const Real& a, const Real& b) {
    Real r(std::max(a.prec(), b.prec()));
    op(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  mpfr_t v_;
};

/// Complex number over Real. Both components share one precision.
class Complex {
 public:
  explicit Complex(mpfr_prec_t prec = 64) : re_(prec), im_(prec) {}
  Complex(Real re, Real im) : re_(std::move(re)), im_(std::move(im)) {}

  static Complex of(const Rational& re, const Rational& im, mpfr_prec_t prec) {
    return Complex(Real::of(re, prec), Real::of(im, prec));
  }

  const Real& re() const { return re_; }
  const Real& im() const { return im_; }
  mpfr_prec_t prec() const { return std::max(re_.prec(), im_.prec()); }
  bool is_finite() const { return re_.is_finite() && im_.is_finite(); }

  friend Complex operator+(const Complex& a, const Complex& b) {
    return Complex(a.re_ + b.re_, a.im_ + b.im_);
  }
  friend Complex operator-(const Complex& a, const Complex& b) {
    return Complex(a.re_ - b.re_, a.im_ - b.im_);
  }
  friend Complex operator*(const Complex& a, const Complex& b) {
    return Complex(a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_);
  }
  friend Complex operator/(const Complex& a, const Complex& b) {
    Real n = b.norm2();
    return Complex((a.re_ * b.re_ + a.im_ * b.im_) / n, (a.im_ * b.re_ - a.re_ * b.im_) / n);
  }
  Complex operator-() const { return Complex(-re_, -im_); }

  Complex conj() const { return Complex(re_, -im_); }
  Real norm2() const { return re_ * re_ + im_ * im_; }
  Real abs() const {
    Real r(prec());
    mpfr_hypot(r.raw(), re_.raw(), im_.raw(), MPFR_RNDN);
    return r;
  }
  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }

  std::string str(int digits = 20) const { return re_.str(digits) + (im_.sign() < 0 ? "" : "+") + im_.str(digits) + "i"; }

 private:
  Real re_, im_;
};

/// Exact Gaussian-rational point; the geometry layer (path plans, circle
/// centers, basepoints) stays exact for reproducibility.
struct QComplex {
  Rational re, im;
  QComplex() = default;
  QComplex(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  friend QComplex operator+(const QComplex& a, const QComplex& b) { return {a.re + b.re, a.im + b.im}; }
  friend QComplex operator-(const QComplex& a, const QComplex& b) { return {a.re - b.re, a.im - b.im}; }
  friend QComplex operator*(const QComplex& a, const QComplex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend bool operator==(const QComplex& a, const QComplex& b) { return a.re == b.re && a.im == b.im; }
  Rational norm2() const { return re * re + im * im; }

  Complex to_complex(mpfr_prec_t prec) const { return Complex::of(re, im, prec); }
  std::string str() const { return re.str() + (im.sign() < 0 ? "" : "+") + im.str() + "i"; }
};

/// Rational point on the unit circle from the tangent-half-angle map:
/// ((1-q^2) + 2q i) / (1+q^2).
QComplex unit_direction(const Rational& q);

}  // namespace mono
