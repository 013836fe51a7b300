#include "mono/complexfp.hpp"

#include <cstdio>
#include <vector>

namespace mono {

std::pair<Real, Real> Real::cos_sin_pi(const Rational& q, mpfr_prec_t prec) {
  Real angle(prec);
  mpfr_const_pi(angle.v_, MPFR_RNDN);
  Real t = Real::of(q, prec);
  mpfr_mul(angle.v_, angle.v_, t.v_, MPFR_RNDN);
  Real c(prec), s(prec);
  mpfr_sin_cos(s.v_, c.v_, angle.v_, MPFR_RNDN);
  return {c, s};
}

std::string Real::str(int digits) const {
  char buf[512];
  mpfr_snprintf(buf, sizeof(buf), "%.*Rg", digits, v_);
  return std::string(buf);
}

QComplex unit_direction(const Rational& q) {
  Rational one(1);
  Rational d = one + q * q;
  return QComplex((one - q * q) / d, (Rational(2) * q) / d);
}

}  // namespace mono
