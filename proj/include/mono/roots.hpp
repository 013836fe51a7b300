#pragma once

#include <vector>

#include "mono/complexfp.hpp"
#include "mono/poly.hpp"

namespace mono {

/// Polynomial with complex floating coefficients (dense, by degree).
struct CPoly {
  std::vector<Complex> c;

  int degree() const { return static_cast<int>(c.size()) - 1; }
  Complex eval(const Complex& z) const;
  CPoly derivative() const;
  /// Taylor coefficients of p(z0 + w) in w, by synthetic division.
  std::vector<Complex> taylor_at(const Complex& z0) const;

  static CPoly from_exact(const Polynomial& p, mpfr_prec_t prec);
  /// Specialize a BivarPoly at a complex parameter value.
  static CPoly specialize(const BivarPoly& f, const Complex& t, mpfr_prec_t prec);
};

/// A numeric root plus a radius such that the disk |w - z| <= radius has
/// been verified (via a Rouche/Taylor test at working precision) to contain
/// exactly one root of the polynomial.
struct CertifiedRoot {
  Complex z;
  Real radius;
};

/// Newton-polish z against p (p' supplied); returns the refined point.
Complex newton_polish(const CPoly& p, const CPoly& dp, Complex z, int iters);

/// Certification radius around z, or a negative value on failure.
Real certify_disk(const CPoly& p, const Complex& z);

/// All roots of a squarefree complex polynomial, each with a certified
/// disk, pairwise disjoint. Deterministic. Throws PrecisionExhausted if the
/// disks cannot be certified at `prec` (caller may retry higher).
std::vector<CertifiedRoot> roots_certified(const CPoly& p, mpfr_prec_t prec);

/// Roots of an exact rational polynomial, with multiplicity (multiple roots
/// repeated), adaptive precision starting at `prec` and doubling up to
/// `prec_cap` on certification failure. Sorted by (re, im).
std::vector<Complex> roots_numeric(const Polynomial& f, mpfr_prec_t prec,
                                   mpfr_prec_t prec_cap = 1024);

/// As above but each distinct root reported once with its multiplicity and
/// certified radius.
struct IsolatedRoot {
  Complex z;
  Real radius;
  int multiplicity;
};
std::vector<IsolatedRoot> isolate_roots(const Polynomial& f, mpfr_prec_t prec,
                                        mpfr_prec_t prec_cap = 1024);

}  // namespace mono
