#include "mono/roots.hpp"

#include <algorithm>

#include "mono/errors.hpp"

namespace mono {

Complex CPoly::eval(const Complex& z) const {
  Complex r(z.prec());
  for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * z + *it;
  return r;
}

CPoly CPoly::derivative() const {
  CPoly d;
  for (size_t i = 1; i < c.size(); ++i) {
    d.c.push_back(c[i] * Complex(Real::of(static_cast<long>(i), c[i].prec()), Real(c[i].prec())));
  }
  return d;
}

std::vector<Complex> CPoly::taylor_at(const Complex& z0) const {
  std::vector<Complex> a = c;
  int n = degree();
  for (int k = 0; k <= n; ++k) {
    for (int i = n - 1; i >= k; --i) a[i] = a[i] + a[i + 1] * z0;
  }
  return a;  // a[k] = coefficient of w^k in p(z0 + w)
}

CPoly CPoly::from_exact(const Polynomial& p, mpfr_prec_t prec) {
  CPoly r;
  for (int k = 0; k <= p.degree(); ++k)
    r.c.push_back(Complex(Real::of(p.coeff(k), prec), Real(prec)));
  return r;
}

CPoly CPoly::specialize(const BivarPoly& f, const Complex& t, mpfr_prec_t prec) {
  CPoly r;
  for (int k = 0; k <= f.deg_x(); ++k) {
    const RationalFunction& c = f.coeff(k);
    Complex num(prec), den(prec);
    {
      Complex acc(prec);
      for (int j = c.num().degree(); j >= 0; --j)
        acc = acc * t + Complex(Real::of(c.num().coeff(j), prec), Real(prec));
      num = acc;
    }
    {
      Complex acc(prec);
      for (int j = c.den().degree(); j >= 0; --j)
        acc = acc * t + Complex(Real::of(c.den().coeff(j), prec), Real(prec));
      den = acc;
    }
    r.c.push_back(num / den);
  }
  return r;
}

Complex newton_polish(const CPoly& p, const CPoly& dp, Complex z, int iters) {
  for (int i = 0; i < iters; ++i) {
    Complex f = p.eval(z);
    if (f.is_zero()) return z;
    Complex d = dp.eval(z);
    if (d.is_zero()) return z;
    z = z - f / d;
  }
  return z;
}

Real certify_disk(const CPoly& p, const Complex& z) {
  // Taylor expand p at z; for a radius r the disk contains exactly one root
  // if |c0| + sum_{k>=2} |c_k| r^k < |c1| r (Rouche against the linear
  // part). Every computed coefficient carries an evaluation-error pad E, so
  // a residual driven below rounding noise cannot fake a certificate.
  mpfr_prec_t prec = z.prec();
  std::vector<Complex> a = p.taylor_at(z);
  int n = p.degree();
  Real coeff_sum(prec);
  for (const auto& c : p.c) coeff_sum = coeff_sum + c.abs();
  Real zmag = std::max(Real::of(1L, prec), z.abs());
  Real growth = Real::of(1L, prec);
  for (int k = 0; k < n; ++k) growth = growth * zmag;
  Real E = coeff_sum * growth * Real::of(static_cast<long>(n + 1) * (n + 1), prec) *
           Real::pow2(-static_cast<long>(prec) + 4, prec);
  Real c1 = a[1].abs() - E;
  if (!(c1 > E)) return -Real::of(1L, prec);
  Real beta = (a[0].abs() + E) / c1;
  Real r = beta * Real::of(4L, prec);
  for (int attempt = 0; attempt < 4; ++attempt) {
    Real lhs = a[0].abs() + E;
    Real rk = r * r;
    for (int k = 2; k <= n; ++k) {
      lhs = lhs + (a[k].abs() + E) * rk;
      rk = rk * r;
    }
    Real rhs = c1 * r;
    if (lhs * Real::of(Rational(10, 9), prec) < rhs) return r;
    r = r * Real::of(2L, prec);
  }
  return -Real::of(1L, prec);
}

namespace {

// Deterministic start points: slightly perturbed roots of unity on the
// Cauchy bound circle.
std::vector<Complex> initial_points(const CPoly& p, mpfr_prec_t prec) {
  int n = p.degree();
  Real lc = p.c[n].abs();
  Real bound = Real::of(1L, prec);
  for (int k = 0; k < n; ++k) bound = std::max(bound, p.c[k].abs() / lc);
  Real radius = (Real::of(1L, prec) + bound) * Real::of(Rational(6, 5), prec);
  std::vector<Complex> z;
  for (int k = 0; k < n; ++k) {
    Rational angle = Rational(2 * k, n) + Rational(1, 2 * n) + Rational(1, 7 * n);
    auto [c, s] = Real::cos_sin_pi(angle, prec);
    z.push_back(Complex(c * radius, s * radius));
  }
  return z;
}

}  // namespace

std::vector<CertifiedRoot> roots_certified(const CPoly& p0, mpfr_prec_t prec) {
  if (p0.degree() < 1) return {};
  // Work at elevated precision so that the certified radii land well below
  // 2^(-prec/2): the Rouche radius scales like |p(z)|, which Newton pushes
  // to roughly 2^(-work).
  mpfr_prec_t work = prec + 32 + static_cast<mpfr_prec_t>(p0.degree()) * 8;
  CPoly p;
  for (const auto& c : p0.c) p.c.push_back(Complex(Real(work) + c.re(), Real(work) + c.im()));
  int n = p.degree();
  CPoly dp = p.derivative();
  std::vector<Complex> z = initial_points(p, work);

  // Durand-Kerner until the update stalls.
  Real eps = Real::pow2(-static_cast<long>(work) + 8, work);
  int max_iter = 64 + static_cast<int>(work) / 2;
  for (int iter = 0; iter < max_iter; ++iter) {
    Real worst(work);
    for (int i = 0; i < n; ++i) {
      Complex denom(Real::of(1L, work), Real(work));
      for (int j = 0; j < n; ++j) {
        if (j == i) continue;
        denom = denom * (z[i] - z[j]);
      }
      denom = denom * p.c[n];
      Complex delta = p.eval(z[i]) / denom;
      z[i] = z[i] - delta;
      worst = std::max(worst, delta.abs());
    }
    Real scale = Real::of(1L, work);
    for (const auto& zi : z) scale = std::max(scale, zi.abs());
    if (worst < eps * scale) break;
  }
  for (int i = 0; i < n; ++i) z[i] = newton_polish(p, dp, z[i], 8);

  std::vector<CertifiedRoot> out;
  for (int i = 0; i < n; ++i) {
    Real r = certify_disk(p, z[i]);
    if (r.sign() < 0) throw PrecisionExhausted("root certification failed");
    out.push_back({z[i], r});
  }
  // Disjointness: with n disjoint certified disks and n roots, every disk
  // holds exactly one and all roots are accounted for.
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Real sep = (out[i].z - out[j].z).abs();
      if (!(sep > (out[i].radius + out[j].radius) * Real::of(2L, work)))
        throw PrecisionExhausted("certified disks not separated");
    }
  return out;
}

std::vector<IsolatedRoot> isolate_roots(const Polynomial& f, mpfr_prec_t prec,
                                        mpfr_prec_t prec_cap) {
  if (f.is_zero()) throw Error("isolate_roots of zero polynomial");
  std::vector<IsolatedRoot> out;
  auto layers = f.squarefree_decomposition();
  for (size_t m = 0; m < layers.size(); ++m) {
    if (layers[m].degree() < 1) continue;
    mpfr_prec_t p = prec;
    while (true) {
      try {
        CPoly cp = CPoly::from_exact(layers[m], p);
        for (auto& cr : roots_certified(cp, p))
          out.push_back({cr.z, cr.radius, static_cast<int>(m + 1)});
        break;
      } catch (const PrecisionExhausted&) {
        if (p >= prec_cap) throw;
        p = std::min(prec_cap, p * 2);
      }
    }
  }
  return out;
}

std::vector<Complex> roots_numeric(const Polynomial& f, mpfr_prec_t prec, mpfr_prec_t prec_cap) {
  if (f.is_zero()) throw Error("roots_numeric of zero polynomial");
  std::vector<Complex> out;
  for (const auto& ir : isolate_roots(f, prec, prec_cap))
    for (int k = 0; k < ir.multiplicity; ++k) out.push_back(ir.z);
  std::sort(out.begin(), out.end(), [](const Complex& a, const Complex& b) {
    if (a.re() < b.re()) return true;
    if (b.re() < a.re()) return false;
    return a.im() < b.im();
  });
  return out;
}

}  // namespace mono
