#include "mono/family.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>

#include "mono/errors.hpp"

namespace mono {

// ---------------------------------------------------------------------------
// Weierstrass basics

RationalFunction discriminant_cubic(const RationalFunction& p, const RationalFunction& q) {
  return p.pow(3) * RationalFunction(Rational(4)) + q.pow(2) * RationalFunction(Rational(27));
}

Rational j_invariant(const Rational& p, const Rational& q) {
  Rational disc = Rational(4) * p.pow(3) + Rational(27) * q.pow(2);
  if (disc.is_zero()) throw DegenerateCurve("j_invariant: 4p^3 + 27q^2 = 0");
  return Rational(1728) * Rational(4) * p.pow(3) / disc;
}

RationalFunction j_invariant(const RationalFunction& p, const RationalFunction& q) {
  RationalFunction disc = discriminant_cubic(p, q);
  if (disc.is_zero()) throw DegenerateCurve("j_invariant: 4p^3 + 27q^2 = 0");
  return p.pow(3) * RationalFunction(Rational(4 * 1728)) / disc;
}

JMapData j_map(const RationalFunction& p, const RationalFunction& q) {
  JMapData out;
  out.j = j_invariant(p, q);
  out.degree = std::max(out.j.num().degree(), out.j.den().degree());
  out.m = out.degree;
  out.isotrivial = out.degree == 0;
  return out;
}

BivarPoly FamilySpec::cubic() const {
  std::vector<RationalFunction> cx{q, p, RationalFunction(0), RationalFunction(1)};
  return BivarPoly(std::move(cx));
}

// ---------------------------------------------------------------------------
// punctures and loops

Punctures punctures_of(const FamilySpec& fam, const PipelineOptions& opts) {
  RationalFunction disc = discriminant_cubic(fam.p, fam.q);
  if (disc.is_zero()) throw DegenerateFamily("4p^3 + 27q^2 vanishes identically");
  Polynomial prod = disc.num() * fam.p.den() * fam.q.den();
  Punctures out;
  out.poly = prod.squarefree();
  if (out.poly.degree() >= 1)
    out.roots = isolate_roots(out.poly, opts.precision, opts.precision_cap);
  return out;
}

namespace {

uint64_t mix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

// Dyadic snap of a floating value, exact rational output.
Rational snap(double v, int bits) {
  double scaled = std::ldexp(v, bits);
  if (std::abs(scaled) > 9e15) throw Error("snap: value too large");
  long long r = std::llround(scaled);
  return Rational(Integer(std::to_string(r)), Integer(1) << bits);
}

double seg_point_distance(std::complex<double> a, std::complex<double> b,
                          std::complex<double> p) {
  std::complex<double> ab = b - a;
  double len2 = std::norm(ab);
  if (len2 == 0) return std::abs(p - a);
  double u = std::clamp(((p - a) * std::conj(ab)).real() / len2, 0.0, 1.0);
  return std::abs(p - (a + u * ab));
}

}  // namespace

LoopSystem build_loops(const std::vector<IsolatedRoot>& punctures, const PipelineOptions& opts) {
  LoopSystem out;
  const size_t n = punctures.size();
  std::vector<std::complex<double>> z;
  double maxmod = 0;
  for (const auto& pr : punctures) {
    std::complex<double> w(pr.z.re().to_double(), pr.z.im().to_double());
    z.push_back(w);
    maxmod = std::max(maxmod, std::abs(w));
  }
  long R = static_cast<long>(std::ceil(2.0 * (1.0 + maxmod)));
  std::mt19937_64 rng(mix64(opts.seed ^ 0xb45e001ull));
  for (int attempt = 0; attempt < 200; ++attempt) {
    long k = static_cast<long>(rng() % 1999) - 999;
    QComplex dir = unit_direction(Rational(k, 1024));
    if (rng() & 1) dir = QComplex{Rational(0), Rational(0)} - dir;  // cover the left half plane
    QComplex b = QComplex(Rational(R), Rational(0)) * dir;
    std::complex<double> bd(b.re.to_double(), b.im.to_double());
    if (n == 0) {
      out.basepoint = b;
      return out;
    }
    double mind = 1e300;
    for (size_t i = 0; i < n; ++i) {
      for (size_t j = i + 1; j < n; ++j) mind = std::min(mind, std::abs(z[i] - z[j]));
      mind = std::min(mind, std::abs(bd - z[i]));
    }
    // circle radii shrink across attempts until the tails fit
    double rr = mind / (8.0 * (1.0 + 0.5 * attempt));
    std::vector<Rational> radii(n);
    std::vector<QComplex> centers(n);
    bool geometry_ok = true;
    for (size_t i = 0; i < n; ++i) {
      radii[i] = snap(rr, 36);
      if (radii[i] <= Rational(0)) geometry_ok = false;
      centers[i] = QComplex(snap(z[i].real(), 44), snap(z[i].imag(), 44));
      double snap_err = std::abs(std::complex<double>(centers[i].re.to_double(),
                                                      centers[i].im.to_double()) -
                                 z[i]) +
                        punctures[i].radius.to_double();
      if (snap_err > rr / 8.0) geometry_ok = false;
    }
    if (!geometry_ok) continue;
    // tails must clear every other circle
    bool clear = true;
    for (size_t i = 0; i < n && clear; ++i)
      for (size_t j = 0; j < n && clear; ++j) {
        if (i == j) continue;
        if (seg_point_distance(bd, z[i], z[j]) < 2.5 * radii[j].to_double()) clear = false;
      }
    if (!clear) continue;
    // entry points: exact unit direction from center toward the basepoint
    std::vector<QComplex> entry(n);
    for (size_t i = 0; i < n; ++i) {
      std::complex<double> dir = bd - z[i];
      double theta = std::atan2(dir.imag(), dir.real());
      QComplex u = unit_direction(snap(std::tan(theta / 2.0), 24));
      entry[i] = centers[i] + QComplex(radii[i], Rational(0)) * u;
    }
    // lasso order: viewing angle from the basepoint, ties by modulus
    std::vector<size_t> order(n);
    for (size_t i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](size_t i, size_t j) {
      std::complex<double> wi = z[i] - bd, wj = z[j] - bd;
      double ai = std::atan2(wi.imag(), wi.real()), aj = std::atan2(wj.imag(), wj.real());
      if (std::abs(ai - aj) > 1e-12) return ai < aj;
      return std::abs(wi) < std::abs(wj);
    });
    out.basepoint = b;
    for (size_t idx : order) {
      PathPlan lasso;
      lasso.segments.push_back(PathSegment::line(b, entry[idx]));
      lasso.segments.push_back(PathSegment::full_circle(centers[idx], entry[idx], +1));
      lasso.segments.push_back(PathSegment::line(entry[idx], b));
      out.lassos.push_back(std::move(lasso));
      out.centers.push_back(centers[idx]);
    }
    return out;
  }
  throw Error("build_loops: no admissible basepoint found");
}

// ---------------------------------------------------------------------------
// pipeline core

namespace {

struct PipelineCore {
  std::vector<BraidWord> braids;
  std::vector<SL2Matrix> matrices;
  SL2Matrix product;
  SubgroupDescriptor subgroup;
};

PipelineCore track_all(const BivarPoly& f, const LoopSystem& loops, bool four_strands,
                       const PipelineOptions& opts) {
  TrackOptions topts;
  topts.precision = opts.precision;
  topts.precision_cap = opts.precision_cap;
  topts.step_budget = opts.step_budget;
  PipelineCore core;
  core.braids = braids_of_system(f, loops.lassos, topts, opts.seed);
  for (const auto& w : core.braids) {
    SL2Matrix m = four_strands ? mu4(w) : mu3(w);
    core.product = core.product * m;
    core.matrices.push_back(std::move(m));
  }
  core.subgroup = analyze_subgroup(core.matrices, opts.max_cosets);
  return core;
}

MonodromyReport finish_report(const std::string& label, const RationalFunction& jac_p,
                              const RationalFunction& jac_q, PipelineCore core,
                              const LoopSystem& loops, long puncture_count, long rank,
                              bool exact_infinity_trace) {
  MonodromyReport rep;
  rep.label = label;
  rep.puncture_count = puncture_count;
  rep.basepoint = loops.basepoint;
  rep.braids = std::move(core.braids);
  rep.matrices = std::move(core.matrices);
  rep.subgroup = std::move(core.subgroup);
  rep.lasso_product = core.product;
  JMapData j = j_map(jac_p, jac_q);
  rep.deg_j = j.degree;
  rep.m = j.m;
  rep.rank = rank;
  KodairaPlace inf = classify_infinity(jac_p, jac_q);
  rep.infinity_type = inf.type;
  rep.infinity_n = inf.n;

  auto& B = rep.bounds_checked;
  const auto& G = rep.subgroup;
  if (G.determined) {
    B["sl_index <= 2m"] = G.sl_index <= 2 * rep.m;
    B["psl_index <= m"] = G.psl_index <= rep.m;
    B["sl_index <= 2 deg J"] = G.sl_index <= 2 * rep.deg_j;
    B["sl_index <= 12(r-1)"] = rank >= 2 ? G.sl_index <= schreier_bound(rank) : true;
  } else {
    B["sl_index <= 2m"] = false;
    B["psl_index <= m"] = false;
    B["sl_index <= 2 deg J"] = false;
    B["sl_index <= 12(r-1)"] = false;
  }
  long expected = kodaira_trace(rep.infinity_type);
  long got = 0;
  {
    Integer tr = rep.lasso_product.trace();
    if (tr > 1000 || tr < -1000) got = 1001;  // cannot match any fiber type
    else got = static_cast<long>(tr.get_si());
  }
  bool trace_ok = exact_infinity_trace ? got == expected : std::abs(got) == std::labs(expected);
  // I0 fibers force the exact product, I0* forces the product -I.
  if (rep.infinity_type == KodairaType::I0)
    trace_ok = trace_ok && rep.lasso_product.is_identity();
  if (rep.infinity_type == KodairaType::I0star && exact_infinity_trace)
    trace_ok = trace_ok && rep.lasso_product.is_minus_identity();
  B["infinity_trace"] = trace_ok;
  try {
    SurfaceBound sb = surface_bound(jac_p, jac_q);
    B["sum_e == deg J"] = sb.sum_e == rep.deg_j;
  } catch (const InternalError&) {
    B["sum_e == deg J"] = false;
  }
  rep.all_bounds_hold = true;
  for (const auto& [k, v] : B) rep.all_bounds_hold = rep.all_bounds_hold && v;
  return rep;
}

MonodromyReport monodromy_on(const FamilySpec& fam, const Punctures& punct,
                             const PipelineOptions& opts) {
  JMapData j = j_map(fam.p, fam.q);
  if (j.isotrivial)
    throw IsotrivialFamily("constant J-map (j = " + j.j.str() + "); index bounds do not apply");
  if (punct.roots.empty()) throw InternalError("non-isotrivial family without punctures");
  LoopSystem loops = build_loops(punct.roots, opts);
  PipelineCore core = track_all(fam.cubic(), loops, /*four_strands=*/false, opts);
  KodairaPlace inf = classify_infinity(fam.p, fam.q);
  long degenerate_places = static_cast<long>(punct.roots.size());
  if (inf.type != KodairaType::I0) degenerate_places += 1;
  long rank = degenerate_places - 1;
  return finish_report(fam.label, fam.p, fam.q, std::move(core), loops,
                       static_cast<long>(punct.roots.size()), rank,
                       /*exact_infinity_trace=*/true);
}

}  // namespace

MonodromyReport monodromy_group(const FamilySpec& fam, const PipelineOptions& opts) {
  return monodromy_on(fam, punctures_of(fam, opts), opts);
}

MonodromyReport monodromy_group_with_marks(const FamilySpec& fam, const PipelineOptions& opts,
                                           const std::vector<QComplex>& spurious) {
  Punctures punct = punctures_of(fam, opts);
  for (const auto& s : spurious) {
    Polynomial lin(std::vector<Rational>{-s.re, Rational(1)});
    if (!s.im.is_zero()) {
      // (t - s)(t - conj s): keep the puncture polynomial real
      lin = Polynomial(std::vector<Rational>{s.norm2(), Rational(-2) * s.re, Rational(1)});
    }
    if (Polynomial::gcd(punct.poly, lin).degree() >= 1) continue;
    punct.poly = punct.poly * lin;
    for (const auto& r : isolate_roots(lin, opts.precision, opts.precision_cap))
      punct.roots.push_back(r);
  }
  return monodromy_on(fam, punct, opts);
}

// ---------------------------------------------------------------------------
// twists

FamilySpec quadratic_twist(const FamilySpec& fam, const TwistSpec& tw) {
  if (tw.d.is_zero()) throw ZeroTwist("quadratic twist by zero");
  FamilySpec out;
  out.p = fam.p * tw.d.pow(2);
  out.q = fam.q * tw.d.pow(3);
  out.label = fam.label + "~twist";
  return out;
}

namespace {

Complex eval_ratfunc(const RationalFunction& f, const Complex& t, mpfr_prec_t prec) {
  Complex num(prec), den(prec);
  for (int k = f.num().degree(); k >= 0; --k)
    num = num * t + Complex(Real::of(f.num().coeff(k), prec), Real(prec));
  for (int k = f.den().degree(); k >= 0; --k)
    den = den * t + Complex(Real::of(f.den().coeff(k), prec), Real(prec));
  return num / den;
}

}  // namespace

int chi_d(const TwistSpec& tw, const PathPlan& loop, mpfr_prec_t precision) {
  if (tw.d.is_zero()) throw ZeroTwist("chi_D of the zero function");
  if (tw.d.is_constant()) return +1;
  double max_step = 0.05;
  for (int refinement = 0; refinement < 6; ++refinement) {
    double total = 0;
    bool ok = true;
    for (const auto& seg : loop.segments) {
      double s = 0;
      Complex t0 = seg.eval(Real::of(0.0, precision), precision);
      Complex d0 = eval_ratfunc(tw.d, t0, precision);
      while (s < 1.0 && ok) {
        double h = std::min(max_step, 1.0 - s);
        while (true) {
          Complex t1 = seg.eval(Real::of(s + h, precision), precision);
          Complex d1 = eval_ratfunc(tw.d, t1, precision);
          if (d0.abs().to_double() < 1e-30) throw ZeroOnLoop("chi_D: D vanishes on the loop");
          Complex ratio = d1 / d0;
          double rx = ratio.re().to_double(), ry = ratio.im().to_double();
          if (std::hypot(rx - 1.0, ry) < 0.5) {
            total += std::atan2(ry, rx);
            d0 = d1;
            s += h;
            break;
          }
          h /= 2;
          if (h < 1e-12) {
            ok = false;
            break;
          }
        }
      }
      if (!ok) break;
    }
    if (ok) {
      double winding = total / (2 * M_PI);
      long w = std::lround(winding);
      if (std::abs(winding - static_cast<double>(w)) < 0.01) return (w % 2 == 0) ? +1 : -1;
    }
    max_step /= 4;
  }
  throw ZeroOnLoop("chi_D: winding number did not certify (zero or pole near the loop?)");
}

TwistReport verify_twist_relation(const FamilySpec& fam, const TwistSpec& tw,
                                  const PipelineOptions& opts) {
  if (tw.d.is_zero()) throw ZeroTwist("verify_twist_relation: D = 0");
  FamilySpec twisted = quadratic_twist(fam, tw);
  // joint puncture set: both families plus zeros and poles of D
  Punctures pa = punctures_of(fam, opts);
  Punctures pb = punctures_of(twisted, opts);
  Polynomial joint = (pa.poly * pb.poly * tw.d.num() * tw.d.den()).squarefree();
  Punctures punct;
  punct.poly = joint;
  punct.roots = isolate_roots(joint, opts.precision, opts.precision_cap);

  TwistReport rep;
  rep.base = monodromy_on(fam, punct, opts);
  rep.twisted = monodromy_on(twisted, punct, opts);

  LoopSystem loops = build_loops(punct.roots, opts);
  for (const auto& lasso : loops.lassos) rep.chi.push_back(chi_d(tw, lasso, opts.precision));

  auto [pred, cls] = twist_group(rep.base.matrices, rep.chi, opts.max_cosets);
  rep.predicted = std::move(pred);
  rep.classification = cls;
  const auto& dg = rep.twisted.subgroup;
  rep.predicted_matches_direct = rep.predicted.determined && dg.determined &&
                                 rep.predicted.sl_index == dg.sl_index &&
                                 rep.predicted.psl_index == dg.psl_index &&
                                 rep.predicted.contains_minus_I == dg.contains_minus_I &&
                                 rep.predicted.mod2_image_order == dg.mod2_image_order;
  rep.psl_indices_equal = rep.base.subgroup.psl_index == dg.psl_index;
  long s1 = rep.base.subgroup.sl_index, s2 = dg.sl_index;
  rep.sl_ratio_admissible = s1 == s2 || s1 == 2 * s2 || s2 == 2 * s1;
  return rep;
}

FamilySpec pullback_square(const FamilySpec& fam) {
  Polynomial t2 = Polynomial::monomial(Rational(1), 2);
  FamilySpec out;
  out.p = fam.p.compose(t2);
  out.q = fam.q.compose(t2);
  out.label = fam.label + "~pullback(t^2)";
  return out;
}

// ---------------------------------------------------------------------------
// quartic pencil pipeline

namespace {

// Substitute y -> y0 + t (x - x0) into F(x, y); the result is a polynomial
// in x whose coefficients are polynomials in t.
BivarPoly restrict_to_pencil(const BivarPoly& F, const Rational& x0, const Rational& y0) {
  // y appears in the coefficient slot of F; build L(x, t) = y0 + t x - t x0
  RationalFunction t = RationalFunction::variable();
  BivarPoly L = BivarPoly(RationalFunction(y0) - t * RationalFunction(x0)) +
                BivarPoly::var_x() * BivarPoly(t);
  // Horner in y with BivarPoly arithmetic
  int dy = 0;
  for (int k = 0; k <= F.deg_x(); ++k) dy = std::max(dy, F.coeff(k).num().degree());
  BivarPoly out;
  for (int j = dy; j >= 0; --j) {
    BivarPoly layer;
    for (int k = 0; k <= F.deg_x(); ++k) {
      if (!F.coeff(k).is_polynomial()) throw Error("quartic must have polynomial coefficients");
      const Rational& c = F.coeff(k).num().coeff(j);
      if (!c.is_zero())
        layer = layer + BivarPoly(RationalFunction(c)) * BivarPoly::var_x().pow(k);
    }
    out = out * L + layer;
  }
  return out;
}

Polynomial homogeneous_part(const BivarPoly& F, int total_degree) {
  // F(x, y): returns sum of coefficients of monomials x^k y^(d-k) as a
  // univariate polynomial in x (the form evaluated at y = 1).
  std::vector<Rational> coeffs(total_degree + 1, Rational(0));
  for (int k = 0; k <= F.deg_x() && k <= total_degree; ++k) {
    const Polynomial& cy = F.coeff(k).num();
    if (total_degree - k <= cy.degree()) coeffs[k] = cy.coeff(total_degree - k);
  }
  return Polynomial(std::move(coeffs));
}

void check_quartic_smooth(const BivarPoly& F, const PipelineOptions& opts) {
  int total = 0;
  for (int k = 0; k <= F.deg_x(); ++k) {
    if (!F.coeff(k).is_polynomial()) throw Error("quartic must have polynomial coefficients");
    if (!F.coeff(k).is_zero()) total = std::max(total, k + F.coeff(k).num().degree());
  }
  if (total != 4) throw NonSmoothQuartic("total degree must be 4");
  // affine singularities: common zeros of F, F_x, F_y
  BivarPoly Fx = F.d_dx(), Fy = F.d_dt();
  RationalFunction r1 = resultant_x(F, Fx);
  RationalFunction r2 = resultant_x(F, Fy);
  if (r1.is_zero() || r2.is_zero()) throw NonSmoothQuartic("quartic has a repeated component");
  Polynomial g = Polynomial::gcd(r1.num(), r2.num());
  if (g.degree() >= 1) {
    // candidate singular y-values; confirm numerically
    for (const auto& ir : isolate_roots(g, opts.precision, opts.precision_cap)) {
      CPoly f = CPoly::specialize(F, ir.z, opts.precision);
      CPoly fx = CPoly::specialize(Fx, ir.z, opts.precision);
      CPoly fy = CPoly::specialize(Fy, ir.z, opts.precision);
      Real tiny = Real::pow2(-static_cast<long>(opts.precision) / 3, opts.precision);
      for (const auto& rr : roots_certified(f, opts.precision)) {
        if (fx.eval(rr.z).abs() < tiny && fy.eval(rr.z).abs() < tiny)
          throw NonSmoothQuartic("quartic has an affine singular point");
      }
    }
  }
  // singularities on the line at infinity: F4 with a repeated direction
  // where F3 also vanishes
  Polynomial f4 = homogeneous_part(F, 4);
  Polynomial f3 = homogeneous_part(F, 3);
  Polynomial rep = Polynomial::gcd(f4, f4.derivative());
  if (rep.degree() >= 1 && Polynomial::gcd(rep, f3).degree() >= 1)
    throw NonSmoothQuartic("quartic is singular at infinity");
  if (f4.degree() <= 2) {
    // direction (1:0) is a zero of the quartic form with multiplicity >= 2
    if (f3.degree() < 3) throw NonSmoothQuartic("quartic is singular at infinity");
  }
}

}  // namespace

QuarticReport quartic_pencil_family(const QuarticPencil& pencil, const PipelineOptions& opts) {
  const BivarPoly& F = pencil.quartic;
  check_quartic_smooth(F, opts);
  // base point off the curve
  RationalFunction at_base = RationalFunction(0);
  for (int k = F.deg_x(); k >= 0; --k)
    at_base = at_base * RationalFunction(pencil.x0) + F.coeff(k);
  {
    Polynomial evaly(std::vector<Rational>{pencil.y0});
    Rational v = at_base.num().eval(pencil.y0) / at_base.den().eval(pencil.y0);
    if (v.is_zero()) throw NonGenericPencil("pencil base point lies on the quartic");
  }

  BivarPoly G = restrict_to_pencil(F, pencil.x0, pencil.y0);
  if (G.deg_x() != 4) throw NonGenericPencil("pencil lines meet the quartic in fewer points");
  Polynomial lead = G.lc().num();

  RationalFunction res = resultant_x(G, G.d_dx());
  if (res.is_zero()) throw NonGenericPencil("degenerate pencil resultant");
  Polynomial tangency = res.num();
  if (lead.degree() >= 1) {
    while (true) {
      Polynomial g = Polynomial::gcd(tangency, lead);
      if (g.degree() < 1) break;
      tangency = Polynomial::exact_div(tangency, g);
    }
  }
  tangency = tangency.squarefree();
  Polynomial aux = lead.squarefree();
  if (Polynomial::gcd(tangency, aux).degree() >= 1)
    throw NonGenericPencil("tangency parameter collides with a chart degeneration");
  if (tangency.degree() != 12)
    throw NonGenericPencil("expected 12 tangent lines through the base point, found " +
                           std::to_string(tangency.degree()));

  QuarticReport rep;
  rep.tangency_count = tangency.degree();
  rep.auxiliary_count = aux.degree();

  Punctures punct;
  punct.poly = (tangency * aux).squarefree();
  punct.roots = isolate_roots(punct.poly, opts.precision, opts.precision_cap);
  LoopSystem loops = build_loops(punct.roots, opts);
  PipelineCore core = track_all(G, loops, /*four_strands=*/true, opts);

  // Jacobian of the 4-point double cover via the binary quartic invariants
  const RationalFunction a = G.coeff(4), b = G.coeff(3), c = G.coeff(2), d = G.coeff(1),
                         e = G.coeff(0);
  RationalFunction I = a * e * RationalFunction(Rational(12)) -
                       b * d * RationalFunction(Rational(3)) + c * c;
  RationalFunction J = a * c * e * RationalFunction(Rational(72)) +
                       b * c * d * RationalFunction(Rational(9)) -
                       a * d * d * RationalFunction(Rational(27)) -
                       b * b * e * RationalFunction(Rational(27)) -
                       c.pow(3) * RationalFunction(Rational(2));
  rep.jacobian_p = I * RationalFunction(Rational(-27));
  rep.jacobian_q = J * RationalFunction(Rational(-27));

  rep.mono = finish_report("quartic:" + std::to_string(rep.tangency_count) + "-tangents",
                           rep.jacobian_p, rep.jacobian_q, std::move(core), loops,
                           rep.tangency_count, /*rank=*/rep.tangency_count - 1,
                           /*exact_infinity_trace=*/false);

  // two-route j at the basepoint fiber: cross-ratio vs Weierstrass reduction
  {
    mpfr_prec_t prec = opts.precision;
    Complex t0 = loops.basepoint.to_complex(prec);
    CPoly fiber = CPoly::specialize(G, t0, prec);
    auto roots = roots_certified(fiber, prec);
    if (roots.size() == 4) {
      const Complex &A = roots[0].z, &B2 = roots[1].z, &C = roots[2].z, &D = roots[3].z;
      Complex lambda = ((C - A) / (C - B2)) / ((D - A) / (D - B2));
      Complex one(Real::of(1L, prec), Real(prec));
      Complex num = (lambda * lambda - lambda + one);
      Complex jc = num * num * num * Complex(Real::of(256L, prec), Real(prec)) /
                   (lambda * lambda * (one - lambda) * (one - lambda));
      JMapData jm = j_map(rep.jacobian_p, rep.jacobian_q);
      Complex jw = eval_ratfunc(jm.j, t0, prec);
      Real err = (jc - jw).abs();
      Real tol = Real::pow2(-static_cast<long>(prec) / 2, prec) *
                 (Real::of(1L, prec) + jw.abs());
      rep.j_cross_check = err <= tol;
    }
  }
  return rep;
}

}  // namespace mono
