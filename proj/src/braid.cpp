#include "mono/braid.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "mono/errors.hpp"

namespace mono {

namespace {

// angle = 2*pi*q*s for rational q, Real s
Complex circle_point(const QComplex& center, const QComplex& start, const Rational& turns,
                     const Real& s, mpfr_prec_t prec) {
  Real two_q = Real::of(turns * Rational(2), prec);
  Real angle(prec);
  mpfr_const_pi(angle.raw(), MPFR_RNDN);
  angle = angle * two_q * s;
  Real c(prec), sn(prec);
  mpfr_sin_cos(sn.raw(), c.raw(), angle.raw(), MPFR_RNDN);
  Complex rot(c, sn);
  Complex z0 = (start - center).to_complex(prec);
  return center.to_complex(prec) + z0 * rot;
}

}  // namespace

PathSegment PathSegment::line(QComplex from, QComplex to) {
  PathSegment s;
  s.kind = Kind::Line;
  s.a = std::move(from);
  s.b = std::move(to);
  return s;
}

PathSegment PathSegment::full_circle(QComplex center, QComplex start, int orientation) {
  PathSegment s;
  s.kind = Kind::Arc;
  s.a = start;
  s.b = start;
  s.center = std::move(center);
  s.turns = Rational(orientation);
  return s;
}

Complex PathSegment::eval(const Real& s, mpfr_prec_t prec) const {
  if (mpfr_cmp_ui(s.raw(), 1) == 0) {
    // segment endpoints are exact; closed loops must land exactly
    if (kind == Kind::Line) return b.to_complex(prec);
    if (turns == Rational(turns.num())) return a.to_complex(prec);
  }
  if (kind == Kind::Line) {
    Complex za = a.to_complex(prec), zb = b.to_complex(prec);
    return za + (zb - za) * Complex(s, Real(prec));
  }
  return circle_point(center, a, turns, s, prec);
}

Complex PathSegment::velocity(const Real& s, mpfr_prec_t prec) const {
  if (kind == Kind::Line) return (b - a).to_complex(prec);
  // d/ds [c + (a-c) e^{2 pi i q s}] = (z(s) - c) * 2 pi i q
  Complex z = circle_point(center, a, turns, s, prec);
  Real two_pi_q(prec);
  mpfr_const_pi(two_pi_q.raw(), MPFR_RNDN);
  two_pi_q = two_pi_q * Real::of(turns * Rational(2), prec);
  return (z - center.to_complex(prec)) * Complex(Real(prec), two_pi_q);
}

bool PathPlan::closed() const {
  if (segments.empty()) return false;
  for (size_t i = 0; i + 1 < segments.size(); ++i) {
    const auto& cur = segments[i];
    QComplex end = cur.kind == PathSegment::Kind::Line ? cur.b : cur.a;
    if (cur.kind == PathSegment::Kind::Arc && !(cur.turns == Rational(cur.turns.num())))
      return false;  // partial arcs not used for loops
    if (!(end == segments[i + 1].a)) return false;
  }
  const auto& last = segments.back();
  QComplex end = last.kind == PathSegment::Kind::Line ? last.b : last.a;
  return end == segments.front().a;
}

namespace {

struct TrackState {
  mpfr_prec_t prec;
  Complex t;
  std::vector<Complex> z;
  std::vector<Real> rad;
};

Real min_separation(const std::vector<Complex>& z, mpfr_prec_t prec) {
  Real best(prec);
  bool first = true;
  for (size_t i = 0; i < z.size(); ++i)
    for (size_t j = i + 1; j < z.size(); ++j) {
      Real d = (z[i] - z[j]).abs();
      if (first || d < best) {
        best = d;
        first = false;
      }
    }
  return first ? Real::of(1L, prec) : best;
}

// Newton-correct all roots against p; returns false if any root moved more
// than limit or an iteration failed to settle.
bool correct_roots(const CPoly& p, const CPoly& dp, const std::vector<Complex>& pred,
                   const std::vector<Complex>& base, const Real& limit, mpfr_prec_t prec,
                   std::vector<Complex>* out) {
  Real tol = Real::pow2(-static_cast<long>(prec) + 10, prec);
  out->clear();
  for (size_t i = 0; i < pred.size(); ++i) {
    Complex zi = pred[i];
    bool settled = false;
    for (int it = 0; it < 60; ++it) {
      Complex f = p.eval(zi);
      Complex d = dp.eval(zi);
      if (d.is_zero()) return false;
      Complex delta = f / d;
      zi = zi - delta;
      if (delta.abs() <= tol * (Real::of(1L, prec) + zi.abs())) {
        settled = true;
        break;
      }
    }
    if (!settled) return false;
    if (!((zi - base[i]).abs() < limit)) return false;
    out->push_back(zi);
  }
  return true;
}

bool certify_all(const CPoly& p, const std::vector<Complex>& z, mpfr_prec_t prec,
                 std::vector<Real>* rad) {
  rad->clear();
  for (const auto& zi : z) {
    Real r = certify_disk(p, zi);
    if (r.sign() < 0) return false;
    rad->push_back(r);
  }
  for (size_t i = 0; i < z.size(); ++i)
    for (size_t j = i + 1; j < z.size(); ++j) {
      Real sep = (z[i] - z[j]).abs();
      if (!(sep > ((*rad)[i] + (*rad)[j]) * Real::of(2L, prec))) return false;
    }
  return true;
}

}  // namespace

TrackedStrands track_roots(const BivarPoly& f, const PathPlan& path, const TrackOptions& opts) {
  if (path.segments.empty()) throw Error("track_roots: empty path");
  const int n = f.deg_x();
  if (n < 2) throw Error("track_roots: need at least two strands");
  BivarPoly ft = f.d_dt();

  mpfr_prec_t prec = opts.precision;
  TrackedStrands out;
  out.n = n;
  out.precision = prec;

  // initial roots, ordered lexicographically for reproducibility
  TrackState st{prec, path.segments.front().eval(Real(prec), prec), {}, {}};
  {
    CPoly p0 = CPoly::specialize(f, st.t, prec);
    if (p0.degree() != n) throw DiscriminantHit("leading coefficient vanishes at path start");
    auto roots = roots_certified(p0, prec);
    std::sort(roots.begin(), roots.end(), [](const CertifiedRoot& x, const CertifiedRoot& y) {
      if (x.z.re() < y.z.re()) return true;
      if (y.z.re() < x.z.re()) return false;
      return x.z.im() < y.z.im();
    });
    for (auto& r : roots) {
      st.z.push_back(r.z);
      st.rad.push_back(r.radius);
    }
  }
  out.samples.push_back({st.z, st.rad});

  long budget = opts.step_budget;
  const std::vector<Complex> initial = st.z;

  for (const auto& seg : path.segments) {
    Real s(prec);
    double h = opts.max_step;
    int streak = 0;
    while (true) {
      bool last = false;
      double s_d = s.to_double();
      if (s_d + h >= 1.0) {
        h = 1.0 - s_d;
        last = true;
      }
      Real s_new = s + Real::of(h, prec);
      if (last) s_new = Real::of(1L, prec);
      Complex t_new = seg.eval(s_new, prec);
      Complex dt = t_new - st.t;

      Real sep = min_separation(st.z, prec);
      Real limit = sep * Real::of(Rational(1, 4), prec);

      // Euler predictor using dz/dt = -f_t / f_x
      CPoly p_cur = CPoly::specialize(f, st.t, prec);
      CPoly dp_cur = p_cur.derivative();
      CPoly pt_cur = CPoly::specialize(ft, st.t, prec);
      std::vector<Complex> pred;
      bool pred_ok = true;
      Real worst_move(prec);
      for (const auto& zi : st.z) {
        Complex fx = dp_cur.eval(zi);
        if (fx.is_zero()) {
          pred_ok = false;
          break;
        }
        Complex dz = -(pt_cur.eval(zi) / fx) * dt;
        worst_move = std::max(worst_move, dz.abs());
        pred.push_back(zi + dz);
      }

      bool accepted = false;
      if (pred_ok && worst_move < limit) {
        CPoly p_new = CPoly::specialize(f, t_new, prec);
        if (p_new.degree() == n) {
          CPoly dp_new = p_new.derivative();
          std::vector<Complex> z_new;
          if (correct_roots(p_new, dp_new, pred, st.z, limit, prec, &z_new)) {
            std::vector<Real> rad_new;
            if (certify_all(p_new, z_new, prec, &rad_new)) {
              st.t = t_new;
              st.z = std::move(z_new);
              st.rad = std::move(rad_new);
              s = s_new;
              out.samples.push_back({st.z, st.rad});
              accepted = true;
            }
          }
        }
      }

      if (--budget <= 0) throw BudgetExceeded("track_roots: step budget exhausted");
      if (accepted) {
        if (last) break;
        if (++streak >= 2) {
          h = std::min(h * 1.5, opts.max_step);
          streak = 0;
        }
        continue;
      }
      streak = 0;
      h /= 2;
      if (h < 1e-14) {
        if (prec < opts.precision_cap) {
          prec = std::min<mpfr_prec_t>(opts.precision_cap, prec * 2);
          st.prec = prec;
          // re-polish the current state at the higher precision
          CPoly p_hi = CPoly::specialize(f, st.t, prec);
          CPoly dp_hi = p_hi.derivative();
          for (auto& zi : st.z) {
            Complex lifted(Real(prec) + zi.re(), Real(prec) + zi.im());
            zi = newton_polish(p_hi, dp_hi, lifted, 12);
          }
          std::vector<Real> rad_hi;
          if (!certify_all(p_hi, st.z, prec, &rad_hi))
            throw DiscriminantHit("track_roots: cannot certify roots near path");
          st.rad = std::move(rad_hi);
          h = opts.max_step / 64.0;
        } else {
          throw DiscriminantHit("track_roots: step size collapsed (path too close to a puncture?)");
        }
      }
    }
  }
  out.precision = prec;

  // endpoint matching for closed loops: the loop is exactly closed, so the
  // final fiber equals the initial one and roots match well within the
  // initial separation
  if (path.closed()) {
    Real tol = min_separation(initial, prec) * Real::of(Rational(1, 4), prec);
    out.end_match.assign(n, -1);
    std::vector<char> used(n, 0);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (used[j]) continue;
        if ((st.z[i] - initial[j]).abs() < tol) {
          out.end_match[i] = j;
          used[j] = 1;
          break;
        }
      }
      if (out.end_match[i] < 0)
        throw InternalError("track_roots: endpoint matching failed on a closed loop");
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// braid word algebra

BraidWord BraidWord::reduced() const {
  BraidWord r;
  r.strands = strands;
  for (const auto& l : letters) {
    if (!r.letters.empty() && r.letters.back().first == l.first &&
        r.letters.back().second == -l.second)
      r.letters.pop_back();
    else
      r.letters.push_back(l);
  }
  return r;
}

BraidWord BraidWord::inverse() const {
  BraidWord r;
  r.strands = strands;
  for (auto it = letters.rbegin(); it != letters.rend(); ++it)
    r.letters.emplace_back(it->first, -it->second);
  return r;
}

BraidWord operator*(const BraidWord& u, const BraidWord& v) {
  if (u.strands != v.strands) throw WrongStrandCount("braid concatenation strand mismatch");
  BraidWord r = u;
  r.letters.insert(r.letters.end(), v.letters.begin(), v.letters.end());
  return r;
}

std::vector<int> permutation_of(const BraidWord& w) {
  std::vector<int> cur(w.strands);
  for (int i = 0; i < w.strands; ++i) cur[i] = i;
  // cur[p] = strand currently at position p; letter k swaps positions k-1, k
  for (const auto& l : w.letters) std::swap(cur[l.first - 1], cur[l.first]);
  // one-line permutation: start position -> end position
  std::vector<int> perm(w.strands);
  for (int p = 0; p < w.strands; ++p) perm[cur[p]] = p;
  return perm;
}

namespace {

SL2Matrix braid_image(const BraidWord& w, const std::vector<SL2Matrix>& images) {
  SL2Matrix m;
  for (const auto& l : w.letters) {
    const SL2Matrix& g = images[l.first - 1];
    m = m * (l.second > 0 ? g : g.inverse());
  }
  return m;
}

}  // namespace

SL2Matrix mu3(const BraidWord& w) {
  if (w.strands != 3) throw WrongStrandCount("mu3 needs 3 strands");
  static const SL2Matrix A(1, 0, -1, 1), B(1, 1, 0, 1);
  return braid_image(w, {A, B});
}

SL2Matrix mu4(const BraidWord& w) {
  if (w.strands != 4) throw WrongStrandCount("mu4 needs 4 strands");
  static const SL2Matrix A(1, 0, -1, 1), B(1, 1, 0, 1);
  return braid_image(w, {A, B, A});
}

// ---------------------------------------------------------------------------
// braid extraction

namespace {

struct Event {
  size_t step;
  double s;
  int i, j;
  int sign;
};

uint64_t mix(uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

bool try_extract(const TrackedStrands& strands, const QComplex& dir, BraidWord* out) {
  const int n = strands.n;
  const size_t m = strands.samples.size();
  // projections in the rotated frame w = conj(dir) * z
  double ux = dir.re.to_double(), uy = dir.im.to_double();
  std::vector<std::vector<double>> proj(m, std::vector<double>(n));
  std::vector<std::vector<double>> trans(m, std::vector<double>(n));
  double scale = 1.0;
  for (size_t k = 0; k < m; ++k)
    for (int i = 0; i < n; ++i) {
      double x = strands.samples[k].z[i].re().to_double();
      double y = strands.samples[k].z[i].im().to_double();
      proj[k][i] = ux * x + uy * y;
      trans[k][i] = -uy * x + ux * y;
      scale = std::max({scale, std::abs(x), std::abs(y)});
    }
  const double eps = 1e-9 * scale;

  // initial order
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) { return proj[0][a] < proj[0][b]; });
  for (int p = 0; p + 1 < n; ++p)
    if (proj[0][order[p + 1]] - proj[0][order[p]] < eps) return false;

  std::vector<Event> events;
  for (size_t k = 0; k + 1 < m; ++k) {
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        double d0 = proj[k][i] - proj[k][j];
        double d1 = proj[k + 1][i] - proj[k + 1][j];
        if (std::abs(d0) < eps && std::abs(d1) < eps) return false;
        if ((d0 < 0) == (d1 < 0)) continue;
        if (std::abs(d0) < eps || std::abs(d1) < eps) return false;
        double s = d0 / (d0 - d1);
        double ti = trans[k][i] + s * (trans[k + 1][i] - trans[k][i]);
        double tj = trans[k][j] + s * (trans[k + 1][j] - trans[k][j]);
        if (std::abs(ti - tj) < eps) return false;
        Event e;
        e.step = k;
        e.s = s;
        e.i = i;
        e.j = j;
        e.sign = ti < tj ? +1 : -1;  // filled below with position info
        events.push_back(e);
      }
  }
  std::sort(events.begin(), events.end(), [](const Event& a, const Event& b) {
    if (a.step != b.step) return a.step < b.step;
    if (a.s != b.s) return a.s < b.s;
    return std::tie(a.i, a.j) < std::tie(b.i, b.j);
  });
  // reject near-simultaneous events sharing a strand
  for (size_t e = 0; e + 1 < events.size(); ++e) {
    const auto& a = events[e];
    const auto& b = events[e + 1];
    if (a.step == b.step && std::abs(a.s - b.s) < 1e-7 &&
        (a.i == b.i || a.i == b.j || a.j == b.i || a.j == b.j))
      return false;
  }

  std::vector<int> pos(n);
  for (int p = 0; p < n; ++p) pos[order[p]] = p;
  BraidWord w;
  w.strands = n;
  for (const auto& e : events) {
    int pi = pos[e.i], pj = pos[e.j];
    if (std::abs(pi - pj) != 1) return false;  // overlapping crossings; retry
    int left = std::min(pi, pj);
    int left_strand = order[left];
    int right_strand = order[left + 1];
    // crossing sign: +1 when the left strand passes on the lower side
    // (calibrated so that x^2 - t around a ccw circle reads sigma_1)
    double s = e.s;
    size_t k = e.step;
    double tl = trans[k][left_strand] + s * (trans[k + 1][left_strand] - trans[k][left_strand]);
    double tr = trans[k][right_strand] + s * (trans[k + 1][right_strand] - trans[k][right_strand]);
    int sign = tl < tr ? +1 : -1;
    w.letters.emplace_back(left + 1, sign);
    std::swap(order[left], order[left + 1]);
    pos[order[left]] = left;
    pos[order[left + 1]] = left + 1;
  }

  // consistency: the word's permutation must match the endpoint matching
  if (!strands.end_match.empty()) {
    std::vector<int> perm = permutation_of(w);
    std::vector<int> pos0(n);
    {
      std::vector<int> ord0(n);
      for (int i = 0; i < n; ++i) ord0[i] = i;
      std::sort(ord0.begin(), ord0.end(),
                [&](int a, int b) { return proj[0][a] < proj[0][b]; });
      for (int p = 0; p < n; ++p) pos0[ord0[p]] = p;
    }
    for (int i = 0; i < n; ++i)
      if (perm[pos0[i]] != pos0[strands.end_match[i]]) return false;
  }
  *out = w;
  return true;
}

}  // namespace

QComplex extraction_direction(uint64_t seed, int attempt) {
  uint64_t h = mix(seed + 0x517cc1b727220a95ull * static_cast<uint64_t>(attempt));
  long num = static_cast<long>(h % 2001) - 1000;  // tan(theta/2) in [-1, 1]
  return unit_direction(Rational(num, 1001));
}

bool try_extract_braid(const TrackedStrands& strands, const QComplex& direction, BraidWord* out) {
  return try_extract(strands, direction, out);
}

BraidWord extract_braid(const TrackedStrands& strands, uint64_t seed) {
  for (int attempt = 0; attempt < 16; ++attempt) {
    BraidWord w;
    if (try_extract(strands, extraction_direction(seed, attempt), &w)) return w;
  }
  throw NonGenericProjection("extract_braid: no generic projection found");
}

bool braid_data_agree(const BraidWord& a, const BraidWord& b) {
  if (permutation_of(a) != permutation_of(b)) return false;
  if (a.strands == 3) return mu3(a) == mu3(b);
  if (a.strands == 4) return mu4(a) == mu4(b);
  return true;
}

std::vector<BraidWord> braids_of_system(const BivarPoly& f, const std::vector<PathPlan>& loops,
                                        const TrackOptions& opts, uint64_t seed) {
  // A crossing pair missed inside one step flips nothing visible in the
  // permutation, so every extraction is validated against a step-halved
  // re-track in the same projection frame before it is trusted.
  TrackOptions o = opts;
  const size_t n = loops.size();
  for (int round = 0; round < 4; ++round) {
    TrackOptions fine = o;
    fine.max_step = o.max_step / 2;
    std::vector<TrackedStrands> coarse_s, fine_s;
    for (size_t i = 0; i < n; ++i) {
      coarse_s.push_back(track_roots(f, loops[i], o));
      fine_s.push_back(track_roots(f, loops[i], fine));
    }
    for (int attempt = 0; attempt < 24; ++attempt) {
      QComplex dir = extraction_direction(seed, attempt);
      std::vector<BraidWord> words(n);
      bool generic = true;
      bool stable = true;
      for (size_t i = 0; i < n && generic; ++i) {
        BraidWord w1, w2;
        if (!try_extract_braid(coarse_s[i], dir, &w1) ||
            !try_extract_braid(fine_s[i], dir, &w2)) {
          generic = false;
          break;
        }
        if (!braid_data_agree(w1, w2)) {
          stable = false;
          break;
        }
        words[i] = std::move(w2);
      }
      if (generic && stable) return words;
      if (!stable) break;  // refine the steps
    }
    o.max_step /= 4;
  }
  throw NonGenericProjection("braids_of_system: no stable common projection frame");
}

BraidResult braid_along(const BivarPoly& f, const PathPlan& path, const TrackOptions& opts,
                        uint64_t seed) {
  TrackOptions o = opts;
  for (int round = 0; round < 4; ++round) {
    TrackOptions fine = o;
    fine.max_step = o.max_step / 2;
    TrackedStrands s1 = track_roots(f, path, o);
    TrackedStrands s2 = track_roots(f, path, fine);
    for (int attempt = 0; attempt < 16; ++attempt) {
      QComplex dir = extraction_direction(seed, attempt);
      BraidWord w1, w2;
      if (!try_extract_braid(s1, dir, &w1)) continue;
      if (!try_extract_braid(s2, dir, &w2)) continue;
      if (braid_data_agree(w1, w2)) return {std::move(w2), std::move(s2)};
      break;  // stable disagreement: refine the steps
    }
    o.max_step /= 4;
  }
  throw NonGenericProjection("braid_along: extraction did not stabilize under step halving");
}

}  // namespace mono
