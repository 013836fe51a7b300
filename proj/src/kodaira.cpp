#include "mono/kodaira.hpp"

#include <algorithm>

#include "mono/errors.hpp"
#include "mono/weierstrass.hpp"

namespace mono {

std::string kodaira_type_name(KodairaType t, int n) {
  switch (t) {
    case KodairaType::I0: return "I0";
    case KodairaType::In: return "I" + std::to_string(n);
    case KodairaType::II: return "II";
    case KodairaType::III: return "III";
    case KodairaType::IV: return "IV";
    case KodairaType::I0star: return "I0*";
    case KodairaType::Instar: return "I" + std::to_string(n) + "*";
    case KodairaType::IVstar: return "IV*";
    case KodairaType::IIIstar: return "III*";
    case KodairaType::IIstar: return "II*";
  }
  return "?";
}

long kodaira_trace(KodairaType t) {
  switch (t) {
    case KodairaType::I0: return 2;
    case KodairaType::In: return 2;
    case KodairaType::II: return 1;
    case KodairaType::III: return 0;
    case KodairaType::IV: return -1;
    case KodairaType::I0star: return -2;
    case KodairaType::Instar: return -2;
    case KodairaType::IVstar: return -1;
    case KodairaType::IIIstar: return 0;
    case KodairaType::IIstar: return 1;
  }
  return 0;
}

namespace {

long floordiv(long a, long b) {
  long q = a / b, r = a % b;
  return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}

}  // namespace

KodairaPlace classify_valuations(int ord_p, int ord_q, int ord_disc) {
  // Minimalize: (p, q, disc) -> (p u^4, q u^6, disc u^12) with u the
  // uniformizer power making the model minimal and integral.
  long m = -std::min(floordiv(ord_p, 4), floordiv(ord_q, 6));
  // ord_p = +infinity when p = 0: callers encode that as a large value.
  long A = ord_p + 4 * m, B = ord_q + 6 * m, D = ord_disc + 12 * m;
  KodairaPlace out;
  out.ord_c4 = static_cast<int>(A);
  out.ord_c6 = static_cast<int>(B);
  out.ord_disc = static_cast<int>(D);
  if (A >= 4 && B >= 6 && D >= 12) throw InternalError("classify: model not minimal");
  if (D < 0 || A < 0 || B < 0) throw UnclassifiablePlace("negative valuation after minimalization");
  auto set = [&out](KodairaType t, int n) {
    out.type = t;
    out.n = n;
    out.e_value = (t == KodairaType::In || t == KodairaType::Instar) ? n : 0;
  };
  if (D == 0)
    set(KodairaType::I0, 0);
  else if (A == 0 && B == 0)
    set(KodairaType::In, static_cast<int>(D));
  else if (A >= 1 && B == 1 && D == 2)
    set(KodairaType::II, 0);
  else if (A == 1 && B >= 2 && D == 3)
    set(KodairaType::III, 0);
  else if (A >= 2 && B == 2 && D == 4)
    set(KodairaType::IV, 0);
  else if (A >= 2 && B >= 3 && D == 6)
    set(KodairaType::I0star, 0);
  else if (A == 2 && B == 3 && D >= 7)
    set(KodairaType::Instar, static_cast<int>(D - 6));
  else if (A >= 3 && B == 4 && D == 8)
    set(KodairaType::IVstar, 0);
  else if (A == 3 && B >= 5 && D == 9)
    set(KodairaType::IIIstar, 0);
  else if (A >= 4 && B == 5 && D == 10)
    set(KodairaType::IIstar, 0);
  else
    throw UnclassifiablePlace("valuation triple (" + std::to_string(A) + "," + std::to_string(B) +
                              "," + std::to_string(D) + ") misses the table");
  return out;
}

namespace {

constexpr int kInfiniteOrd = 1 << 20;  // stands in for ord(0) = +infinity

KodairaPlace classify_local(const RationalFunction& p, const RationalFunction& q,
                            const Polynomial& h) {
  RationalFunction disc = discriminant_cubic(p, q);
  if (disc.is_zero()) throw DegenerateFamily("discriminant vanishes identically");
  int a = p.is_zero() ? kInfiniteOrd : p.ord_at(h);
  int b = q.is_zero() ? kInfiniteOrd : q.ord_at(h);
  int d = disc.ord_at(h);
  KodairaPlace out = classify_valuations(a, b, d);
  out.place_poly = h;
  out.count = h.degree();
  return out;
}

}  // namespace

KodairaPlace classify_at(const RationalFunction& p, const RationalFunction& q, const Rational& a) {
  Polynomial h(std::vector<Rational>{-a, Rational(1)});
  return classify_local(p, q, h);
}

KodairaPlace classify_infinity(const RationalFunction& p, const RationalFunction& q) {
  Polynomial s = Polynomial::variable();
  KodairaPlace out = classify_local(p.at_infinity_chart(), q.at_infinity_chart(), s);
  out.at_infinity = true;
  out.place_poly = Polynomial();
  out.count = 1;
  return out;
}

namespace {

// Pairwise-coprime squarefree basis refinement: split every element against
// h until everything is coprime.
void insert_coprime(std::vector<Polynomial>* basis, Polynomial h) {
  std::vector<Polynomial> work{h.monic()};
  while (!work.empty()) {
    Polynomial cur = work.back();
    work.pop_back();
    if (cur.degree() < 1) continue;
    bool split = false;
    for (size_t i = 0; i < basis->size(); ++i) {
      Polynomial g = Polynomial::gcd(cur, (*basis)[i]);
      if (g.degree() < 1) continue;
      if (g.degree() < (*basis)[i].degree()) {
        Polynomial rest = Polynomial::exact_div((*basis)[i], g).monic();
        (*basis)[i] = g;
        basis->push_back(rest);
      }
      Polynomial remainder = Polynomial::exact_div(cur, g).monic();
      if (remainder.degree() >= 1) work.push_back(remainder);
      split = true;
      break;
    }
    if (!split) basis->push_back(cur);
  }
}

// Split basis elements so that every element has uniform multiplicity in f.
void refine_by_multiplicity(std::vector<Polynomial>* basis, const Polynomial& f) {
  if (f.degree() < 1) return;
  auto layers = f.squarefree_decomposition();
  std::vector<Polynomial> next;
  for (const auto& h : *basis) {
    Polynomial rest = h;
    for (const auto& layer : layers) {
      if (rest.degree() < 1) break;
      Polynomial g = Polynomial::gcd(rest, layer);
      if (g.degree() >= 1) {
        next.push_back(g);
        rest = Polynomial::exact_div(rest, g).monic();
      }
    }
    if (rest.degree() >= 1) next.push_back(rest);
  }
  *basis = std::move(next);
}

}  // namespace

std::vector<KodairaPlace> classify_family(const RationalFunction& p, const RationalFunction& q) {
  RationalFunction disc = discriminant_cubic(p, q);
  if (disc.is_zero()) throw DegenerateFamily("discriminant vanishes identically");
  std::vector<Polynomial> basis;
  insert_coprime(&basis, disc.num().squarefree());
  if (!p.is_zero()) insert_coprime(&basis, p.den().squarefree());
  if (!q.is_zero()) insert_coprime(&basis, q.den().squarefree());
  std::vector<Polynomial> funcs;
  for (const RationalFunction* f :
       std::initializer_list<const RationalFunction*>{&p, &q, &disc}) {
    if (f->is_zero()) continue;
    funcs.push_back(f->num());
    funcs.push_back(f->den());
  }
  for (const auto& f : funcs) refine_by_multiplicity(&basis, f);
  std::sort(basis.begin(), basis.end(), [](const Polynomial& x, const Polynomial& y) {
    if (x.degree() != y.degree()) return x.degree() < y.degree();
    for (int k = x.degree(); k >= 0; --k) {
      if (x.coeff(k) != y.coeff(k)) return x.coeff(k) < y.coeff(k);
    }
    return false;
  });
  std::vector<KodairaPlace> out;
  for (const auto& h : basis) {
    KodairaPlace pl = classify_local(p, q, h);
    if (pl.type == KodairaType::I0) continue;  // spurious cluster, fiber smooth
    out.push_back(pl);
  }
  out.push_back(classify_infinity(p, q));
  if (out.back().type == KodairaType::I0) out.pop_back();
  return out;
}

SurfaceBound surface_bound(const RationalFunction& p, const RationalFunction& q) {
  JMapData j = j_map(p, q);
  if (j.isotrivial) throw IsotrivialFamily("surface_bound: constant J-map");
  SurfaceBound sb;
  sb.places = classify_family(p, q);
  for (const auto& pl : sb.places) sb.sum_e += pl.e_value * pl.count;
  sb.bound = 2 * sb.sum_e;
  sb.deg_j = j.degree;
  if (sb.sum_e != sb.deg_j)
    throw InternalError("surface_bound: sum of e differs from deg J (" +
                        std::to_string(sb.sum_e) + " vs " + std::to_string(sb.deg_j) + ")");
  return sb;
}

}  // namespace mono
