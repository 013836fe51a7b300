#include "mono/poly.hpp"

#include <algorithm>
#include <sstream>

namespace mono {

namespace {
const Rational kZero(0);
}

void Polynomial::normalize() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Polynomial Polynomial::monomial(const Rational& c, int deg) {
  std::vector<Rational> v(deg + 1, Rational(0));
  v[deg] = c;
  return Polynomial(std::move(v));
}

const Rational& Polynomial::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return kZero;
  return c_[k];
}

const Rational& Polynomial::lc() const {
  if (c_.empty()) return kZero;
  return c_.back();
}

Polynomial Polynomial::operator-() const {
  std::vector<Rational> v;
  v.reserve(c_.size());
  for (const auto& x : c_) v.push_back(-x);
  return Polynomial(std::move(v));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> v(std::max(a.c_.size(), b.c_.size()), Rational(0));
  for (size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
  for (size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
  return Polynomial(std::move(v));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial();
  std::vector<Rational> v(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  return Polynomial(std::move(v));
}

Polynomial Polynomial::operator*(const Rational& s) const {
  std::vector<Rational> v;
  v.reserve(c_.size());
  for (const auto& x : c_) v.push_back(x * s);
  return Polynomial(std::move(v));
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial r(Rational(1)), base = *this;
  while (e) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

Polynomial Polynomial::derivative() const {
  if (c_.size() <= 1) return Polynomial();
  std::vector<Rational> v;
  v.reserve(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) v.push_back(c_[i] * Rational(static_cast<long>(i)));
  return Polynomial(std::move(v));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return *this * (Rational(1) / lc());
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw Error("Polynomial: division by zero polynomial");
  Polynomial r = a;
  std::vector<Rational> q(std::max(0, a.degree() - b.degree() + 1), Rational(0));
  while (!r.is_zero() && r.degree() >= b.degree()) {
    Rational f = r.lc() / b.lc();
    int shift = r.degree() - b.degree();
    q[shift] = f;
    r = r - Polynomial::monomial(f, shift) * b;
  }
  return {Polynomial(std::move(q)), r};
}

Polynomial Polynomial::exact_div(const Polynomial& a, const Polynomial& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw InternalError("Polynomial: inexact division");
  return q;
}

Polynomial Polynomial::gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = a, y = b;
  while (!y.is_zero()) {
    auto [q, r] = divmod(x, y);
    (void)q;
    x = y;
    y = r.is_zero() ? r : r.monic();  // keep coefficients small
  }
  return x.is_zero() ? x : x.monic();
}

Polynomial Polynomial::squarefree() const {
  if (degree() <= 0) return is_zero() ? *this : Polynomial(Rational(1));
  return exact_div(monic(), gcd(*this, derivative())).monic();
}

std::vector<Polynomial> Polynomial::squarefree_decomposition() const {
  // Yun's algorithm (characteristic 0).
  std::vector<Polynomial> out;
  if (degree() <= 0) return out;
  Polynomial f = monic();
  Polynomial fp = f.derivative();
  Polynomial a = gcd(f, fp);
  Polynomial b = exact_div(f, a);
  Polynomial c = exact_div(fp, a);
  Polynomial d = c - b.derivative();
  while (b.degree() > 0) {
    Polynomial ai = gcd(b, d);
    out.push_back(ai);
    b = exact_div(b, ai);
    c = exact_div(d, ai);
    d = c - b.derivative();
  }
  return out;
}

int Polynomial::multiplicity_of(const Polynomial& h) const {
  if (is_zero()) throw Error("multiplicity in zero polynomial");
  if (h.degree() < 1) throw Error("multiplicity of constant");
  int m = 0;
  Polynomial f = *this;
  while (true) {
    auto [q, r] = divmod(f, h);
    if (!r.is_zero()) return m;
    f = q;
    ++m;
  }
}

Rational Polynomial::eval(const Rational& x) const {
  Rational r(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
  return r;
}

Polynomial Polynomial::compose(const Polynomial& inner) const {
  Polynomial r;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * inner + Polynomial(*it);
  return r;
}

Polynomial Polynomial::reversed(int m) const {
  if (m < degree()) throw Error("reversed: m below degree");
  std::vector<Rational> v(m + 1, Rational(0));
  for (size_t i = 0; i < c_.size(); ++i) v[m - i] = c_[i];
  return Polynomial(std::move(v));
}

std::string Polynomial::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Rational& c = coeff(k);
    if (c.is_zero()) continue;
    Rational a = c.abs();
    if (first) {
      if (c.sign() < 0) os << "-";
      first = false;
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    bool unit = (a == Rational(1));
    if (k == 0 || !unit) os << a.str();
    if (k > 0) {
      if (!unit) os << "*";
      os << var;
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

Rational resultant(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() && b.is_zero()) throw BothZero("resultant of two zero polynomials");
  if (a.is_zero() || b.is_zero()) return Rational(0);
  int m = a.degree(), n = b.degree();
  if (m == 0) return a.lc().pow(n);
  if (n == 0) return b.lc().pow(m);
  // Sylvester matrix, exact Gaussian elimination.
  int N = m + n;
  std::vector<std::vector<Rational>> s(N, std::vector<Rational>(N, Rational(0)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= m; ++j) s[i][i + j] = a.coeff(m - j);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j <= n; ++j) s[n + i][i + j] = b.coeff(n - j);
  Rational det(1);
  for (int col = 0; col < N; ++col) {
    int piv = -1;
    for (int r = col; r < N; ++r)
      if (!s[r][col].is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) return Rational(0);
    if (piv != col) {
      std::swap(s[piv], s[col]);
      det = -det;
    }
    det *= s[col][col];
    Rational inv = Rational(1) / s[col][col];
    for (int r = col + 1; r < N; ++r) {
      if (s[r][col].is_zero()) continue;
      Rational f = s[r][col] * inv;
      for (int c2 = col; c2 < N; ++c2) s[r][c2] -= f * s[col][c2];
    }
  }
  return det;
}

// ---------------------------------------------------------------------------
// RationalFunction

RationalFunction::RationalFunction(const Polynomial& num, const Polynomial& den) {
  if (den.is_zero()) throw Error("RationalFunction: zero denominator");
  Polynomial g = Polynomial::gcd(num, den);
  if (g.degree() > 0) {
    num_ = Polynomial::exact_div(num, g);
    den_ = Polynomial::exact_div(den, g);
  } else {
    num_ = num;
    den_ = den;
  }
  Rational l = den_.lc();
  den_ = den_ * (Rational(1) / l);
  num_ = num_ * (Rational(1) / l);
  if (num_.is_zero()) den_ = Polynomial(Rational(1));
}

Rational RationalFunction::constant_value() const {
  if (!is_constant()) throw Error("not a constant rational function");
  return num_.coeff(0) / den_.coeff(0);
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}
RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }
RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}
RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.is_zero()) throw Error("RationalFunction: division by zero");
  return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
}

RationalFunction RationalFunction::pow(unsigned e) const {
  RationalFunction r(Rational(1)), base = *this;
  while (e) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

RationalFunction RationalFunction::derivative() const {
  return RationalFunction(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

RationalFunction RationalFunction::compose(const Polynomial& inner) const {
  return RationalFunction(num_.compose(inner), den_.compose(inner));
}

RationalFunction RationalFunction::at_infinity_chart() const {
  int m = std::max(num_.degree(), den_.degree());
  if (is_zero()) return *this;
  return RationalFunction(num_.reversed(m), den_.reversed(m));
}

int RationalFunction::ord_at(const Polynomial& h) const {
  if (is_zero()) throw Error("ord of zero function");
  int a = num_.degree() > 0 ? num_.multiplicity_of(h) : 0;
  int b = den_.degree() > 0 ? den_.multiplicity_of(h) : 0;
  return a - b;
}

std::string RationalFunction::str(const std::string& var) const {
  if (den_.degree() == 0 && den_.coeff(0) == Rational(1)) return num_.str(var);
  return "(" + num_.str(var) + ")/(" + den_.str(var) + ")";
}

// ---------------------------------------------------------------------------
// BivarPoly

void BivarPoly::normalize() {
  while (!cx_.empty() && cx_.back().is_zero()) cx_.pop_back();
}

namespace {
const RationalFunction kZeroRF;
}

const RationalFunction& BivarPoly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(cx_.size())) return kZeroRF;
  return cx_[k];
}

const RationalFunction& BivarPoly::lc() const {
  if (cx_.empty()) return kZeroRF;
  return cx_.back();
}

BivarPoly BivarPoly::operator-() const {
  std::vector<RationalFunction> v;
  v.reserve(cx_.size());
  for (const auto& c : cx_) v.push_back(-c);
  return BivarPoly(std::move(v));
}

BivarPoly operator+(const BivarPoly& a, const BivarPoly& b) {
  std::vector<RationalFunction> v(std::max(a.cx_.size(), b.cx_.size()));
  for (size_t i = 0; i < a.cx_.size(); ++i) v[i] = v[i] + a.cx_[i];
  for (size_t i = 0; i < b.cx_.size(); ++i) v[i] = v[i] + b.cx_[i];
  return BivarPoly(std::move(v));
}

BivarPoly operator-(const BivarPoly& a, const BivarPoly& b) { return a + (-b); }

BivarPoly operator*(const BivarPoly& a, const BivarPoly& b) {
  if (a.is_zero() || b.is_zero()) return BivarPoly();
  std::vector<RationalFunction> v(a.cx_.size() + b.cx_.size() - 1);
  for (size_t i = 0; i < a.cx_.size(); ++i)
    for (size_t j = 0; j < b.cx_.size(); ++j) v[i + j] = v[i + j] + a.cx_[i] * b.cx_[j];
  return BivarPoly(std::move(v));
}

BivarPoly BivarPoly::operator*(const RationalFunction& s) const {
  std::vector<RationalFunction> v;
  v.reserve(cx_.size());
  for (const auto& c : cx_) v.push_back(c * s);
  return BivarPoly(std::move(v));
}

BivarPoly BivarPoly::pow(unsigned e) const {
  BivarPoly r(RationalFunction(1)), base = *this;
  while (e) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

BivarPoly BivarPoly::d_dx() const {
  if (cx_.size() <= 1) return BivarPoly();
  std::vector<RationalFunction> v;
  v.reserve(cx_.size() - 1);
  for (size_t i = 1; i < cx_.size(); ++i)
    v.push_back(cx_[i] * RationalFunction(Rational(static_cast<long>(i))));
  return BivarPoly(std::move(v));
}

BivarPoly BivarPoly::d_dt() const {
  std::vector<RationalFunction> v;
  v.reserve(cx_.size());
  for (const auto& c : cx_) v.push_back(c.derivative());
  return BivarPoly(std::move(v));
}

RationalFunction BivarPoly::eval_x(const Rational& x) const {
  RationalFunction r;
  for (auto it = cx_.rbegin(); it != cx_.rend(); ++it) r = r * RationalFunction(x) + *it;
  return r;
}

std::string BivarPoly::str(const std::string& xvar, const std::string& tvar) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = deg_x(); k >= 0; --k) {
    if (coeff(k).is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << coeff(k).str(tvar) << ")";
    if (k > 0) {
      os << "*" << xvar;
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

RationalFunction resultant_x(const BivarPoly& f, const BivarPoly& g) {
  if (f.is_zero() || g.is_zero()) return RationalFunction(0);
  // Clear coefficient denominators: res(c f, g) = c^deg(g) res(f, g), so we
  // track the correction factors exactly.
  auto clear = [](const BivarPoly& p, Polynomial* mult) {
    Polynomial m(Rational(1));
    for (int k = 0; k <= p.deg_x(); ++k) {
      const Polynomial& d = p.coeff(k).den();
      Polynomial g2 = Polynomial::gcd(m, d);
      m = m * Polynomial::exact_div(d, g2);
    }
    std::vector<Polynomial> coeffs;
    for (int k = 0; k <= p.deg_x(); ++k) {
      RationalFunction c = p.coeff(k) * RationalFunction(m);
      if (!c.is_polynomial()) throw InternalError("resultant_x: denominator clearing failed");
      coeffs.push_back(c.num());
    }
    *mult = m;
    return coeffs;
  };
  Polynomial mf, mg;
  std::vector<Polynomial> a = clear(f, &mf);
  std::vector<Polynomial> b = clear(g, &mg);
  int m = static_cast<int>(a.size()) - 1;
  int n = static_cast<int>(b.size()) - 1;
  Polynomial det(Rational(1));
  if (m == 0 && n == 0) {
    det = Polynomial(Rational(1));
  } else if (m == 0) {
    det = a[0].pow(n);
  } else if (n == 0) {
    det = b[0].pow(m);
  } else {
    int N = m + n;
    std::vector<std::vector<Polynomial>> s(N, std::vector<Polynomial>(N));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j <= m; ++j) s[i][i + j] = a[m - j];
    for (int i = 0; i < m; ++i)
      for (int j = 0; j <= n; ++j) s[n + i][i + j] = b[n - j];
    // Bareiss fraction-free elimination.
    Polynomial prev(Rational(1));
    int sign = 1;
    for (int k = 0; k < N - 1; ++k) {
      if (s[k][k].is_zero()) {
        int piv = -1;
        for (int r = k + 1; r < N; ++r)
          if (!s[r][k].is_zero()) {
            piv = r;
            break;
          }
        if (piv < 0) return RationalFunction(0);
        std::swap(s[piv], s[k]);
        sign = -sign;
      }
      for (int i = k + 1; i < N; ++i) {
        for (int j = k + 1; j < N; ++j) {
          Polynomial t = s[i][j] * s[k][k] - s[i][k] * s[k][j];
          s[i][j] = Polynomial::exact_div(t, prev);
        }
        s[i][k] = Polynomial();
      }
      prev = s[k][k];
    }
    det = s[N - 1][N - 1];
    if (sign < 0) det = -det;
  }
  // Undo the clearing: res(f,g) = det / (mf^n * mg^m).
  return RationalFunction(det, mf.pow(n) * mg.pow(m));
}

}  // namespace mono
