#include "mono/sl2.hpp"

#include <array>
#include <map>
#include <set>
#include <sstream>

#include "mono/errors.hpp"

namespace mono {

namespace {

Gen inverse_of(Gen g) {
  switch (g) {
    case Gen::S: return Gen::Sinv;
    case Gen::Sinv: return Gen::S;
    case Gen::T: return Gen::Tinv;
    case Gen::Tinv: return Gen::T;
  }
  return Gen::S;
}

}  // namespace

GeneratorWord::GeneratorWord(std::vector<Gen> letters) : l_(std::move(letters)) { reduce(); }

void GeneratorWord::reduce() {
  std::vector<Gen> out;
  for (Gen g : l_) {
    if (!out.empty() && out.back() == inverse_of(g))
      out.pop_back();
    else
      out.push_back(g);
  }
  l_ = std::move(out);
}

GeneratorWord GeneratorWord::operator*(const GeneratorWord& o) const {
  std::vector<Gen> v = l_;
  v.insert(v.end(), o.l_.begin(), o.l_.end());
  return GeneratorWord(std::move(v));
}

GeneratorWord GeneratorWord::inverse() const {
  std::vector<Gen> v;
  v.reserve(l_.size());
  for (auto it = l_.rbegin(); it != l_.rend(); ++it) v.push_back(inverse_of(*it));
  return GeneratorWord(std::move(v));
}

std::string GeneratorWord::str() const {
  std::ostringstream os;
  for (Gen g : l_) {
    switch (g) {
      case Gen::S: os << "S"; break;
      case Gen::Sinv: os << "s"; break;
      case Gen::T: os << "T"; break;
      case Gen::Tinv: os << "t"; break;
    }
  }
  return os.str();
}

SL2Matrix::SL2Matrix(Integer a, Integer b, Integer c, Integer d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
  if (a_ * d_ - b_ * c_ != 1) throw Error("SL2Matrix: determinant is not 1");
}

SL2Matrix SL2Matrix::mul(const SL2Matrix& m1, const SL2Matrix& m2) {
  return SL2Matrix(m1.a_ * m2.a_ + m1.b_ * m2.c_, m1.a_ * m2.b_ + m1.b_ * m2.d_,
                   m1.c_ * m2.a_ + m1.d_ * m2.c_, m1.c_ * m2.b_ + m1.d_ * m2.d_);
}

SL2Matrix SL2Matrix::eval(const GeneratorWord& w) {
  SL2Matrix m;
  for (Gen g : w.letters()) {
    switch (g) {
      case Gen::S: m = mul(m, S()); break;
      case Gen::Sinv: m = mul(m, S().inverse()); break;
      case Gen::T: m = mul(m, T()); break;
      case Gen::Tinv: m = mul(m, T().inverse()); break;
    }
  }
  return m;
}

GeneratorWord SL2Matrix::decompose_word() const {
  // Reduce the first column by T-shears and S-rotations:
  //   T^-n * [[a,b],[c,d]] = [[a - n c, b - n d],[c,d]],
  //   S^-1 * [[a,b],[c,d]] = [[-c,-d],[a,b]].
  // Applying A_1, A_2, ... on the left until triangular gives
  // M = A_1^-1 A_2^-1 ... R, so the word accumulates in application order.
  constexpr long kMaxRun = 10'000'000;  // unit-letter words; cap pathological shears
  std::vector<Gen> word;
  SL2Matrix m = *this;
  auto push_run = [&](Gen letter, const Integer& count) {
    if (count > kMaxRun) throw Error("decompose_word: shear exponent too large");
    long n = static_cast<long>(count.get_si());
    for (long i = 0; i < n; ++i) word.push_back(letter);
  };
  auto apply_T_pow = [&](const Integer& n) {
    // m <- T^-n m; the word gains T^n.
    if (n == 0) return;
    m.a_ -= n * m.c_;
    m.b_ -= n * m.d_;
    push_run(n > 0 ? Gen::T : Gen::Tinv, abs(n));
  };
  while (m.c_ != 0) {
    if (abs(m.a_) >= abs(m.c_)) {
      Integer q, r;
      mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), m.a_.get_mpz_t(), m.c_.get_mpz_t());
      // round to nearest
      if (m.c_ > 0 && 2 * r > m.c_) q += 1;
      if (m.c_ < 0 && 2 * r < m.c_) q += 1;
      apply_T_pow(q);
    }
    if (m.c_ != 0) {
      // m <- S^-1 m; the word gains S.
      SL2Matrix next(-m.c_, -m.d_, m.a_, m.b_);
      m = next;
      word.push_back(Gen::S);
    }
  }
  // Now m = [[±1, b], [0, ±1]].
  if (m.a_ == 1) {
    push_run(m.b_ >= 0 ? Gen::T : Gen::Tinv, abs(m.b_));
  } else {
    // -I = S^2, so the remainder is S^2 T^-b.
    word.push_back(Gen::S);
    word.push_back(Gen::S);
    push_run(m.b_ <= 0 ? Gen::T : Gen::Tinv, abs(m.b_));
  }
  GeneratorWord w{std::move(word)};
  if (!(eval(w) == *this)) throw InternalError("decompose_word: round trip failed");
  return w;
}

std::array<uint32_t, 4> SL2Matrix::reduce_mod(uint32_t n) const {
  if (n < 2) throw Error("reduce_mod: modulus must be >= 2");
  auto red = [&](const Integer& x) {
    Integer r = x % static_cast<long>(n);
    if (r < 0) r += static_cast<long>(n);
    return static_cast<uint32_t>(r.get_ui());
  };
  return {red(a_), red(b_), red(c_), red(d_)};
}

std::string SL2Matrix::str() const {
  std::ostringstream os;
  os << "[[" << a_.get_str() << "," << b_.get_str() << "],[" << c_.get_str() << ","
     << d_.get_str() << "]]";
  return os.str();
}

int abelianization_character(const SL2Matrix& m) {
  int v = 0;
  GeneratorWord w = m.decompose_word();
  for (Gen g : w.letters()) {
    switch (g) {
      case Gen::S: v += 3; break;
      case Gen::Sinv: v -= 3; break;
      case Gen::T: v += 1; break;
      case Gen::Tinv: v -= 1; break;
    }
  }
  return ((v % 12) + 12) % 12;
}

long mod_n_image_order(const std::vector<SL2Matrix>& gens, uint32_t n) {
  using M = std::array<uint32_t, 4>;
  auto mul = [n](const M& x, const M& y) {
    return M{(x[0] * y[0] + x[1] * y[2]) % n, (x[0] * y[1] + x[1] * y[3]) % n,
             (x[2] * y[0] + x[3] * y[2]) % n, (x[2] * y[1] + x[3] * y[3]) % n};
  };
  std::set<M> seen;
  std::vector<M> frontier;
  M id{1, 0, 0, 1};
  seen.insert(id);
  frontier.push_back(id);
  std::vector<M> gs;
  for (const auto& g : gens) {
    gs.push_back(g.reduce_mod(n));
    gs.push_back(g.inverse().reduce_mod(n));
  }
  while (!frontier.empty()) {
    std::vector<M> next;
    for (const auto& x : frontier)
      for (const auto& g : gs) {
        M y = mul(x, g);
        if (seen.insert(y).second) next.push_back(y);
      }
    frontier = std::move(next);
  }
  return static_cast<long>(seen.size());
}

}  // namespace mono
