#include "hecke/matrix.hpp"

#include <ostream>

namespace hecke {

GMatrix::GMatrix() : a_(1), b_(0), c_(0), d_(1) {}

GMatrix::GMatrix(RingElt a, RingElt b, RingElt c, RingElt d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
  canonicalize();
}

GMatrix GMatrix::from_entries(RingElt a, RingElt b, RingElt c, RingElt d) {
  if (!(a * d - b * c == RingElt(1))) {
    throw Error(ErrorCode::BadDeterminant, "matrix determinant is not 1");
  }
  return GMatrix(std::move(a), std::move(b), std::move(c), std::move(d));
}

GMatrix GMatrix::S() { return GMatrix(0, -1, 1, 0); }

GMatrix GMatrix::T(long power) {
  return GMatrix(1, RingElt(Integer(0), Integer(power)), 0, 1);
}

GMatrix GMatrix::lower(const RingElt& k) {
  return GMatrix(1, 0, mul_lambda(k), 1);
}

void GMatrix::canonicalize() {
  for (const RingElt* e : {&a_, &b_, &c_, &d_}) {
    int s = sign_real(*e);
    if (s == 0) continue;
    if (s < 0) {
      a_ = -a_;
      b_ = -b_;
      c_ = -c_;
      d_ = -d_;
    }
    return;
  }
}

GMatrix GMatrix::inverse() const { return GMatrix(d_, -b_, -c_, a_); }

GMatrix operator*(const GMatrix& x, const GMatrix& y) {
  return GMatrix(x.a_ * y.a_ + x.b_ * y.c_, x.a_ * y.b_ + x.b_ * y.d_,
                 x.c_ * y.a_ + x.d_ * y.c_, x.c_ * y.b_ + x.d_ * y.d_);
}

std::ostream& operator<<(std::ostream& os, const GMatrix& m) {
  return os << "[[" << m.a() << ", " << m.b() << "], [" << m.c() << ", " << m.d()
            << "]]";
}

GMatrix conjugate(const GMatrix& A, const GMatrix& B) {
  return A * B * A.inverse();
}

Word Word::parse(std::string_view letters) {
  Word w;
  for (char ch : letters) {
    switch (ch) {
      case 'S': w.push_S(); break;
      case 'T': w.push_T(1); break;
      case 't': w.push_T(-1); break;
      default:
        throw Error(ErrorCode::SyntaxError,
                    std::string("unexpected letter '") + ch + "' in word");
    }
  }
  return w;
}

void Word::push_S() {
  // S^2 = -I is trivial in PSL2
  if (!syllables_.empty() && syllables_.back().gen == 'S') {
    syllables_.pop_back();
    return;
  }
  syllables_.push_back({'S', 1});
}

void Word::push_T(long power) {
  if (power == 0) return;
  if (!syllables_.empty() && syllables_.back().gen == 'T') {
    syllables_.back().power += power;
    if (syllables_.back().power == 0) syllables_.pop_back();
    return;
  }
  syllables_.push_back({'T', power});
}

void Word::append(const Word& w) {
  for (const Syllable& s : w.syllables_) {
    if (s.gen == 'S') {
      push_S();
    } else {
      push_T(s.power);
    }
  }
}

Word Word::inverse() const {
  Word w;
  for (auto it = syllables_.rbegin(); it != syllables_.rend(); ++it) {
    if (it->gen == 'S') {
      w.push_S();
    } else {
      w.push_T(-it->power);
    }
  }
  return w;
}

std::size_t Word::length() const {
  std::size_t n = 0;
  for (const Syllable& s : syllables_) n += static_cast<std::size_t>(std::labs(s.power));
  return n;
}

GMatrix Word::evaluate() const {
  GMatrix m;
  for (const Syllable& s : syllables_) {
    m *= s.gen == 'S' ? GMatrix::S() : GMatrix::T(s.power);
  }
  return m;
}

std::string Word::to_string() const {
  std::string out;
  for (const Syllable& s : syllables_) {
    if (s.gen == 'S') {
      out += 'S';
    } else {
      out.append(static_cast<std::size_t>(std::labs(s.power)), s.power > 0 ? 'T' : 't');
    }
  }
  return out;
}

}  // namespace hecke
