#include "hecke/text.hpp"

#include <cctype>
#include <string>

namespace hecke {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  RingElt expression() {
    skip();
    if (pos_ == s_.size()) throw ParseError(pos_, "empty expression");
    RingElt sum(0);
    bool first = true;
    while (pos_ < s_.size()) {
      int sign = 1;
      if (s_[pos_] == '+' || s_[pos_] == '-') {
        if (s_[pos_] == '-') sign = -1;
        ++pos_;
        skip();
      } else if (!first) {
        throw ParseError(pos_, "expected '+' or '-'");
      }
      RingElt t = term();
      sum = sign > 0 ? sum + t : sum - t;
      first = false;
    }
    return sum;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  RingElt term() {
    RingElt prod = factor();
    skip();
    while (pos_ < s_.size() && s_[pos_] == '*') {
      ++pos_;
      skip();
      prod = prod * factor();
      skip();
    }
    return prod;
  }

  RingElt factor() {
    if (pos_ == s_.size()) throw ParseError(pos_, "unexpected end of input");
    char ch = s_[pos_];
    if (ch == 'L') {
      ++pos_;
      skip();
      if (pos_ == s_.size() || s_[pos_] != '^') return RingElt::lambda();
      ++pos_;
      skip();
      bool negative = pos_ < s_.size() && s_[pos_] == '-';
      if (negative) ++pos_;
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) throw ParseError(pos_, "expected an exponent");
      if (pos_ - start > 6) throw ParseError(start, "exponent too large");
      long k = std::stol(std::string(s_.substr(start, pos_ - start)));
      return lambda_pow(negative ? -k : k);
    }
    if (!std::isdigit(static_cast<unsigned char>(ch))) {
      throw ParseError(pos_, std::string("unexpected character '") + ch + "'");
    }
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return RingElt(Integer(std::string(s_.substr(start, pos_ - start))));
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

RingElt parse_element(std::string_view s) { return Parser(s).expression(); }

std::string format_element(const RingElt& x) {
  const Integer& a = x.a();
  const Integer& b = x.b();
  if (b == 0) return a.get_str();
  std::string out;
  if (b == 1) {
    out = "L";
  } else if (b == -1) {
    out = "-L";
  } else {
    out = b.get_str() + "*L";
  }
  if (a > 0) out += "+" + a.get_str();
  if (a < 0) out += a.get_str();
  return out;
}

std::string format_factored(const RingElt& x) {
  if (x.is_zero()) return "0";
  // strip the content, then see whether what is left is a unit
  Integer content;
  mpz_gcd(content.get_mpz_t(), x.a().get_mpz_t(), x.b().get_mpz_t());
  RingElt rest(x.a() / content, x.b() / content);
  if (!is_unit(rest)) return format_element(x);
  UnitRep u = unit_decompose(rest);
  Integer n = content * u.sign;
  if (u.exponent == 0) return n.get_str();
  std::string power = u.exponent == 1 ? "L" : "L^" + std::to_string(u.exponent);
  if (n == 1) return power;
  if (n == -1) return "-" + power;
  return n.get_str() + "*" + power;
}

GMatrix parse_matrix(std::string_view a, std::string_view b, std::string_view c,
                     std::string_view d) {
  return GMatrix::from_entries(parse_element(a), parse_element(b), parse_element(c),
                               parse_element(d));
}

}  // namespace hecke
