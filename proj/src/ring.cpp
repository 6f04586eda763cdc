#include "hecke/ring.hpp"

#include <ostream>

namespace hecke {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotAUnit: return "NotAUnit";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::BothZero: return "BothZero";
    case ErrorCode::ZeroInput: return "ZeroInput";
    case ErrorCode::FactorCapExceeded: return "FactorCapExceeded";
    case ErrorCode::NotCoprime: return "NotCoprime";
    case ErrorCode::IterationCapExceeded: return "IterationCapExceeded";
    case ErrorCode::BadDeterminant: return "BadDeterminant";
    case ErrorCode::UnitModulus: return "UnitModulus";
    case ErrorCode::BoundExceeded: return "BoundExceeded";
    case ErrorCode::IntegrityError: return "IntegrityError";
    case ErrorCode::BadRange: return "BadRange";
    case ErrorCode::NotReduced: return "NotReduced";
    case ErrorCode::NotAGroup: return "NotAGroup";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::Overflow: return "Overflow";
  }
  return "Unknown";
}

RingElt& RingElt::operator+=(const RingElt& y) {
  a_ += y.a_;
  b_ += y.b_;
  return *this;
}

RingElt& RingElt::operator-=(const RingElt& y) {
  a_ -= y.a_;
  b_ -= y.b_;
  return *this;
}

RingElt& RingElt::operator*=(const RingElt& y) {
  // (a1 + b1 L)(a2 + b2 L) = a1a2 + b1b2 + (a1b2 + a2b1 + b1b2) L
  Integer bb = b_ * y.b_;
  Integer a = a_ * y.a_ + bb;
  Integer b = a_ * y.b_ + b_ * y.a_ + bb;
  a_ = std::move(a);
  b_ = std::move(b);
  return *this;
}

bool lex_less(const RingElt& x, const RingElt& y) {
  if (x.a() != y.a()) return x.a() < y.a();
  return x.b() < y.b();
}

std::ostream& operator<<(std::ostream& os, const RingElt& x) {
  return os << '[' << x.a() << ", " << x.b() << ']';
}

RingElt mul(const RingElt& x, const RingElt& y) { return x * y; }

RingElt conj(const RingElt& x) { return RingElt(x.a() + x.b(), -x.b()); }

Integer norm(const RingElt& x) {
  return x.a() * x.a() + x.a() * x.b() - x.b() * x.b();
}

Integer abs_norm(const RingElt& x) {
  Integer n = norm(x);
  return abs(n);
}

int sign_real(const RingElt& x) {
  // 2 * value = s + b sqrt 5 with s = 2a + b.
  Integer s = 2 * x.a() + x.b();
  int ss = sgn(s);
  int sb = sgn(x.b());
  if (ss == sb) return ss;
  if (sb == 0) return ss;
  if (ss == 0) return sb;
  Integer lhs = s * s;
  Integer rhs = 5 * x.b() * x.b();
  return lhs > rhs ? ss : sb;
}

int compare_real(const RingElt& x, const RingElt& y) { return sign_real(x - y); }

RingElt abs_real(const RingElt& x) { return sign_real(x) < 0 ? -x : x; }

RingElt mul_lambda(const RingElt& x) {
  return RingElt(x.b(), x.a() + x.b());
}

RingElt div_lambda(const RingElt& x) {
  return RingElt(x.b() - x.a(), x.a());
}

RingElt lambda_pow(long k) {
  RingElt r(1);
  if (k >= 0) {
    for (long i = 0; i < k; ++i) r = mul_lambda(r);
  } else {
    for (long i = 0; i < -k; ++i) r = div_lambda(r);
  }
  return r;
}

RingElt unit_value(const UnitRep& u) {
  RingElt v = lambda_pow(u.exponent);
  return u.sign < 0 ? -v : v;
}

bool is_unit(const RingElt& x) { return abs_norm(x) == 1; }

UnitRep unit_decompose(const RingElt& u) {
  if (!is_unit(u)) throw Error(ErrorCode::NotAUnit, "element is not a unit");
  UnitRep rep;
  rep.sign = sign_real(u);
  RingElt v = rep.sign < 0 ? -u : u;
  const RingElt one(1);
  while (!(v == one)) {
    if (compare_real(v, one) > 0) {
      v = div_lambda(v);
      ++rep.exponent;
    } else {
      v = mul_lambda(v);
      --rep.exponent;
    }
  }
  return rep;
}

namespace {

// floor((2p + n) / (2n)) for n > 0
Integer round_div(const Integer& p, const Integer& n) {
  Integer num = 2 * p + n;
  Integer den = 2 * n;
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

}  // namespace

DivResult divmod_nearest(const RingElt& a, const RingElt& b) {
  if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by zero");
  RingElt num = a * conj(b);
  Integer n = norm(b);
  Integer x = num.a();
  Integer y = num.b();
  if (n < 0) {
    n = -n;
    x = -x;
    y = -y;
  }
  RingElt q(round_div(x, n), round_div(y, n));
  RingElt r = a - q * b;
  return {std::move(q), std::move(r)};
}

std::optional<RingElt> exact_divide(const RingElt& x, const RingElt& d) {
  if (d.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by zero");
  RingElt num = x * conj(d);
  Integer n = norm(d);
  if (!mpz_divisible_p(num.a().get_mpz_t(), n.get_mpz_t()) ||
      !mpz_divisible_p(num.b().get_mpz_t(), n.get_mpz_t())) {
    return std::nullopt;
  }
  Integer qa, qb;
  mpz_divexact(qa.get_mpz_t(), num.a().get_mpz_t(), n.get_mpz_t());
  mpz_divexact(qb.get_mpz_t(), num.b().get_mpz_t(), n.get_mpz_t());
  return RingElt(std::move(qa), std::move(qb));
}

bool divides(const RingElt& d, const RingElt& x) {
  return exact_divide(x, d).has_value();
}

RingElt canonical_associate(const RingElt& x) {
  if (x.is_zero()) throw Error(ErrorCode::ZeroInput, "zero has no associate class");
  const RingElt n(abs_norm(x));
  const RingElt upper = n * lambda_pow(2);  // L^2 |N|
  RingElt v = abs_real(x);
  // v^2 grows by L^2 per multiplication by L, so each loop moves monotonically.
  while (compare_real(v * v, n) < 0) v = mul_lambda(v);
  while (compare_real(v * v, upper) >= 0) v = div_lambda(v);
  return v;
}

RingElt gcd(const RingElt& a, const RingElt& b) {
  if (a.is_zero() && b.is_zero()) {
    throw Error(ErrorCode::BothZero, "gcd of two zeros");
  }
  RingElt x = a;
  RingElt y = b;
  while (!y.is_zero()) {
    RingElt r = divmod_nearest(x, y).remainder;
    x = std::move(y);
    y = std::move(r);
  }
  return canonical_associate(x);
}

RingElt lcm(const RingElt& a, const RingElt& b) {
  if (a.is_zero() || b.is_zero()) {
    throw Error(ErrorCode::ZeroInput, "lcm with zero");
  }
  RingElt g = gcd(a, b);
  return canonical_associate(*exact_divide(a * b, g));
}

std::size_t coefficient_bits(const RingElt& x) {
  std::size_t bits = 0;
  if (x.a() != 0) bits = std::max(bits, mpz_sizeinbase(x.a().get_mpz_t(), 2));
  if (x.b() != 0) bits = std::max(bits, mpz_sizeinbase(x.b().get_mpz_t(), 2));
  return bits;
}

}  // namespace hecke
