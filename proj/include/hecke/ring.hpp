#pragma once

// Exact arithmetic in Z[L], L^2 = L + 1, with L embedded in R as the golden
// ratio (1 + sqrt 5) / 2.

#include <gmpxx.h>

#include <iosfwd>
#include <optional>

#include "hecke/error.hpp"

namespace hecke {

using Integer = mpz_class;

/// a + b*L with arbitrary-precision coefficients.
class RingElt {
 public:
  RingElt() = default;
  RingElt(Integer a, Integer b) : a_(std::move(a)), b_(std::move(b)) {}
  RingElt(long a) : a_(a), b_(0) {}  // NOLINT: integers embed implicitly
  explicit RingElt(const Integer& a) : a_(a), b_(0) {}

  static RingElt lambda() { return RingElt(Integer(0), Integer(1)); }

  const Integer& a() const { return a_; }
  const Integer& b() const { return b_; }

  bool is_zero() const { return a_ == 0 && b_ == 0; }
  bool is_rational() const { return b_ == 0; }

  friend bool operator==(const RingElt& x, const RingElt& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }

  RingElt operator-() const { return RingElt(-a_, -b_); }
  RingElt& operator+=(const RingElt& y);
  RingElt& operator-=(const RingElt& y);
  RingElt& operator*=(const RingElt& y);

  friend RingElt operator+(RingElt x, const RingElt& y) { return x += y; }
  friend RingElt operator-(RingElt x, const RingElt& y) { return x -= y; }
  friend RingElt operator*(RingElt x, const RingElt& y) { return x *= y; }

 private:
  Integer a_;
  Integer b_;
};

/// Lexicographic order on the coefficient pair (a, b); used only to make
/// choices deterministic, it has nothing to do with the real embedding.
bool lex_less(const RingElt& x, const RingElt& y);

std::ostream& operator<<(std::ostream& os, const RingElt& x);

/// ±L^exponent
struct UnitRep {
  int sign = 1;
  long exponent = 0;

  friend bool operator==(const UnitRep&, const UnitRep&) = default;
};

struct DivResult {
  RingElt quotient;
  RingElt remainder;
};

RingElt mul(const RingElt& x, const RingElt& y);

/// Galois conjugate: L -> 1 - L.
RingElt conj(const RingElt& x);

/// Field norm a^2 + ab - b^2 (signed).
Integer norm(const RingElt& x);
Integer abs_norm(const RingElt& x);

/// Exact sign of the real value a + b(1 + sqrt 5)/2.
int sign_real(const RingElt& x);
int compare_real(const RingElt& x, const RingElt& y);
RingElt abs_real(const RingElt& x);

/// L^k for any integer k (L^-1 = L - 1).
RingElt lambda_pow(long k);
RingElt mul_lambda(const RingElt& x);
RingElt div_lambda(const RingElt& x);
RingElt unit_value(const UnitRep& u);

bool is_unit(const RingElt& x);
UnitRep unit_decompose(const RingElt& u);

/// Nearest-integer rounding of a/b in the (1, L) basis; |norm(r)| < |norm(b)|.
DivResult divmod_nearest(const RingElt& a, const RingElt& b);

std::optional<RingElt> exact_divide(const RingElt& x, const RingElt& d);
bool divides(const RingElt& d, const RingElt& x);

/// Positive associate whose real value v satisfies
/// sqrt|N| <= v < L sqrt|N|.
RingElt canonical_associate(const RingElt& x);

RingElt gcd(const RingElt& a, const RingElt& b);
RingElt lcm(const RingElt& a, const RingElt& b);

/// Bit length of the largest coefficient magnitude (0 for zero).
std::size_t coefficient_bits(const RingElt& x);

}  // namespace hecke
