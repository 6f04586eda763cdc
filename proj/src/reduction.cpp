#include "hecke/reduction.hpp"

#include <algorithm>

namespace hecke {

namespace {

// floor of the real value of (x + y L) / den, up to an error of one; den > 0.
Integer approx_floor_real(const RingElt& num, const Integer& den) {
  const Integer& y = num.b();
  Integer five_y2 = 5 * y * y;
  Integer root;
  mpz_sqrt(root.get_mpz_t(), five_y2.get_mpz_t());
  Integer fl = y >= 0 ? root : -(root + 1);  // floor(y sqrt 5)
  Integer top = 2 * num.a() + y + fl;
  Integer q;
  Integer d2 = 2 * den;
  mpz_fdiv_q(q.get_mpz_t(), top.get_mpz_t(), d2.get_mpz_t());
  return q;
}

long to_long(const Integer& q) {
  if (!q.fits_slong_p()) {
    throw Error(ErrorCode::Overflow, "translation exponent does not fit in a long");
  }
  return q.get_si();
}

}  // namespace

PseudoStep pseudo_divide(const RingElt& a, const RingElt& b, TieRule tie) {
  if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "pseudo-division by zero");
  const RingElt beta = mul_lambda(b);
  const int s_beta = sign_real(beta);
  const RingElt abs_beta = s_beta > 0 ? beta : -beta;

  RingElt num = a * conj(beta);
  Integer den = norm(beta);
  if (den < 0) {
    den = -den;
    num = -num;
  }
  Integer q = approx_floor_real(num, den);

  const bool upper_closed = tie == TieRule::UpperClosed;
  for (;;) {
    RingElt r = a - RingElt(q) * beta;
    bool hi_ok, lo_ok;
    if (tie == TieRule::Floor) {
      hi_ok = sign_real(abs_beta - r) > 0;
      lo_ok = sign_real(r) >= 0;
    } else {
      RingElt twice = r + r;
      int hi = sign_real(abs_beta - twice);  // |bL| - 2r
      int lo = sign_real(twice + abs_beta);  // 2r + |bL|
      hi_ok = upper_closed ? hi >= 0 : hi > 0;
      lo_ok = upper_closed ? lo > 0 : lo >= 0;
    }
    if (hi_ok && lo_ok) return {std::move(q), std::move(r)};
    // r shrinks as q * beta grows
    bool grow = !hi_ok;
    if ((s_beta > 0) == grow) {
      ++q;
    } else {
      --q;
    }
  }
}

ReducedFormResult reduced_factor(const RingElt& a, const RingElt& b,
                                 const ReductionOptions& opts) {
  ReducedFormResult out;
  if (b.is_zero()) {
    // a/0 is the cusp at infinity
    if (!is_unit(a)) throw Error(ErrorCode::NotCoprime, "a/0 with a not a unit");
    UnitRep u = unit_decompose(a);
    out.e = -u.exponent;
    out.reduced_num = RingElt(u.sign);
    out.reduced_den = RingElt(0);
    out.word.push_S();
    out.witness = out.word.evaluate();
    out.last_remainder = a;
    return out;
  }

  const std::size_t bits = std::max({coefficient_bits(a), coefficient_bits(b),
                                     std::size_t{1}});
  const std::size_t cap = opts.max_steps.value_or(64 * bits);

  // Each step x = (qL) y + r is the column identity (x, y) = T^q J (y, r) with
  // J the coordinate swap. Writing J = S D, D = diag(-1, 1), and pushing the
  // D factors to the right turns the chain into T^q0 S T^-q1 S T^q2 S ...
  Word full;
  bool flip = false;
  RingElt x = a;
  RingElt y = b;
  for (std::size_t steps = 0;; ++steps) {
    if (steps >= cap) {
      throw Error(ErrorCode::IterationCapExceeded,
                  "pseudo-Euclidean chain exceeded its step cap");
    }
    PseudoStep st = pseudo_divide(x, y, opts.tie);
    long q = to_long(st.q);
    full.push_T(flip ? -q : q);
    full.push_S();
    flip = !flip;
    out.quotients.push_back(std::move(st.q));
    if (st.r.is_zero()) break;
    x = std::move(y);
    y = std::move(st.r);
  }
  if (!is_unit(y)) {
    throw Error(ErrorCode::NotCoprime, "numerator and denominator are not coprime");
  }
  out.e = -unit_decompose(y).exponent;
  RingElt scale = lambda_pow(out.e);
  out.reduced_num = a * scale;
  out.reduced_den = b * scale;
  out.last_remainder = std::move(y);
  // (a, b) is +-full * (g, 0), i.e. the first column of full; dropping the
  // final S moves it to the second column.
  out.word = full;
  out.word.push_S();
  out.witness = out.word.evaluate();
  return out;
}

bool is_reduced_form(const RingElt& x, const RingElt& y, const ReductionOptions& opts) {
  return reduced_factor(x, y, opts).e == 0;
}

Word first_column_word(const ReducedFormResult& r) {
  Word w = r.word;
  w.push_S();
  return w;
}

GMatrix first_column_witness(const ReducedFormResult& r) {
  return r.witness * GMatrix::S();
}

std::optional<Word> g5_decompose(const GMatrix& M) {
  Word w;
  if (!M.c().is_zero()) {
    w = first_column_word(reduced_factor(M.a(), M.c()));
  }
  GMatrix U = w.evaluate().inverse() * M;
  if (!U.c().is_zero()) {
    throw Error(ErrorCode::IntegrityError, "reduction witness failed to clear (2,1)");
  }
  // canonical sign makes a positive; membership needs U = T^n
  if (!(U.a() == RingElt(1)) || !(U.d() == RingElt(1))) return std::nullopt;
  if (U.b().a() != 0) return std::nullopt;
  w.push_T(to_long(U.b().b()));
  return w;
}

bool in_G5(const GMatrix& M) { return g5_decompose(M).has_value(); }

}  // namespace hecke
