#include <gtest/gtest.h>

#include <functional>
#include <random>

#include "hecke/reduction.hpp"

using namespace hecke;

namespace {

const RingElt L = RingElt::lambda();

RingElt random_elt(std::mt19937_64& rng, long bound) {
  std::uniform_int_distribution<long> d(-bound, bound);
  return RingElt(Integer(d(rng)), Integer(d(rng)));
}

bool second_column_is(const GMatrix& m, const RingElt& x, const RingElt& y) {
  return (m.b() == x && m.d() == y) || (m.b() == -x && m.d() == -y);
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::IntegrityError;
}

}  // namespace

TEST(PseudoDivide, Examples) {
  PseudoStep s = pseudo_divide(RingElt(3), L);
  EXPECT_EQ(s.q, Integer(1));
  EXPECT_EQ(s.r, 2 - L);

  // q = 3 leaves 3 - 2L (= -L^-3) since L - 3L(2 - L) = 3 - 2L
  s = pseudo_divide(L, 2 - L);
  EXPECT_EQ(s.q, Integer(3));
  EXPECT_EQ(s.r, 3 - 2 * L);
  EXPECT_EQ(s.r, -lambda_pow(-3));

  s = pseudo_divide(RingElt(0), RingElt(7));
  EXPECT_EQ(s.q, Integer(0));
  EXPECT_TRUE(s.r.is_zero());

  EXPECT_EQ(code_of([] { pseudo_divide(RingElt(1), RingElt(0)); }), ErrorCode::DivisionByZero);
}

TEST(PseudoDivide, RemainderWindow) {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 3000; ++i) {
    RingElt a = random_elt(rng, 10000), b = random_elt(rng, 100);
    if (b.is_zero()) continue;
    PseudoStep s = pseudo_divide(a, b);
    RingElt bl = b * L;
    EXPECT_EQ(RingElt(s.q) * bl + s.r, a);
    // -|bL| < 2r <= |bL|
    RingElt twice = 2 * s.r, width = abs_real(bl);
    EXPECT_LT(compare_real(-width, twice), 0);
    EXPECT_LE(compare_real(twice, width), 0);
  }
}

TEST(PseudoDivide, TieGoesToThePositiveEnd) {
  // a = bL/2 exactly: r = +bL/2 under the default rule, -bL/2 when lower closed
  const RingElt b(2);
  const RingElt a = L;
  PseudoStep up = pseudo_divide(a, b);
  EXPECT_EQ(up.q, Integer(0));
  EXPECT_EQ(up.r, L);
  PseudoStep down = pseudo_divide(a, b, TieRule::LowerClosed);
  EXPECT_EQ(down.q, Integer(1));
  EXPECT_EQ(down.r, -L);
}

TEST(ReducedFactor, ThreeOverLambda) {
  ReducedFormResult r = reduced_factor(RingElt(3), L);
  EXPECT_EQ(r.e, 3);
  EXPECT_EQ(r.reduced_num, 3 * (2 * L + 1));
  EXPECT_EQ(r.reduced_den, L * (2 * L + 1));
  EXPECT_EQ(r.reduced_den, lambda_pow(4));
}

TEST(ReducedFactor, TwoLambdaMinusOneOverTwelve) {
  ReducedFormResult r = reduced_factor(2 * L - 1, RingElt(12));
  EXPECT_EQ(r.e, 6);
  EXPECT_EQ(r.reduced_num, 18 * L + 11);
  EXPECT_EQ(r.reduced_den, 12 * (8 * L + 5));
}

TEST(ReducedFactor, TwoLambdaMinusOneOver192) {
  ReducedFormResult r = reduced_factor(2 * L - 1, RingElt(192));
  EXPECT_EQ(r.e, 18);
  EXPECT_EQ(r.reduced_num, 5778 * L + 3571);
  EXPECT_EQ(r.reduced_den, 192 * (2584 * L + 1597));
}

TEST(ReducedFactor, OneOverOne) {
  ReducedFormResult r = reduced_factor(RingElt(1), RingElt(1));
  EXPECT_EQ(r.e, 1);
  EXPECT_EQ(r.reduced_num, L);
  EXPECT_EQ(r.reduced_den, L);
  EXPECT_EQ(r.word, Word::parse("TST"));
  EXPECT_EQ(r.witness, GMatrix::from_entries(L, L, 1, L));
}

TEST(ReducedFactor, Errors) {
  EXPECT_EQ(code_of([] { reduced_factor(RingElt(2), RingElt(4)); }), ErrorCode::NotCoprime);
  EXPECT_EQ(code_of([] { reduced_factor(RingElt(3), L, {TieRule::Floor, std::nullopt}); }),
            ErrorCode::IterationCapExceeded);
  ReductionOptions tight;
  tight.max_steps = 1;
  EXPECT_EQ(code_of([&] { reduced_factor(2 * L - 1, RingElt(192), tight); }),
            ErrorCode::IterationCapExceeded);
}

TEST(ReducedFactor, CuspAtInfinity) {
  EXPECT_EQ(reduced_factor(RingElt(1), RingElt(0)).e, 0);
  EXPECT_EQ(reduced_factor(RingElt(-1), RingElt(0)).e, 0);
  EXPECT_EQ(code_of([] { reduced_factor(RingElt(2), RingElt(0)); }), ErrorCode::NotCoprime);
}

TEST(ReducedFactor, LowerClosedTieGivesTheSameFactor) {
  std::mt19937_64 rng(17);
  ReductionOptions lower;
  lower.tie = TieRule::LowerClosed;
  for (int i = 0; i < 500; ++i) {
    RingElt a = random_elt(rng, 300), b = random_elt(rng, 300);
    if (b.is_zero() || a.is_zero() || !is_unit(gcd(a, b))) continue;
    EXPECT_EQ(reduced_factor(a, b).e, reduced_factor(a, b, lower).e) << a << " / " << b;
  }
  for (long n = 1; n <= 40; ++n) {
    for (long p : {2, 3, 4, 5, 9, 25}) {
      if (!is_unit(gcd(RingElt(p), RingElt(n)))) continue;
      EXPECT_EQ(reduced_factor(RingElt(p), n * L).e, reduced_factor(RingElt(p), n * L, lower).e);
    }
  }
}

TEST(IsReducedForm, Examples) {
  EXPECT_TRUE(is_reduced_form(2 * L + 1, 2 * L));
  EXPECT_TRUE(is_reduced_form(4 * lambda_pow(2), 9 * lambda_pow(3)));
  EXPECT_FALSE(is_reduced_form(RingElt(1), RingElt(1)));
  EXPECT_EQ(code_of([] { is_reduced_form(RingElt(6), RingElt(4)); }), ErrorCode::NotCoprime);
}

TEST(G5Decompose, Examples) {
  auto w = g5_decompose(GMatrix::T());
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(w->evaluate(), GMatrix::T());
  EXPECT_EQ(*w, Word::parse("T"));

  GMatrix tst = GMatrix::from_entries(L, L, 1, L);
  w = g5_decompose(tst);
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(w->evaluate(), tst);
  EXPECT_EQ(Word::parse("TST").evaluate(), tst);

  GMatrix outside = GMatrix::from_entries(3 * L - 1, L, 2 * L, L);
  EXPECT_FALSE(g5_decompose(outside).has_value());
  EXPECT_FALSE(in_G5(outside));
  // [[1, 1], [0, 1]] has det 1 but 1 is not in LZ
  EXPECT_FALSE(in_G5(GMatrix::from_entries(1, 1, 0, 1)));
}

TEST(G5Decompose, RecoversRandomWords) {
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<long> power(-4, 4);
  for (int i = 0; i < 300; ++i) {
    Word w;
    for (int k = 0; k < 8; ++k) {
      w.push_T(power(rng));
      w.push_S();
    }
    GMatrix m = w.evaluate();
    auto back = g5_decompose(m);
    ASSERT_TRUE(back.has_value());
    EXPECT_EQ(back->evaluate(), m);
  }
}

TEST(Words, ParsePrintInverse) {
  Word w = Word::parse("TTtSTTS");
  EXPECT_EQ(w.to_string(), "TSTTS");
  EXPECT_EQ(w.length(), 5u);
  EXPECT_EQ((w.evaluate() * w.inverse().evaluate()), GMatrix());
  EXPECT_EQ(Word::parse("SS").evaluate(), GMatrix());
  EXPECT_EQ(Word::parse("STSTSTSTST").evaluate(), GMatrix());
  EXPECT_EQ(code_of([] { Word::parse("STX"); }), ErrorCode::SyntaxError);
}

TEST(Matrices, DeterminantAndSign) {
  EXPECT_EQ(code_of([] { GMatrix::from_entries(1, 1, 1, 1); }), ErrorCode::BadDeterminant);
  GMatrix m = GMatrix::from_entries(-1, 0, 0, -1);
  EXPECT_EQ(m, GMatrix());
  GMatrix s = GMatrix::S();
  EXPECT_EQ(s * s, GMatrix());
  EXPECT_EQ(GMatrix::T(3), GMatrix::from_entries(1, 3 * L, 0, 1));
}

// e(x/uL) = e(x/vL) for v = u - x m
TEST(ReductionProperties, TranslationOfTheDenominator) {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<long> md(-6, 6);
  int checked = 0;
  while (checked < 1000) {
    RingElt x = random_elt(rng, 60), u = random_elt(rng, 60);
    long m = md(rng);
    RingElt v = u - x * RingElt(m);
    if (x.is_zero() || u.is_zero() || v.is_zero() || !is_unit(gcd(x, u))) continue;
    ++checked;
    EXPECT_EQ(reduced_factor(x, u * L).e, reduced_factor(x, v * L).e)
        << x << " " << u << " m=" << m;
  }
}

TEST(ReductionProperties, OneStepPreservesTheFactor) {
  std::mt19937_64 rng(32);
  int checked = 0;
  while (checked < 1000) {
    RingElt a = random_elt(rng, 500), b = random_elt(rng, 200);
    if (b.is_zero() || !is_unit(gcd(a, b))) continue;
    RingElt r1 = pseudo_divide(a, b).r;
    if (r1.is_zero()) continue;
    ++checked;
    EXPECT_EQ(reduced_factor(a, b).e, reduced_factor(r1, b).e) << a << " / " << b;
  }
}

TEST(ReductionProperties, WitnessSoundnessAndFixedPoints) {
  std::mt19937_64 rng(33);
  int checked = 0;
  while (checked < 1000) {
    RingElt a = random_elt(rng, 400), b = random_elt(rng, 400);
    if (b.is_zero() || !is_unit(gcd(a, b))) continue;
    ++checked;
    ReducedFormResult r = reduced_factor(a, b);
    EXPECT_EQ(r.word.evaluate(), r.witness);
    EXPECT_TRUE(second_column_is(r.witness, r.reduced_num, r.reduced_den));
    EXPECT_EQ(r.reduced_num, a * lambda_pow(r.e));
    EXPECT_EQ(r.reduced_den, b * lambda_pow(r.e));
    EXPECT_EQ(abs_norm(r.last_remainder), Integer(1));
    EXPECT_EQ(reduced_factor(r.reduced_num, r.reduced_den).e, 0);
    EXPECT_TRUE(is_reduced_form(r.reduced_num, r.reduced_den));

    GMatrix first = first_column_witness(r);
    EXPECT_TRUE((first.a() == r.reduced_num && first.c() == r.reduced_den) ||
                (first.a() == -r.reduced_num && first.c() == -r.reduced_den));
    EXPECT_TRUE(in_G5(first));
    EXPECT_EQ(first_column_word(r).evaluate(), first);
  }
}

TEST(ReductionProperties, SignOfTheNumeratorDoesNotMatter) {
  std::mt19937_64 rng(34);
  for (int i = 0; i < 500; ++i) {
    RingElt a = random_elt(rng, 300), b = random_elt(rng, 300);
    if (b.is_zero() || !is_unit(gcd(a, b))) continue;
    EXPECT_EQ(reduced_factor(a, b).e, reduced_factor(-a, b).e);
    EXPECT_EQ(reduced_factor(a, b).e, reduced_factor(a, -b).e);
  }
}
