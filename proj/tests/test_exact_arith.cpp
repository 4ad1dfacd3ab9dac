#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "anth/errors.hpp"
#include "anth/int.hpp"
#include "anth/surd.hpp"
#include "oracles.hpp"

namespace anth {
namespace {

SurdElement el(const SurdContext& ctx, long m, long n) { return {ctx, m, n}; }

TEST(Isqrt, Examples) {
  EXPECT_EQ(isqrt(0), 0);
  EXPECT_EQ(isqrt(19), 4);
  const Int ten40("10000000000000000000000000000000000000000");
  EXPECT_EQ(isqrt(ten40), Int("100000000000000000000"));
}

TEST(Isqrt, NegativeIsDomainError) { EXPECT_THROW(isqrt(-1), DomainError); }

TEST(Isqrt, BracketsItsArgument) {
  std::mt19937_64 rng(0x15c7);
  for (int i = 0; i < 2000; ++i) {
    Int n = oracle::uniform(rng, 0, ~0ULL);
    if (i % 2) n = n * n * oracle::uniform(rng, 1, ~0ULL) + oracle::uniform(rng, 0, 3);
    const Int r = isqrt(n);
    ASSERT_LE(r * r, n);
    ASSERT_LT(n, (r + 1) * (r + 1));
  }
  for (long n = 0; n < 5000; ++n) {
    const Int r = isqrt(n);
    ASSERT_TRUE(r * r <= n && n < (r + 1) * (r + 1)) << n;
  }
}

TEST(ParseInt, AcceptsSignedDecimal) {
  EXPECT_EQ(parse_int("19"), 19);
  EXPECT_EQ(parse_int("-42"), -42);
  EXPECT_EQ(parse_int("+7"), 7);
  EXPECT_EQ(parse_int("123456789012345678901234567890"), Int("123456789012345678901234567890"));
  EXPECT_THROW(parse_int(""), DomainError);
  EXPECT_THROW(parse_int("-"), DomainError);
  EXPECT_THROW(parse_int("1e5"), DomainError);
  EXPECT_THROW(parse_int("0x10"), DomainError);
}

TEST(SurdContext, RejectsSquaresAndSmallN) {
  EXPECT_THROW(SurdContext(4), DomainError);
  EXPECT_THROW(SurdContext(9), DomainError);
  EXPECT_THROW(SurdContext(1), DomainError);
  EXPECT_THROW(SurdContext(0), DomainError);
  EXPECT_THROW(SurdContext(-3), DomainError);
  EXPECT_NO_THROW(SurdContext(2));
  EXPECT_EQ(SurdContext(19).root_floor(), 4);
}

TEST(SurdSign, SqrtNineteenRemainders) {
  const SurdContext ctx(19);
  EXPECT_EQ(surd_sign(el(ctx, 1, -4)), 1);   // e1 = a - 4b
  EXPECT_EQ(surd_sign(el(ctx, -2, 9)), 1);   // e2 = 9b - 2a
  EXPECT_EQ(surd_sign(el(ctx, 1, -5)), -1);  // sqrt(19) < 5
  EXPECT_EQ(surd_sign(el(ctx, 0, 0)), 0);
  EXPECT_EQ(surd_sign(el(ctx, 326, -1421)), 1);
}

TEST(SurdSign, AgreesWithFloatingPointAwayFromTies) {
  std::mt19937_64 rng(19);
  std::uniform_int_distribution<long> coeff(-1000, 1000);
  std::uniform_int_distribution<long> radicand(2, 100);
  int checked = 0;
  while (checked < 20000) {
    const long n = radicand(rng);
    if (oracle::is_square(n)) continue;
    const SurdContext ctx(n);
    const long m = coeff(rng), r = coeff(rng);
    const double root = std::sqrt(static_cast<double>(n));
    const double value = m * root + r;
    if (std::abs(value) <= 1e-6 * (std::abs(m) * root + std::abs(r))) continue;
    const int expected = value > 0 ? 1 : -1;
    ASSERT_EQ(surd_sign(el(ctx, m, r)), expected) << m << "*sqrt(" << n << ")+" << r;
    ++checked;
  }
}

TEST(SurdLinear, SqrtNineteenRecurrence) {
  const SurdContext ctx(19);
  const auto a = SurdElement::a(ctx);
  const auto b = SurdElement::b(ctx);
  const auto e1 = surd_sub(a, surd_scale(b, 4));
  EXPECT_EQ(e1, el(ctx, 1, -4));
  const auto e2 = surd_sub(b, surd_scale(e1, 2));
  EXPECT_EQ(e2, el(ctx, -2, 9));
  EXPECT_EQ(surd_sub(e2, surd_scale(e1, 0)), e2);
  EXPECT_EQ(surd_add(e1, e2), el(ctx, -1, 5));
}

TEST(SurdLinear, MismatchedContextsThrow) {
  const SurdContext c19(19), c2(2);
  EXPECT_THROW(surd_add(SurdElement::a(c19), SurdElement::a(c2)), DomainError);
  EXPECT_THROW(surd_sub(SurdElement::a(c19), SurdElement::a(c2)), DomainError);
  EXPECT_THROW(surd_mul(SurdElement::a(c19), SurdElement::a(c2)), DomainError);
  EXPECT_THROW(surd_floor_div(SurdElement::a(c19), SurdElement::b(c2)), DomainError);
  // Separately constructed contexts with the same N are interchangeable.
  EXPECT_NO_THROW(surd_add(SurdElement::a(c19), SurdElement::a(SurdContext(19))));
}

TEST(SurdMul, Examples) {
  const SurdContext ctx(19);
  EXPECT_EQ(surd_mul(el(ctx, 1, 0), el(ctx, 1, 0)), el(ctx, 0, 19));
  EXPECT_EQ(surd_mul(el(ctx, 0, 1), el(ctx, 326, -1421)), el(ctx, 326, -1421));
  // b/e1 = e6/e7 is certified by e1 * e6 = b * e7.
  EXPECT_EQ(surd_mul(el(ctx, 1, -4), el(ctx, -39, 170)), el(ctx, 326, -1421));
}

TEST(SurdMul, CommutativeAndAssociative) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> coeff(-100000, 100000);
  for (long n : {2L, 3L, 19L, 61L, 991L}) {
    const SurdContext ctx(n);
    for (int i = 0; i < 500; ++i) {
      const auto x = el(ctx, coeff(rng), coeff(rng));
      const auto y = el(ctx, coeff(rng), coeff(rng));
      const auto z = el(ctx, coeff(rng), coeff(rng));
      ASSERT_EQ(x * y, y * x);
      ASSERT_EQ((x * y) * z, x * (y * z));
      ASSERT_EQ(x * (y + z), x * y + x * z);
    }
  }
}

TEST(SurdFloorDiv, SqrtNineteenQuotients) {
  const SurdContext ctx(19);
  const auto a = SurdElement::a(ctx);
  const auto b = SurdElement::b(ctx);
  EXPECT_EQ(surd_floor_div(a, b), 4);
  EXPECT_EQ(surd_floor_div(b, el(ctx, 1, -4)), 2);
  EXPECT_EQ(surd_floor_div(el(ctx, 14, -61), el(ctx, -39, 170)), 8);  // e5 / e6
}

TEST(SurdFloorDiv, NonPositiveOperandIsDomainError) {
  const SurdContext ctx(19);
  EXPECT_THROW(surd_floor_div(el(ctx, 1, -5), SurdElement::b(ctx)), DomainError);
  EXPECT_THROW(surd_floor_div(SurdElement::b(ctx), el(ctx, 0, 0)), DomainError);
  EXPECT_THROW(surd_floor_div(SurdElement::b(ctx), el(ctx, -1, 0)), DomainError);
}

TEST(SurdFloorDiv, BracketsTheQuotientAndMatchesSearch) {
  std::mt19937_64 rng(2718);
  std::uniform_int_distribution<long> coeff(-2000, 2000);
  std::uniform_int_distribution<long> radicand(2, 5000);
  int checked = 0;
  while (checked < 5000) {
    const long n = radicand(rng);
    if (oracle::is_square(n)) continue;
    const SurdContext ctx(n);
    const auto x = el(ctx, coeff(rng), coeff(rng));
    const auto y = el(ctx, coeff(rng), coeff(rng));
    if (surd_sign(x) <= 0 || surd_sign(y) <= 0) continue;
    const Int q = surd_floor_div(x, y);
    ASSERT_GE(surd_sign(x - q * y), 0);
    ASSERT_EQ(surd_sign(x - (q + 1) * y), -1);
    ASSERT_EQ(q, oracle::floor_div_by_search(x.m(), x.n(), y.m(), y.n(), ctx.radicand()));
    ++checked;
  }
}

TEST(SurdFloorDiv, LargeCoefficients) {
  // 60-digit N with coefficients well past 64 bits.
  const SurdContext ctx(Int("123456789012345678901234567890123456789012345678901234567891"));
  const auto x = SurdElement(ctx, Int("98765432109876543210987"), Int("12345"));
  const auto y = SurdElement(ctx, Int("3"), Int("-7"));
  const Int q = surd_floor_div(x, y);
  EXPECT_GE(surd_sign(x - q * y), 0);
  EXPECT_EQ(surd_sign(x - (q + 1) * y), -1);
  EXPECT_EQ(q, oracle::floor_div_by_search(x.m(), x.n(), y.m(), y.n(), ctx.radicand()));
}

TEST(SurdToString, PositiveTermFirst) {
  const SurdContext ctx(19);
  EXPECT_EQ(to_string(el(ctx, 1, -4)), "a - 4b");
  EXPECT_EQ(to_string(el(ctx, -2, 9)), "9b - 2a");
  EXPECT_EQ(to_string(el(ctx, 326, -1421)), "326a - 1421b");
  EXPECT_EQ(to_string(el(ctx, 0, 1)), "b");
  EXPECT_EQ(to_string(el(ctx, -1, -1)), "-a - b");
  EXPECT_EQ(to_string(el(ctx, 0, 0)), "0");
}

}  // namespace
}  // namespace anth
