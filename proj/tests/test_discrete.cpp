#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "rigidspace/discrete.hpp"
#include "support.hpp"

using namespace rigidspace;

TEST(Mod2, UnsignedExamples)
{
  EXPECT_EQ(mod2_unsigned(7), Bit(1));
  EXPECT_EQ(mod2_unsigned(0), Bit(0));
  EXPECT_EQ(mod2_unsigned(-4), Bit(0));
  EXPECT_EQ(mod2_unsigned(-3), Bit(1));
}

TEST(Mod2, SignedExamples)
{
  EXPECT_EQ(mod2_signed(-3), Trit(-1));
  EXPECT_EQ(mod2_signed(2), Trit(0));
  EXPECT_EQ(mod2_signed(5), Trit(1));
  EXPECT_EQ(mod2_signed(-2), Trit(0));
}

TEST(Mod2, SignedAgreesWithUnsignedInMagnitude)
{
  for (std::int64_t z = -50; z <= 50; ++z)
    EXPECT_EQ(std::abs(mod2_signed(z).value()), mod2_unsigned(z).value()) << z;
}

TEST(Scalars, RejectOutOfRange)
{
  EXPECT_THROW(Bit(2), std::invalid_argument);
  EXPECT_THROW(Bit(-1), std::invalid_argument);
  EXPECT_THROW(Trit(2), std::invalid_argument);
  EXPECT_THROW(CircleResidue(-2.0), std::invalid_argument);
  EXPECT_THROW(CircleResidue(2.5), std::invalid_argument);
  EXPECT_NO_THROW(CircleResidue(2.0));
}

TEST(FieldD, Examples)
{
  EXPECT_EQ(d_add(Bit(1), Bit(1)), Bit(0));
  EXPECT_EQ(d_add(Bit(0), Bit(0)), Bit(0));
  EXPECT_EQ(d_add(Bit(1), Bit(0)), Bit(1));
}

TEST(FieldD, AxiomsExhaustive)
{
  for (int a = 0; a <= 1; ++a)
    for (int b = 0; b <= 1; ++b) {
      EXPECT_EQ(d_add(Bit(a), Bit(b)), d_add(Bit(b), Bit(a)));
      EXPECT_EQ(d_add(Bit(a), Bit(a)), Bit(0));
      for (int c = 0; c <= 1; ++c)
        EXPECT_EQ(d_add(d_add(Bit(a), Bit(b)), Bit(c)), d_add(Bit(a), d_add(Bit(b), Bit(c))));
    }
}

TEST(StructureB, Examples)
{
  EXPECT_EQ(b_add(Trit(1), Trit(1)), Trit(0));
  EXPECT_EQ(b_add(Trit(-1), Trit(0)), Trit(-1));
}

TEST(StructureB, NonAssociativeWitness)
{
  Trit const one(1), minus(-1);
  EXPECT_EQ(b_add(b_add(one, one), minus), Trit(-1));
  EXPECT_EQ(b_add(one, b_add(one, minus)), Trit(1));
}

TEST(StructureB, CommutativeWithIdentity)
{
  for (int a = -1; a <= 1; ++a)
    for (int b = -1; b <= 1; ++b) {
      EXPECT_EQ(b_add(Trit(a), Trit(b)), b_add(Trit(b), Trit(a)));
      EXPECT_EQ(b_add(Trit(a), Trit(b)), mod2_signed(a + b));
    }
  for (int a = -1; a <= 1; ++a)
    EXPECT_EQ(b_add(Trit(a), Trit(0)), Trit(a));
}

TEST(Circle, ReduceExamples)
{
  EXPECT_NEAR(k_reduce(2.5).value(), 0.5, 1e-15);
  EXPECT_NEAR(k_reduce(-2.2).value(), -0.2, 1e-15);
  EXPECT_EQ(k_reduce(2.0).value(), 2.0);
  EXPECT_EQ(k_reduce(4.0).value(), 2.0);
  EXPECT_EQ(k_reduce(-2.0).value(), 0.0);
  EXPECT_EQ(k_reduce(0.0).value(), 0.0);
  EXPECT_THROW(k_reduce(std::nan("")), std::invalid_argument);
  EXPECT_THROW(k_reduce(INFINITY), std::invalid_argument);
}

TEST(Circle, ArithmeticExamples)
{
  EXPECT_NEAR(k_add(CircleResidue(1.5), CircleResidue(1.0)).value(), 0.5, 1e-15);
  for (double x : {0.25, 1.0, 1.75, 2.0})
    EXPECT_TRUE(circle_equal(k_mul(CircleResidue(1.0), CircleResidue(x)), CircleResidue(x)));
}

TEST(Circle, RestrictionsReproduceDAndB)
{
  for (int a = -1; a <= 1; ++a)
    for (int b = -1; b <= 1; ++b) {
      CircleResidue const x(a), y(b);
      EXPECT_EQ(to_trit(k_add(x, y)), b_add(Trit(a), Trit(b))) << a << "," << b;
      EXPECT_EQ(to_trit(k_mul(x, y)), Trit(a * b));
      if (a >= 0 && b >= 0) {
        EXPECT_EQ(to_bit(k_add(x, y)), d_add(Bit(a), Bit(b)));
        EXPECT_EQ(to_bit(k_mul(x, y)), Bit(a * b));
      }
    }
  EXPECT_THROW(to_trit(CircleResidue(0.5)), std::domain_error);
  EXPECT_THROW(to_bit(CircleResidue(-1.0)), std::domain_error);
}

TEST(CircleProperty, ReductionKeepsThePhaseAndIsIdempotent)
{
  prop::Gen gen(11);
  for (int trial = 0; trial < 2000; ++trial) {
    double const x = gen.real(-1000, 1000);
    CircleResidue const r = k_reduce(x);
    EXPECT_GT(r.value(), -2.0);
    EXPECT_LE(r.value(), 2.0);
    EXPECT_EQ(k_reduce(r.value()), r);
    // Absolute error of cos(pi x) for |x| ~ 1e3 is ~1e-13; compare loosely.
    auto const a = std::polar(1.0, std::numbers::pi * x);
    auto const b = std::polar(1.0, std::numbers::pi * r.value());
    EXPECT_LT(std::abs(a - b), 1e-10) << x;
  }
}

TEST(CircleProperty, AddCommutes)
{
  prop::Gen gen(12);
  for (int trial = 0; trial < prop::kTrials; ++trial) {
    CircleResidue const a = k_reduce(gen.real(-5, 5)), b = k_reduce(gen.real(-5, 5));
    EXPECT_TRUE(circle_equal(k_add(a, b), k_add(b, a)));
    EXPECT_TRUE(circle_equal(k_mul(a, b), k_mul(b, a)));
  }
}

TEST(Vectors, AddExamples)
{
  EXPECT_EQ(vec_add(BitVector{1, 0, 1}, BitVector{1, 1, 0}), (BitVector{0, 1, 1}));
  BitVector const v{1, 0, 1, 1};
  EXPECT_EQ(vec_add(v, BitVector(4)), v);
  EXPECT_EQ(vec_add(TritVector{1, -1}, TritVector{1, 1}), (TritVector{0, 0}));
  EXPECT_THROW(vec_add(BitVector{1}, BitVector{1, 0}), std::invalid_argument);
  EXPECT_THROW(BitVector(0), std::invalid_argument);
}

TEST(Vectors, TextRoundTrip)
{
  EXPECT_EQ(to_string(parse_bits("1011")), "1011");
  EXPECT_EQ(to_string(parse_trits("+0-")), "+0-");
  EXPECT_EQ(parse_trits("+0-"), (TritVector{1, 0, -1}));
  EXPECT_THROW(parse_bits("102"), std::invalid_argument);
  EXPECT_THROW(parse_trits("+x"), std::invalid_argument);
}

TEST(VectorsProperty, DIsAnElementaryAbelianGroup)
{
  prop::Gen gen(13);
  for (int trial = 0; trial < prop::kTrials; ++trial) {
    int const n = gen.integer(1, 8);
    BitVector const u = gen.bits(n), v = gen.bits(n), w = gen.bits(n);
    EXPECT_EQ(vec_add(u, v), vec_add(v, u));
    EXPECT_EQ(vec_add(vec_add(u, v), w), vec_add(u, vec_add(v, w)));
    EXPECT_EQ(vec_add(u, u), BitVector(static_cast<std::size_t>(n)));
  }
}
