#include <gtest/gtest.h>

#include "splitg2/field.hpp"
#include "test_support.hpp"

using namespace splitg2;
using splitg2::testing::S;
using splitg2::testing::random_scalar;
using splitg2::testing::random_nonzero;

namespace {

const FieldSpec kQ = FieldSpec::rationals();
const FieldSpec kF7 = FieldSpec::prime(7);

TEST(FieldSpec, ParsesFlagSyntax) {
  EXPECT_EQ(FieldSpec::parse("q"), kQ);
  EXPECT_EQ(FieldSpec::parse("fp:7"), kF7);
  EXPECT_EQ(FieldSpec::parse("fp:101").modulus(), 101u);
  EXPECT_EQ(kF7.to_string(), "fp:7");
  EXPECT_EQ(kQ.characteristic(), 0u);
}

TEST(FieldSpec, RejectsCompositeAndDegenerateModuli) {
  for (std::uint64_t p : {0u, 1u, 4u, 9u, 91u}) {
    try {
      FieldSpec::prime(p);
      FAIL() << p;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::InvalidModulus);
    }
  }
  EXPECT_THROW(FieldSpec::parse("fp:"), Error);
  EXPECT_THROW(FieldSpec::parse("fp:7x"), Error);
  EXPECT_THROW(FieldSpec::parse("r"), Error);
  EXPECT_THROW(FieldSpec::prime(4294967311ull), Error);  // prime, but too large
}

TEST(Scalar, AddExamples) {
  EXPECT_EQ(scalar_add(S("1/2"), S("1/3")), S("5/6"));
  EXPECT_EQ(scalar_add(S(kF7, "4"), S(kF7, "5")), S(kF7, "2"));
  EXPECT_EQ(scalar_add(S("-7/3"), Scalar::zero(kQ)), S("-7/3"));
}

TEST(Scalar, MulExamples) {
  EXPECT_EQ(scalar_mul(S("2/3"), S("3/4")), S("1/2"));
  EXPECT_EQ(scalar_mul(S(kF7, "3"), S(kF7, "5")), S(kF7, "1"));
  EXPECT_EQ(scalar_mul(S("-7/3"), Scalar::one(kQ)), S("-7/3"));
}

TEST(Scalar, InvExamples) {
  EXPECT_EQ(scalar_inv(S("2/5")), S("5/2"));
  EXPECT_EQ(scalar_inv(S(kF7, "3")), S(kF7, "5"));
  EXPECT_EQ(scalar_inv(Scalar::one(kQ)), Scalar::one(kQ));
  EXPECT_EQ(scalar_inv(Scalar::one(kF7)), Scalar::one(kF7));
}

TEST(Scalar, InverseOfZeroIsDivisionByZero) {
  for (const FieldSpec& f : {kQ, kF7}) {
    try {
      scalar_inv(Scalar::zero(f));
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::DivisionByZero);
    }
  }
}

TEST(Scalar, MixedFieldsAreRejected) {
  try {
    scalar_add(Scalar::one(kQ), Scalar::one(kF7));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::FieldMismatch);
  }
  EXPECT_THROW(scalar_mul(Scalar::one(FieldSpec::prime(5)), Scalar::one(kF7)), Error);
}

TEST(Scalar, CanonicalRepresentation) {
  EXPECT_EQ(S("4/6").to_string(), "2/3");
  EXPECT_EQ(S("-4/6").to_string(), "-2/3");
  EXPECT_EQ(S("-0").to_string(), "0");
  EXPECT_EQ(S("6/3").to_string(), "2");
  EXPECT_EQ(S(kF7, "-1").to_string(), "6");
  EXPECT_EQ(S(kF7, "15").to_string(), "1");
  EXPECT_EQ(S(kF7, "1/3").to_string(), "5");
  EXPECT_TRUE(S("6/3").is_integer());
  EXPECT_FALSE(S("1/3").is_integer());
}

TEST(Scalar, ParseErrors) {
  for (const char* bad : {"", "-", "1/", "/2", "1.5", "1/0", "x", "1 ", "--1"}) {
    try {
      S(bad);
      FAIL() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::ParseError) << bad;
    }
  }
  EXPECT_THROW(S(kF7, "1/7"), Error);
}

TEST(Scalar, SmallCharacteristics) {
  const FieldSpec f2 = FieldSpec::prime(2);
  const FieldSpec f3 = FieldSpec::prime(3);
  EXPECT_EQ(-Scalar::one(f2), Scalar::one(f2));
  EXPECT_TRUE(Scalar::from_int(f3, 3).is_zero());
  EXPECT_TRUE((Scalar::one(f3) + Scalar::one(f3) + Scalar::one(f3)).is_zero());
  EXPECT_FALSE((Scalar::one(kQ) + Scalar::one(kQ) + Scalar::one(kQ)).is_zero());
}

TEST(Scalar, LargeIntermediatesStayExact) {
  Scalar x = S("3/7");
  for (int i = 0; i < 12; ++i) x = x * x + S("1/11");
  // Denominators grow far past 64 bits; subtracting the same value must cancel.
  EXPECT_GT(x.to_string().size(), 100u);
  EXPECT_TRUE((x - x).is_zero());
  EXPECT_EQ(x * x.inv(), Scalar::one(kQ));
}

class FieldAxioms : public ::testing::TestWithParam<std::uint64_t> {
 protected:
  FieldSpec field() const { return GetParam() == 0 ? kQ : FieldSpec::prime(GetParam()); }
};

TEST_P(FieldAxioms, HoldOnRandomTriples) {
  const FieldSpec f = field();
  std::mt19937_64 rng(1234 + GetParam());
  const Scalar zero = Scalar::zero(f);
  const Scalar one = Scalar::one(f);
  for (int trial = 0; trial < 300; ++trial) {
    const Scalar a = random_scalar(f, rng);
    const Scalar b = random_scalar(f, rng);
    const Scalar c = random_scalar(f, rng);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a + zero, a);
    EXPECT_EQ(a * one, a);
    EXPECT_TRUE((a + (-a)).is_zero());
    if (!a.is_zero()) {
      EXPECT_EQ(a * a.inv(), one);
    }
  }
}

TEST_P(FieldAxioms, CanonicalizationIsIdempotent) {
  const FieldSpec f = field();
  std::mt19937_64 rng(99 + GetParam());
  for (int trial = 0; trial < 200; ++trial) {
    const Scalar a = random_scalar(f, rng) * random_nonzero(f, rng).inv();
    const Scalar again = Scalar::parse(f, a.to_string());
    EXPECT_EQ(again, a);
    EXPECT_EQ(again.to_string(), a.to_string());
  }
}

INSTANTIATE_TEST_SUITE_P(Fields, FieldAxioms, ::testing::Values(0u, 2u, 3u, 7u, 101u));

}  // namespace
