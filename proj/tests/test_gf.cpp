#include <gtest/gtest.h>

#include <set>

#include "oracle.hpp"
#include "twc/gf.hpp"

using twc::Elem;
using twc::Field;

namespace {

const std::vector<std::pair<std::uint32_t, std::uint32_t>> kExtensionFields = {
    {2, 2}, {2, 3}, {2, 4}, {2, 5}, {3, 2}, {3, 3}, {5, 2}, {7, 2}, {2, 6}};

Elem E(std::uint32_t c) { return Elem{c}; }

}  // namespace

TEST(PrimePower, RecognisesPrimePowers) {
  EXPECT_EQ(twc::prime_power(7), (std::pair<std::uint32_t, std::uint32_t>{7, 1}));
  EXPECT_EQ(twc::prime_power(64), (std::pair<std::uint32_t, std::uint32_t>{2, 6}));
  EXPECT_EQ(twc::prime_power(25), (std::pair<std::uint32_t, std::uint32_t>{5, 2}));
  EXPECT_FALSE(twc::prime_power(6));
  EXPECT_FALSE(twc::prime_power(1));
  EXPECT_FALSE(twc::prime_power(12));
}

TEST(FieldMake, RejectsNonPrimePowers) {
  EXPECT_THROW(Field::make(6), std::invalid_argument);
  EXPECT_THROW(Field::make(1), std::invalid_argument);
  EXPECT_THROW(Field::make(100), std::invalid_argument);
}

TEST(FieldMake, SevenHasPrimitiveThree) {
  const Field f = Field::make(7);
  EXPECT_EQ(f.p(), 7u);
  EXPECT_EQ(f.m(), 1u);
  EXPECT_EQ(f.primitive(), E(3));
}

TEST(FieldMake, FourUsesXSquaredPlusXPlusOne) {
  const Field f = Field::make(4);
  EXPECT_EQ(f.modulus(), (std::vector<std::uint32_t>{1, 1, 1}));
}

TEST(FieldMake, ModulusAndGeneratorMatchSlowSearch) {
  for (auto [p, m] : kExtensionFields) {
    oracle::SlowField slow(p, m);
    const Field f = Field::make(slow.q);
    EXPECT_EQ(f.modulus(), slow.modulus) << "q=" << slow.q;
    EXPECT_EQ(f.primitive().code, slow.smallest_generator()) << "q=" << slow.q;
  }
}

TEST(FieldArithmetic, MatchesSchoolbookPolynomials) {
  for (auto [p, m] : kExtensionFields) {
    oracle::SlowField slow(p, m);
    const Field f = Field::make(slow.q);
    for (std::uint32_t a = 0; a < slow.q; ++a) {
      EXPECT_EQ(f.neg(E(a)).code, slow.neg(a));
      for (std::uint32_t b = 0; b < slow.q; ++b) {
        ASSERT_EQ(f.add(E(a), E(b)).code, slow.add(a, b)) << "q=" << slow.q << " " << a << "+" << b;
        ASSERT_EQ(f.mul(E(a), E(b)).code, slow.mul(a, b)) << "q=" << slow.q << " " << a << "*" << b;
        ASSERT_EQ(f.sub(E(a), E(b)).code, slow.sub(a, b));
      }
      if (a != 0) EXPECT_EQ(f.inv(E(a)).code, slow.inv(a));
    }
  }
}

TEST(FieldArithmetic, PrimeFieldsAgreeWithIntegersModP) {
  for (std::uint32_t p : {5u, 7u, 11u, 13u, 31u, 37u}) {
    const Field f = Field::make(p);
    for (std::uint32_t a = 0; a < p; ++a)
      for (std::uint32_t b = 0; b < p; ++b) {
        ASSERT_EQ(f.add(E(a), E(b)).code, (a + b) % p);
        ASSERT_EQ(f.mul(E(a), E(b)).code, a * b % p);
      }
    EXPECT_EQ(f.from_int(-1).code, p - 1);
    EXPECT_EQ(f.from_int(2 * static_cast<long long>(p) + 3).code, 3u);
  }
}

TEST(FieldArithmetic, DivisionByZeroThrows) {
  const Field f = Field::make(9);
  EXPECT_THROW(f.inv(Field::zero()), std::domain_error);
  EXPECT_THROW(f.div(Field::one(), Field::zero()), std::domain_error);
  EXPECT_THROW(f.dlog(Field::zero()), std::domain_error);
  EXPECT_THROW(f.at(9), std::out_of_range);
}

TEST(DiscreteLog, ExamplesInF7) {
  const Field f = Field::make(7);
  EXPECT_EQ(f.dlog(Field::one()), 0u);
  EXPECT_EQ(f.dlog(E(2)), 2u);
  EXPECT_EQ(f.dlog(E(6)), 3u);
  EXPECT_EQ(f.r_class(Field::one()), 0);
  EXPECT_EQ(f.r_class(E(6)), 0);
  EXPECT_EQ(f.r_class(E(2)), 2);
}

TEST(DiscreteLog, RoundTripsAndPowers) {
  for (std::uint32_t q : {16u, 25u, 27u, 49u, 64u}) {
    const Field f = Field::make(q);
    for (Elem x : f.nonzero()) EXPECT_EQ(f.exp(f.dlog(x)), x);
    EXPECT_EQ(f.exp(-1), f.inv(f.primitive()));
    EXPECT_EQ(f.pow(f.primitive(), q - 1), Field::one());
    EXPECT_EQ(f.pow(Field::zero(), 0), Field::one());
  }
}

TEST(Cubes, ExamplesInF7AndF8) {
  const Field f7 = Field::make(7);
  EXPECT_TRUE(f7.is_cube(Field::one()));
  EXPECT_TRUE(f7.is_cube(E(6)));
  EXPECT_FALSE(f7.is_cube(E(2)));
  EXPECT_EQ(f7.cube_roots(Field::one()), (std::vector<Elem>{E(1), E(2), E(4)}));
  EXPECT_TRUE(f7.cube_roots(E(2)).empty());
  EXPECT_EQ(Field::make(5).cube_roots(Field::one()), (std::vector<Elem>{E(1)}));
  const Field f8 = Field::make(8);
  for (Elem x : f8.nonzero()) EXPECT_TRUE(f8.is_cube(x));
}

TEST(Cubes, AgreeWithEnumeration) {
  for (auto [p, m] : kExtensionFields) {
    oracle::SlowField slow(p, m);
    const Field f = Field::make(slow.q);
    for (std::uint32_t x = 1; x < slow.q; ++x) {
      EXPECT_EQ(f.is_cube(E(x)), slow.is_kth_power(x, 3)) << "q=" << slow.q << " x=" << x;
      EXPECT_EQ(f.is_power(E(x), 4), slow.is_kth_power(x, 4)) << "q=" << slow.q << " x=" << x;
      std::vector<Elem> roots;
      for (std::uint32_t y = 1; y < slow.q; ++y)
        if (slow.pow(y, 3) == x) roots.push_back(E(y));
      EXPECT_EQ(f.cube_roots(E(x)), roots);
    }
  }
}

TEST(QuadraticCharacter, ExamplesInF7) {
  const Field f = Field::make(7);
  EXPECT_EQ(f.eta(Field::zero()), 0);
  EXPECT_EQ(f.eta(E(2)), 1);
  EXPECT_EQ(f.eta(E(3)), -1);
  EXPECT_EQ(f.sqrt(Field::zero()), (std::vector<Elem>{E(0)}));
  EXPECT_EQ(f.sqrt(E(2)), (std::vector<Elem>{E(3), E(4)}));
  EXPECT_TRUE(f.sqrt(E(3)).empty());
  EXPECT_THROW(Field::make(8).eta(Field::one()), std::domain_error);
}

TEST(QuadraticCharacter, SquareRootsSquareBack) {
  for (std::uint32_t q : {9u, 25u, 27u, 49u}) {
    const Field f = Field::make(q);
    for (Elem x : f.nonzero()) {
      const auto r = f.sqrt(x);
      EXPECT_EQ(r.size(), f.eta(x) == 1 ? 2u : 0u);
      for (Elem y : r) EXPECT_EQ(f.mul(y, y), x);
    }
  }
}

TEST(Trace, MatchesFrobeniusSum) {
  for (auto [p, m] : kExtensionFields) {
    oracle::SlowField slow(p, m);
    const Field f = Field::make(slow.q);
    for (std::uint32_t x = 0; x < slow.q; ++x) EXPECT_EQ(f.abs_trace(E(x)), slow.trace(x)) << "q=" << slow.q;
  }
}

TEST(Trace, OfOneDependsOnDegreeParity) {
  EXPECT_EQ(Field::make(16).abs_trace(Field::one()), 0u);
  EXPECT_EQ(Field::make(64).abs_trace(Field::one()), 0u);
  EXPECT_EQ(Field::make(8).abs_trace(Field::one()), 1u);
  EXPECT_EQ(Field::make(32).abs_trace(Field::one()), 1u);
  EXPECT_EQ(Field::make(16).abs_trace(Field::zero()), 0u);
}

TEST(GeneratorRank, SelectsAnotherPrimitiveElement) {
  const Field a = Field::make(13, 0);
  const Field b = Field::make(13, 1);
  EXPECT_EQ(a.primitive(), E(2));
  EXPECT_EQ(b.primitive(), E(6));
  EXPECT_THROW(Field::make(7, 2), std::invalid_argument);  // F_7^* has two generators
}

TEST(FieldElement, OperatorsAndFieldMixing) {
  const Field f = Field::make(7);
  const twc::FieldElement x(f, 3), y(f, 5);
  EXPECT_EQ((x + y).elem(), E(1));
  EXPECT_EQ((x * y).elem(), E(1));
  EXPECT_EQ((x / y).elem(), f.div(E(3), E(5)));
  EXPECT_EQ((-x).elem(), E(4));
  EXPECT_EQ(x.pow(6).elem(), E(1));
  const Field g = Field::make(7);
  EXPECT_THROW((void)(x + twc::FieldElement(g, 1)), std::invalid_argument);
}

TEST(FieldElements, EnumerationOrder) {
  const Field f = Field::make(9);
  const auto all = f.elements();
  ASSERT_EQ(all.size(), 9u);
  for (std::uint32_t i = 0; i < 9; ++i) EXPECT_EQ(all[i].code, i);
  EXPECT_EQ(f.nonzero().size(), 8u);
  EXPECT_EQ(f.xi(), 0);
  EXPECT_EQ(Field::make(8).xi(), -1);
  EXPECT_EQ(Field::make(13).xi(), 1);
}
