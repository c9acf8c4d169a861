#include <cmath>
#include <complex>

#include <gtest/gtest.h>

#include "momcert/cyclotomic.hpp"
#include "momcert/rational.hpp"
#include "support/random_poly.hpp"

namespace momcert {
namespace {

using testing::Gen;

RationalPoly ints(std::initializer_list<long> c) {
    std::vector<Rational> v(c.begin(), c.end());
    return RationalPoly(std::move(v));
}

TEST(Rational, CanonicalForm) {
    EXPECT_EQ(Rational(6, -4).to_string(), "-3/2");
    EXPECT_EQ(Rational(0, 7).to_string(), "0");
    EXPECT_EQ(Rational(0, 7).denominator(), 1);
    EXPECT_EQ(Rational(10, 5).to_string(), "2");
}

TEST(Rational, ParseAndPrint) {
    EXPECT_EQ(Rational::parse("-6/4"), Rational(-3, 2));
    EXPECT_EQ(Rational::parse("+7"), Rational(7));
    EXPECT_EQ(Rational::parse("123456789012345678901234567890").to_string(), "123456789012345678901234567890");
    EXPECT_THROW(Rational::parse("1/0"), std::invalid_argument);
    EXPECT_THROW(Rational::parse("1/-2"), std::invalid_argument);
    EXPECT_THROW(Rational::parse("1.5"), std::invalid_argument);
    EXPECT_THROW(Rational::parse(""), std::invalid_argument);
    EXPECT_THROW(Rational::parse("abc"), std::invalid_argument);
}

TEST(Rational, DivisionByZero) {
    EXPECT_THROW(Rational(1) / Rational(0), std::domain_error);
    EXPECT_THROW(Rational(0).inverse(), std::domain_error);
}

TEST(Cyclotomic, PolynomialBaseCases) {
    EXPECT_EQ(cyclotomic_polynomial(1), ints({-1, 1}));
    EXPECT_EQ(cyclotomic_polynomial(2), ints({1, 1}));
    EXPECT_EQ(cyclotomic_polynomial(4), ints({1, 0, 1}));
    EXPECT_EQ(cyclotomic_polynomial(12), ints({1, 0, -1, 0, 1}));
    EXPECT_THROW(cyclotomic_polynomial(0), std::invalid_argument);
}

TEST(Cyclotomic, PolynomialInvariants) {
    for (std::uint64_t k = 1; k <= 60; ++k) {
        const auto phi = cyclotomic_polynomial(k);
        EXPECT_TRUE(phi.is_monic()) << k;
        EXPECT_EQ(phi.degree(), euler_phi(k)) << k;
        const auto [q, r] = divmod(RationalPoly::monomial(Rational(1), k) - ints({1}), phi);
        EXPECT_TRUE(r.is_zero()) << k;
    }
}

TEST(Cyclotomic, Totient) {
    EXPECT_EQ(euler_phi(1), 1U);
    EXPECT_EQ(euler_phi(12), 4U);
    EXPECT_EQ(euler_phi(30), 8U);
    EXPECT_EQ(euler_phi(84), 24U);
    EXPECT_EQ(euler_phi(97), 96U);
}

TEST(Cyclotomic, ZetaExamples) {
    const auto c4 = CyclotomicContext::make(4);
    EXPECT_EQ(zeta(c4, 1).coords(), (std::vector<Rational>{0, 1}));
    EXPECT_EQ(zeta(c4, 2).coords(), (std::vector<Rational>{-1, 0}));
    EXPECT_EQ(zeta(c4, 0), embed_rational(c4, 1));
    EXPECT_EQ(zeta(c4, -1), zeta(c4, 3));

    const auto c12 = CyclotomicContext::make(12);
    EXPECT_EQ(zeta(c12, 6), embed_rational(c12, -1));
}

TEST(Cyclotomic, ZetaOrder) {
    for (std::uint64_t k : {3, 4, 5, 8, 12, 30}) {
        const auto ctx = CyclotomicContext::make(k);
        const CycElem z = zeta(ctx, 1);
        EXPECT_TRUE(z.pow(static_cast<std::int64_t>(k)).is_one()) << k;
        for (std::uint64_t j = 1; j < k; ++j) EXPECT_FALSE(z.pow(static_cast<std::int64_t>(j)).is_one()) << k;
        EXPECT_TRUE(eval(ctx->modulus(), z).is_zero()) << k;
        for (std::int64_t t = -15; t <= 15; ++t) EXPECT_TRUE((zeta(ctx, t) * zeta(ctx, -t)).is_one());
    }
}

TEST(Cyclotomic, ArithmeticExamples) {
    const auto c4 = CyclotomicContext::make(4);
    EXPECT_EQ(zeta(c4, 1) * zeta(c4, 1), embed_rational(c4, -1));
    EXPECT_EQ(zeta(c4, 1).inverse(), -zeta(c4, 1));
    EXPECT_EQ(embed_rational(c4, 2).inverse(), embed_rational(c4, Rational(1, 2)));
    EXPECT_EQ(embed_rational(c4, Rational(3, 2)).coords(), (std::vector<Rational>{Rational(3, 2), 0}));

    const auto c3 = CyclotomicContext::make(3);
    const CycElem one = embed_rational(c3, 1);
    EXPECT_TRUE(((one + zeta(c3, 1)) + zeta(c3, 2)).is_zero());
    EXPECT_EQ((one + zeta(c3, 1)).inverse(), -zeta(c3, 1));

    const CycElem x = zeta(c3, 1) * Rational(5);
    EXPECT_EQ(x + CycElem(c3), x);
}

TEST(Cyclotomic, Errors) {
    const auto c4 = CyclotomicContext::make(4);
    const auto c3 = CyclotomicContext::make(3);
    EXPECT_THROW(CycElem(c4).inverse(), std::domain_error);
    EXPECT_THROW(zeta(c4, 1) + zeta(c3, 1), std::invalid_argument);
    EXPECT_THROW(zeta(c4, 1) * zeta(c3, 1), std::invalid_argument);
    EXPECT_THROW(CyclotomicContext::make(0), std::invalid_argument);
    EXPECT_NE(zeta(c4, 0), zeta(c3, 0));
}

TEST(Cyclotomic, EmbedIsHomomorphism) {
    Gen gen(11);
    const auto ctx = CyclotomicContext::make(12);
    for (int i = 0; i < 50; ++i) {
        const Rational p = gen.rational(), q = gen.rational();
        EXPECT_EQ(embed_rational(ctx, p) + embed_rational(ctx, q), embed_rational(ctx, p + q));
        EXPECT_EQ(embed_rational(ctx, p) * embed_rational(ctx, q), embed_rational(ctx, p * q));
    }
    EXPECT_TRUE(embed_rational(ctx, 0).is_zero());
    EXPECT_TRUE(embed_rational(ctx, 1).is_one());
}

TEST(Cyclotomic, FieldAxiomsOnRandomElements) {
    Gen gen(2024);
    for (std::uint64_t k : {3, 4, 5, 8, 12, 30}) {
        const auto ctx = CyclotomicContext::make(k);
        for (int i = 0; i < 200; ++i) {
            const CycElem x = gen.cyc(ctx, 4), y = gen.cyc(ctx, 4), z = gen.cyc(ctx, 4);
            ASSERT_EQ((x * y) * z, x * (y * z)) << k;
            ASSERT_EQ((x + y) + z, x + (y + z)) << k;
            ASSERT_EQ(x * (y + z), x * y + x * z) << k;
            ASSERT_EQ(x * y, y * x) << k;
            if (!x.is_zero()) {
                ASSERT_TRUE((x * x.inverse()).is_one()) << k;
            }
            ASSERT_TRUE((x - x).is_zero());
        }
    }
}

TEST(Cyclotomic, ToComplexExamples) {
    const auto c4 = CyclotomicContext::make(4);
    const auto z4 = to_complex(zeta(c4, 1));
    EXPECT_NEAR(z4.real(), 0.0, 1e-12);
    EXPECT_NEAR(z4.imag(), 1.0, 1e-12);

    const auto c12 = CyclotomicContext::make(12);
    const auto s = to_complex(zeta(c12, 1) + zeta(c12, -1));
    EXPECT_NEAR(s.real(), std::sqrt(3.0), 1e-12);
    EXPECT_NEAR(s.imag(), 0.0, 1e-12);

    const auto third = to_complex(embed_rational(c12, Rational(1, 3)));
    EXPECT_NEAR(third.real(), 1.0 / 3.0, 1e-15);
}

TEST(Cyclotomic, ToComplexOverflow) {
    const auto c4 = CyclotomicContext::make(4);
    mpz_class huge;
    mpz_ui_pow_ui(huge.get_mpz_t(), 10, 400);
    EXPECT_THROW(to_complex(embed_rational(c4, Rational(huge))), std::overflow_error);
}

TEST(Cyclotomic, ToComplexIsHomomorphism) {
    Gen gen(7);
    for (std::uint64_t k : {5, 8, 12, 30}) {
        const auto ctx = CyclotomicContext::make(k);
        for (int i = 0; i < 50; ++i) {
            const CycElem x = gen.cyc(ctx, 3), y = gen.cyc(ctx, 3);
            EXPECT_LT(std::abs(to_complex(x * y) - to_complex(x) * to_complex(y)), 1e-9);
            EXPECT_LT(std::abs(to_complex(x + y) - to_complex(x) - to_complex(y)), 1e-9);
        }
    }
}

}  // namespace
}  // namespace momcert
