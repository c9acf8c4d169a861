#include <gtest/gtest.h>

#include "momcert/chebyshev.hpp"

namespace momcert {
namespace {

RationalPoly ints(std::initializer_list<long> c) {
    std::vector<Rational> v(c.begin(), c.end());
    return RationalPoly(std::move(v));
}

TEST(Chebyshev, SmallIndices) {
    EXPECT_EQ(chebyshev(0), ints({2}));
    EXPECT_EQ(chebyshev(1), ints({0, 1}));
    EXPECT_EQ(chebyshev(2), ints({-2, 0, 1}));
    EXPECT_EQ(chebyshev(3), ints({0, -3, 0, 1}));
    EXPECT_EQ(chebyshev(6), ints({-2, 0, 9, 0, -6, 0, 1}));
    EXPECT_EQ(chebyshev(6), compose(chebyshev(2), chebyshev(3)));
    EXPECT_EQ(chebyshev(6).leading_coeff(), Rational(1));
}

TEST(Chebyshev, NotTheCosineNormalization) {
    // Classical T_2 = 2z^2 - 1 would give 1 at z = 1; the monic one gives -1.
    EXPECT_EQ(eval(chebyshev(2), Rational(1)), Rational(-1));
    EXPECT_EQ(eval(chebyshev(2), Rational(2)), Rational(2));  // z = 1 + 1/1
}

TEST(Chebyshev, CompositionLaw) {
    for (unsigned m = 1; m <= 60; ++m) {
        for (unsigned n = 1; m * n <= 60; ++n) {
            ASSERT_EQ(compose(chebyshev(m), chebyshev(n)), chebyshev(m * n)) << m << "," << n;
        }
    }
}

TEST(Chebyshev, ParityMonicAndConstantTerm) {
    const RationalPoly minus_z = ints({0, -1});
    for (unsigned k = 1; k <= 30; ++k) {
        const auto t = chebyshev(k);
        EXPECT_TRUE(t.is_monic()) << k;
        EXPECT_EQ(t.degree(), k);
        const auto reflected = compose(t, minus_z);
        EXPECT_EQ(reflected, k % 2 == 0 ? t : -t) << k;
        const Rational c0 = t.coeff(0, Rational(0));
        if (k % 2 == 1) {
            EXPECT_TRUE(c0.is_zero()) << k;
        } else {
            EXPECT_TRUE(c0 == Rational(2) || c0 == Rational(-2)) << k;
        }
    }
}

TEST(Chebyshev, IdentityExamples) {
    const auto c12 = CyclotomicContext::make(12);
    EXPECT_EQ(eval(chebyshev(2), zeta(c12, 1) + zeta(c12, -1)), embed_rational(c12, 1));
    EXPECT_TRUE(verify_halfplane_identity(2, c12, 1));
    EXPECT_TRUE(verify_halfplane_identity(1, c12, 7));
    EXPECT_TRUE(eval(chebyshev(3), zeta(c12, 5) + zeta(c12, -5)).is_zero());
    EXPECT_TRUE(verify_halfplane_identity(3, c12, 5));
    EXPECT_THROW(verify_halfplane_identity(0, c12, 1), std::invalid_argument);
}

TEST(Chebyshev, IdentityAtRootsOfUnity) {
    for (std::uint64_t order : {5, 8, 12, 30}) {
        const auto ctx = CyclotomicContext::make(order);
        for (unsigned k = 1; k <= 20; ++k) {
            for (std::int64_t t = 0; t < static_cast<std::int64_t>(order); ++t) {
                ASSERT_TRUE(verify_halfplane_identity(k, ctx, t)) << k << " " << order << " " << t;
            }
        }
    }
}

}  // namespace
}  // namespace momcert
