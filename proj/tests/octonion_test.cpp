#include <gtest/gtest.h>

#include "octosieve/algebra.hpp"
#include "octosieve/octonion.hpp"
#include "octosieve/random.hpp"

namespace octosieve {
namespace {

TEST(Octonion, ConjugateKeepsRealPart) {
    EXPECT_EQ(conjugate(Octonion::real(1.0)), Octonion::real(1.0));
    EXPECT_EQ(conjugate(Octonion::unit(5)), -Octonion::unit(5));
}

TEST(Octonion, ConjugateTimesSelfIsNormSquared) {
    IntSampler sampler(11);
    for (int n = 0; n < 16; ++n) {
        for (int i = 0; i < 50; ++i) {
            const IntOctonion a = sampler.octonion();
            EXPECT_EQ(multiply(conjugate(a), a, AlgebraId(n)), IntOctonion::real(norm_squared(a)));
        }
    }
}

TEST(Octonion, Norm) {
    EXPECT_EQ(norm(Octonion::real(1.0)), 1.0);
    EXPECT_EQ(norm(Octonion({0, 3, 4, 0, 0, 0, 0, 0})), 5.0);
    EXPECT_EQ(norm(Octonion{}), 0.0);
}

TEST(Octonion, NormOfProductExample) {
    const Octonion a({1, 1, 0, 0, 0, 0, 0, 0});
    const Octonion b({0, 1, 1, 0, 0, 0, 0, 0});
    for (const AlgebraId n : all_algebras()) {
        EXPECT_DOUBLE_EQ(norm(multiply(a, b, n)), 2.0);
        EXPECT_DOUBLE_EQ(norm(multiply(a, b, n)), norm(a) * norm(b));
    }
}

TEST(Octonion, NormMultiplicativeExactly) {
    IntSampler sampler(12, 1 << 10);
    for (int n = 0; n < 16; ++n) {
        for (int i = 0; i < 1000; ++i) {
            const IntOctonion a = sampler.octonion();
            const IntOctonion b = sampler.octonion();
            ASSERT_EQ(norm_squared(multiply(a, b, AlgebraId(n))), norm_squared(a) * norm_squared(b)) << "rule " << n;
        }
    }
}

TEST(Octonion, InverseExamples) {
    EXPECT_EQ(inverse(Octonion::unit(1), AlgebraId(0)), -Octonion::unit(1));
    EXPECT_EQ(inverse(Octonion::real(2.0), AlgebraId(3)), Octonion::real(0.5));
}

TEST(Octonion, InverseIsTwoSided) {
    IntSampler sampler(13);
    for (const AlgebraId n : all_algebras()) {
        for (int i = 0; i < 100; ++i) {
            const Octonion a = sampler.octonion().cast<double>();
            if (a.is_zero()) continue;
            const Octonion left = multiply(inverse(a, n), a, n);
            const Octonion right = multiply(a, inverse(a, n), n);
            for (std::size_t k = 0; k < 8; ++k) {
                EXPECT_NEAR(left[k], k == 0 ? 1.0 : 0.0, 1e-12);
                EXPECT_NEAR(right[k], k == 0 ? 1.0 : 0.0, 1e-12);
            }
        }
    }
}

TEST(Octonion, InverseOfZeroThrows) {
    EXPECT_THROW((void)inverse(Octonion{}, AlgebraId(0)), DivisionByZero);
}

TEST(Octonion, FiniteCheck) {
    EXPECT_TRUE(is_finite(Octonion::unit(2)));
    Octonion bad;
    bad[3] = std::numeric_limits<double>::infinity();
    EXPECT_FALSE(is_finite(bad));
}

}  // namespace
}  // namespace octosieve
