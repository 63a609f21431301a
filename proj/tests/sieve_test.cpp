#include <gtest/gtest.h>

#include "octosieve/expr.hpp"
#include "octosieve/random.hpp"
#include "octosieve/sieve.hpp"

namespace octosieve {
namespace {

// Oracle: the transform as the literal double sum 1/4 sum_j b_jk f[j], with
// the sign computed by counting shared bits one at a time.
int oracle_sign(unsigned j, unsigned k) {
    int shared = 0;
    for (int bit = 0; bit < 4; ++bit) shared += ((j >> bit) & 1) && ((k >> bit) & 1);
    return shared % 2 == 0 ? 1 : -1;
}

std::array<Octonion, 16> oracle_transform(const std::array<Octonion, 16>& f) {
    std::array<Octonion, 16> g{};
    for (unsigned k = 0; k < 16; ++k) {
        for (unsigned j = 0; j < 16; ++j) g[k] += static_cast<double>(oracle_sign(j, k)) * f[j];
        g[k] *= 0.25;
    }
    return g;
}

FunctionFamily random_family(IntSampler& s) {
    FunctionFamily f;
    for (auto& x : f.values) x = s.octonion().cast<double>();
    return f;
}

TEST(SignEntry, Examples) {
    for (unsigned k = 0; k < 16; ++k) EXPECT_EQ(sign_entry(0, k), 1);
    EXPECT_EQ(sign_entry(1, 1), -1);
    EXPECT_EQ(sign_entry(6, 3), -1);
    for (unsigned j = 0; j < 16; ++j) {
        for (unsigned k = 0; k < 16; ++k) {
            EXPECT_EQ(sign_entry(j, k), oracle_sign(j, k));
            EXPECT_EQ(sign_entry(j, k), sign_entry(k, j));
        }
    }
}

TEST(SignMatrix, RowsFromGenerators) {
    const std::array<std::array<int, 16>, 4> printed{{
        {1, 1, 1, 1, 1, 1, 1, 1, -1, -1, -1, -1, -1, -1, -1, -1},
        {1, 1, 1, 1, -1, -1, -1, -1, 1, 1, 1, 1, -1, -1, -1, -1},
        {1, 1, -1, -1, 1, 1, -1, -1, 1, 1, -1, -1, 1, 1, -1, -1},
        {1, -1, 1, -1, 1, -1, 1, -1, 1, -1, 1, -1, 1, -1, 1, -1},
    }};
    for (int n = 0; n < 4; ++n) EXPECT_EQ(row_generator(n), printed[n]);
    const SignMatrix b = sign_matrix();
    for (unsigned k = 0; k < 16; ++k) {
        for (unsigned j = 0; j < 16; ++j) {
            int expect = 1;
            for (int n = 0; n < 4; ++n) {
                if (Automorphism(k).uses(n)) expect *= printed[n][j];
            }
            EXPECT_EQ(b(j, k), expect);
        }
    }
}

TEST(SignMatrix, QuarterSquaredIsIdentity) {
    const SignMatrix b = sign_matrix();
    for (int i = 0; i < 16; ++i) {
        for (int l = 0; l < 16; ++l) {
            int s = 0;
            for (int k = 0; k < 16; ++k) s += b(i, k) * b(k, l);
            EXPECT_EQ(s, i == l ? 16 : 0);
        }
    }
}

TEST(Sieve, MatchesDirectSum) {
    IntSampler sampler(41, 1 << 10);
    for (int i = 0; i < 50; ++i) {
        const FunctionFamily f = random_family(sampler);
        EXPECT_EQ(sieve(f).values, oracle_transform(f.values));
    }
}

TEST(Sieve, ConstantFamily) {
    const Assignment env{{"a", Octonion({1, 2, 3, 4, 5, 6, 7, 8})}, {"b", Octonion({0, -1, 0, 2, 0, 0, 5, 1})}};
    const FunctionFamily f = evaluate_family(parse("a+b"), env);
    const DistanceFamily g = sieve(f);
    EXPECT_EQ(g.values[0], 4.0 * f.values[0]);
    for (int k = 1; k < 16; ++k) EXPECT_TRUE(g.values[k].is_zero()) << k;
}

TEST(Sieve, SymmetricProductCancels) {
    IntSampler sampler(42);
    const Expr e = parse("a*b + b*a");
    for (int i = 0; i < 20; ++i) {
        const DistanceFamily g = sieve(evaluate_family(e, sampler.assignment({"a", "b"})));
        EXPECT_FALSE(first_nonzero_distance(g));
    }
}

TEST(Sieve, PlainProductLeaksIntoDistances) {
    const Assignment env{{"a", Octonion({1, 2, -1, 0, 3, 0, 1, 2})}, {"b", Octonion({0, 1, 1, -2, 0, 1, 0, 3})}};
    const FunctionFamily f = evaluate_family(parse("a*b"), env);
    const DistanceFamily g = sieve(f);
    EXPECT_TRUE(first_nonzero_distance(g));
    EXPECT_EQ(g.values, oracle_transform(f.values));
}

TEST(Unsieve, Examples) {
    EXPECT_EQ(unsieve(DistanceFamily{}), FunctionFamily{});
    DistanceFamily d;
    const Octonion value({1, -2, 0, 3, 0, 0, 4, -1});
    d.values[0] = 4.0 * value;
    for (const auto& x : unsieve(d).values) EXPECT_EQ(x, value);
}

TEST(Unsieve, InvolutionBothWays) {
    IntSampler sampler(43, 1 << 10);
    for (int i = 0; i < 100; ++i) {
        const FunctionFamily f = random_family(sampler);
        EXPECT_EQ(unsieve(sieve(f)), f);
        const DistanceFamily d{random_family(sampler).values};
        EXPECT_EQ(sieve(unsieve(d)), d);
    }
}

TEST(Sieve, XorEquivariance) {
    IntSampler sampler(44, 1 << 10);
    for (int i = 0; i < 20; ++i) {
        const FunctionFamily f = random_family(sampler);
        const DistanceFamily g = sieve(f);
        for (unsigned m = 0; m < 16; ++m) {
            const DistanceFamily h = sieve(permute(f, m));
            for (unsigned k = 0; k < 16; ++k) {
                EXPECT_EQ(h.values[k], static_cast<double>(sign_entry(m, k)) * g.values[k]);
            }
        }
    }
}

TEST(IsInvariant, Verdicts) {
    for (const char* text : {"a*a", "a+b", "a*b + b*a", "conj(a)*a", "3"}) {
        const auto v = is_invariant(parse(text), default_trials, 7);
        EXPECT_TRUE(v.invariant) << text;
        EXPECT_EQ(v.trials, default_trials);
        EXPECT_FALSE(v.witness);
    }
    const auto v = is_invariant(parse("a*b"), default_trials, 7);
    ASSERT_FALSE(v.invariant);
    ASSERT_TRUE(v.witness);
    EXPECT_GT(v.witness->index, 0);
    EXPECT_FALSE(v.witness->distance.is_zero());
    // The witness reproduces.
    const auto g = sieve(evaluate_family(parse("a*b"), v.witness->assignment));
    EXPECT_EQ(g.values[v.witness->index], v.witness->distance);
}

TEST(IsInvariant, DeterministicForSeed) {
    const auto a = is_invariant(parse("(a*b)*c"), 10, 99);
    const auto b = is_invariant(parse("(a*b)*c"), 10, 99);
    ASSERT_TRUE(a.witness && b.witness);
    EXPECT_EQ(a.witness->assignment, b.witness->assignment);
    EXPECT_EQ(a.witness->distance, b.witness->distance);
}

TEST(IsInvariant, Errors) {
    EXPECT_THROW((void)is_invariant(parse("a"), 0, 1), PreconditionViolation);
}

}  // namespace
}  // namespace octosieve
