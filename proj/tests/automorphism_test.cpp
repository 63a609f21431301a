#include <map>
#include <set>

#include <gtest/gtest.h>

#include "octosieve/algebra.hpp"
#include "octosieve/automorphism.hpp"

namespace octosieve {
namespace {

const Automorphism T0 = Automorphism::generator(0);
const Automorphism T1 = Automorphism::generator(1);
const Automorphism T2 = Automorphism::generator(2);
const Automorphism T3 = Automorphism::generator(3);

FlipPattern pattern(std::array<bool, 7> p) { return FlipPattern{p}; }

TEST(FlipPattern, Generators) {
    EXPECT_EQ(flip_pattern(T0), pattern({0, 0, 0, 0, 1, 1, 1}));
    EXPECT_EQ(flip_pattern(T1), pattern({1, 1, 1, 1, 0, 0, 0}));
    EXPECT_EQ(flip_pattern(T2), pattern({0, 1, 0, 1, 1, 0, 1}));
    EXPECT_EQ(flip_pattern(T3), pattern({0, 0, 1, 1, 0, 1, 1}));
    EXPECT_EQ(flip_pattern(T0).count(), 3);
    for (const auto g : {T1, T2, T3}) EXPECT_EQ(flip_pattern(g).count(), 4);
}

TEST(FlipPattern, Combinations) {
    EXPECT_EQ(flip_pattern(Automorphism::identity()), pattern({}));
    EXPECT_EQ(flip_pattern(compose(T2, T3)), pattern({0, 1, 1, 0, 1, 1, 0}));
}

TEST(Apply, GeneratesPublishedRules) {
    const OrientedTripletSet t0 = triplet_set(AlgebraId(0));
    EXPECT_EQ(apply(T3, t0), triplet_set(AlgebraId(1)));
    for (int n = 0; n < 8; ++n) EXPECT_EQ(apply(T0, triplet_set(AlgebraId(n))), triplet_set(AlgebraId(n + 8)));
}

TEST(Apply, Involution) {
    for (unsigned m = 0; m < 16; ++m) {
        for (const AlgebraId n : all_algebras()) {
            const auto t = triplet_set(n);
            EXPECT_EQ(apply(Automorphism(m), apply(Automorphism(m), t)), t);
        }
    }
}

TEST(Apply, StaysInOrbit) {
    std::set<std::string> words;
    for (const auto& e : orbit()) words.insert(e.parity.to_string());
    for (unsigned m = 0; m < 16; ++m) {
        for (const AlgebraId n : all_algebras()) {
            EXPECT_TRUE(words.count(apply(Automorphism(m), parity_word(n)).to_string()));
        }
    }
}

TEST(Compose, GroupLaws) {
    EXPECT_EQ(compose(compose(T1, T2), compose(T1, T3)), compose(T2, T3));
    std::set<unsigned> elements;
    for (unsigned a = 0; a < 16; ++a) {
        const Automorphism x(a);
        EXPECT_EQ(compose(x, x), Automorphism::identity());
        EXPECT_EQ(compose(Automorphism::identity(), x), x);
        elements.insert(x.mask());
        for (unsigned b = 0; b < 16; ++b) {
            EXPECT_EQ(compose(x, Automorphism(b)), compose(Automorphism(b), x));
            // Action is a homomorphism: applying a then b equals applying a*b.
            EXPECT_EQ(apply(Automorphism(b), apply(x, ParityWord{})), apply(compose(x, Automorphism(b)), ParityWord{}));
        }
    }
    EXPECT_EQ(elements.size(), 16u);
}

TEST(Orbit, Entries) {
    const auto o = orbit();
    EXPECT_EQ(o[0].generator, Automorphism::identity());
    EXPECT_EQ(o[0].parity.to_string(), "+++++++");
    EXPECT_EQ(o[5].generator, compose(T1, T3));
    EXPECT_EQ(o[5].generator.word(), "T1*T3");
    EXPECT_EQ(o[5].parity.to_string(), "--+++--");
    EXPECT_EQ(o[0].generator.word(), "id");
    EXPECT_EQ(o[15].generator.word(), "T0*T1*T2*T3");
}

TEST(Orbit, FreeAndTransitive) {
    std::set<std::string> words;
    for (const auto& e : orbit()) {
        EXPECT_EQ(e.id.value(), static_cast<int>(e.generator.mask()));
        words.insert(e.parity.to_string());
    }
    EXPECT_EQ(words.size(), 16u);
}

TEST(FanoLines, Structure) {
    const auto lines = fano_lines();
    EXPECT_EQ(lines.size(), 7u);
    const FanoLine first{T3, T2, compose(T2, T3)};
    EXPECT_EQ(lines[0], first);

    bool has_t1_t2 = false;
    std::map<unsigned, int> incidence;
    for (const FanoLine& line : lines) {
        const auto [a, b, c] = line;
        EXPECT_EQ(compose(a, b), c);
        EXPECT_EQ(compose(b, c), a);
        EXPECT_EQ(compose(a, c), b);
        for (const auto x : line) {
            EXPECT_FALSE(x.uses(0));
            EXPECT_NE(x, Automorphism::identity());
            ++incidence[x.mask()];
        }
        std::set<Automorphism> s(line.begin(), line.end());
        if (s == std::set<Automorphism>{T1, T2, compose(T1, T2)}) has_t1_t2 = true;
    }
    EXPECT_TRUE(has_t1_t2);
    EXPECT_EQ(incidence.size(), 7u);
    for (const auto& [mask, count] : incidence) EXPECT_EQ(count, 3) << mask;
}

TEST(Chirality, ByT0Bit) {
    EXPECT_EQ(chirality(AlgebraId(0)), Chirality::left);
    EXPECT_EQ(chirality(AlgebraId(8)), Chirality::right);
    for (int n = 0; n < 16; ++n) EXPECT_NE(chirality(AlgebraId(n)), chirality(AlgebraId(n ^ 8)));
}

TEST(FlipSignature, PairwiseDistinct) {
    // (T0,T1,T2,T3) bits per triplet.
    const std::array<std::array<bool, 4>, 7> expected{{
        {0, 1, 0, 0}, {0, 1, 1, 0}, {0, 1, 0, 1}, {0, 1, 1, 1}, {1, 0, 1, 0}, {1, 0, 0, 1}, {1, 0, 1, 1}}};
    std::set<unsigned> seen;
    for (std::size_t k = 0; k < 7; ++k) {
        const Automorphism sig = flip_signature(k);
        for (int j = 0; j < 4; ++j) EXPECT_EQ(sig.uses(j), expected[k][j]) << k << "," << j;
        seen.insert(sig.mask());
        // Triplet k is odd in rule n exactly when popcount(n & sig) is odd.
        for (int n = 0; n < 16; ++n) {
            EXPECT_EQ(parity_word(AlgebraId(n)).odd[k], (std::popcount(unsigned(n) & sig.mask()) & 1) != 0);
        }
    }
    EXPECT_EQ(seen.size(), 7u);
}

TEST(ParityWord, StringRoundTrip) {
    for (const AlgebraId n : all_algebras()) {
        const ParityWord w = parity_word(n);
        EXPECT_EQ(ParityWord::from_string(w.to_string()), w);
    }
    EXPECT_FALSE(ParityWord::from_string("++"));
    EXPECT_FALSE(ParityWord::from_string("++x++++"));
}

}  // namespace
}  // namespace octosieve
