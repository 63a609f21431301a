#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "octosieve/algebra_id.hpp"

namespace octosieve {

/// Orientation of the seven reference triplets; flag k set means triplet k
/// is taken with odd parity ("-") relative to O[0].
struct ParityWord {
    std::array<bool, 7> odd{};

    /// "+" / "-" per triplet, e.g. "++--+--" for O[1].
    [[nodiscard]] std::string to_string() const {
        std::string s(7, '+');
        for (std::size_t k = 0; k < 7; ++k) {
            if (odd[k]) s[k] = '-';
        }
        return s;
    }

    [[nodiscard]] static std::optional<ParityWord> from_string(std::string_view s) {
        if (s.size() != 7) return std::nullopt;
        ParityWord w;
        for (std::size_t k = 0; k < 7; ++k) {
            if (s[k] == '-') {
                w.odd[k] = true;
            } else if (s[k] != '+') {
                return std::nullopt;
            }
        }
        return w;
    }

    friend constexpr bool operator==(const ParityWord&, const ParityWord&) = default;
};

/// Which of the seven triplets an automorphism swaps.
struct FlipPattern {
    std::array<bool, 7> swap{};

    [[nodiscard]] constexpr int count() const {
        return static_cast<int>(std::count(swap.begin(), swap.end(), true));
    }

    friend constexpr FlipPattern operator^(FlipPattern a, const FlipPattern& b) {
        for (std::size_t k = 0; k < 7; ++k) a.swap[k] = a.swap[k] != b.swap[k];
        return a;
    }
    friend constexpr bool operator==(const FlipPattern&, const FlipPattern&) = default;
};

/**
 * Element of Z2^4 generated by the duality maps T0..T3.
 *
 * The mask uses the same bit layout as AlgebraId: T0 -> 8, T1 -> 4,
 * T2 -> 2, T3 -> 1. Applying the automorphism with mask N to the reference
 * rule yields rule N. Composition is XOR.
 */
class Automorphism {
public:
    constexpr Automorphism() = default;
    explicit constexpr Automorphism(unsigned mask) : mask_(static_cast<std::uint8_t>(mask & 0xFu)) {}

    [[nodiscard]] static constexpr Automorphism identity() { return Automorphism{}; }

    /// Generator T_j, j in 0..3.
    [[nodiscard]] static constexpr Automorphism generator(int j) { return Automorphism(8u >> j); }

    [[nodiscard]] constexpr unsigned mask() const { return mask_; }

    [[nodiscard]] constexpr bool uses(int j) const { return (mask_ & (8u >> j)) != 0; }

    /// Word such as "T1*T3", generators in ascending order; "id" for identity.
    [[nodiscard]] std::string word() const {
        if (mask_ == 0) return "id";
        std::string w;
        for (int j = 0; j < 4; ++j) {
            if (!uses(j)) continue;
            if (!w.empty()) w += '*';
            w += 'T';
            w += static_cast<char>('0' + j);
        }
        return w;
    }

    friend constexpr bool operator==(Automorphism, Automorphism) = default;
    friend constexpr auto operator<=>(Automorphism, Automorphism) = default;

private:
    std::uint8_t mask_ = 0;
};

[[nodiscard]] constexpr Automorphism compose(Automorphism a, Automorphism b) {
    return Automorphism(a.mask() ^ b.mask());
}

namespace detail {

// Rows T0..T3 of the duality-map table: 1 = swap parity of that triplet.
inline constexpr std::array<std::array<bool, 7>, 4> generator_swaps{{
    {0, 0, 0, 0, 1, 1, 1},
    {1, 1, 1, 1, 0, 0, 0},
    {0, 1, 0, 1, 1, 0, 1},
    {0, 0, 1, 1, 0, 1, 1},
}};

}  // namespace detail

[[nodiscard]] constexpr FlipPattern flip_pattern(Automorphism a) {
    FlipPattern p;
    for (int j = 0; j < 4; ++j) {
        if (a.uses(j)) p = p ^ FlipPattern{detail::generator_swaps[j]};
    }
    return p;
}

[[nodiscard]] constexpr ParityWord apply(Automorphism a, ParityWord w) {
    const FlipPattern p = flip_pattern(a);
    for (std::size_t k = 0; k < 7; ++k) w.odd[k] = w.odd[k] != p.swap[k];
    return w;
}

/// Which generators swap triplet k (0-based), packed as an Automorphism mask.
/// Triplet k is odd in rule N iff popcount(N & signature) is odd.
[[nodiscard]] constexpr Automorphism flip_signature(std::size_t k) {
    unsigned mask = 0;
    for (int j = 0; j < 4; ++j) {
        if (detail::generator_swaps[j][k]) mask |= 8u >> j;
    }
    return Automorphism(mask);
}

/// Parity word of rule N: the automorphism with mask N applied to O[0].
[[nodiscard]] constexpr ParityWord parity_word(AlgebraId n) {
    return apply(Automorphism(static_cast<unsigned>(n.value())), ParityWord{});
}

struct OrbitEntry {
    AlgebraId id;
    Automorphism generator;
    ParityWord parity;
};

/// The sixteen rules in AlgebraId order with their generating automorphism.
[[nodiscard]] constexpr std::array<OrbitEntry, 16> orbit() {
    std::array<OrbitEntry, 16> out{};
    for (int n = 0; n < 16; ++n) {
        const Automorphism a(static_cast<unsigned>(n));
        out[n] = OrbitEntry{AlgebraId(n), a, apply(a, ParityWord{})};
    }
    return out;
}

using FanoLine = std::array<Automorphism, 3>;

/// The seven lines {a, b, a*b} over the non-identity elements of <T1,T2,T3>,
/// each sorted by mask, lines in ascending lexicographic mask order.
[[nodiscard]] constexpr std::array<FanoLine, 7> fano_lines() {
    std::array<FanoLine, 7> lines{};
    std::size_t count = 0;
    for (unsigned a = 1; a < 8; ++a) {
        for (unsigned b = a + 1; b < 8; ++b) {
            const unsigned c = a ^ b;
            if (c > b) lines[count++] = {Automorphism(a), Automorphism(b), Automorphism(c)};
        }
    }
    return lines;
}

}  // namespace octosieve
