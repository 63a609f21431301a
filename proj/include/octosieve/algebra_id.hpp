#pragma once

#include <array>
#include <cstdint>
#include <string_view>

#include "octosieve/errors.hpp"

namespace octosieve {

enum class Chirality { left, right };

[[nodiscard]] constexpr std::string_view to_string(Chirality c) {
    return c == Chirality::left ? "left" : "right";
}

/**
 * Index N of one of the sixteen equivalent multiplication rules O[N].
 *
 * Bit layout: N = 8*x0 + 4*x1 + 2*x2 + x3, where x_j = 1 means the duality
 * map T_j was applied to the reference rule O[0]. Hence O[1] = T3 O[0],
 * O[2] = T2 O[0], O[4] = T1 O[0] and O[N+8] = T0 O[N].
 */
class AlgebraId {
public:
    static constexpr int count = 16;

    constexpr AlgebraId() = default;
    explicit constexpr AlgebraId(long long n) : n_(static_cast<std::uint8_t>(n)) {
        if (n < 0 || n >= count) throw InvalidAlgebraId(n);
    }

    [[nodiscard]] constexpr int value() const { return n_; }

    /// N < 8 is left-handed, N >= 8 right-handed (the T0 bit).
    [[nodiscard]] constexpr Chirality chirality() const {
        return n_ < 8 ? Chirality::left : Chirality::right;
    }

    friend constexpr bool operator==(AlgebraId, AlgebraId) = default;
    friend constexpr auto operator<=>(AlgebraId, AlgebraId) = default;

private:
    std::uint8_t n_ = 0;
};

[[nodiscard]] constexpr Chirality chirality(AlgebraId n) { return n.chirality(); }

/// All sixteen ids in ascending order.
[[nodiscard]] constexpr std::array<AlgebraId, AlgebraId::count> all_algebras() {
    std::array<AlgebraId, AlgebraId::count> ids{};
    for (int n = 0; n < AlgebraId::count; ++n) ids[n] = AlgebraId(n);
    return ids;
}

}  // namespace octosieve
