#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include "octosieve/algebra_id.hpp"
#include "octosieve/automorphism.hpp"
#include "octosieve/errors.hpp"
#include "octosieve/octonion.hpp"

namespace octosieve {

/// Ordered triple of imaginary indices (each 1..7) with i_l i_m = i_n.
struct Triplet {
    std::array<int, 3> idx{};

    [[nodiscard]] constexpr bool contains(int k) const {
        return idx[0] == k || idx[1] == k || idx[2] == k;
    }
    friend constexpr bool operator==(const Triplet&, const Triplet&) = default;
};

/// The seven associative triplets of O[0], in reference order.
inline constexpr std::array<Triplet, 7> reference_triplets{{
    {{1, 2, 3}},
    {{7, 6, 1}},
    {{5, 7, 2}},
    {{6, 5, 3}},
    {{1, 4, 5}},
    {{2, 4, 6}},
    {{3, 4, 7}},
}};

/**
 * Triplet set of one rule, stored as orientation flags over the reference
 * ordering. An odd triplet is written with its last two indices swapped,
 * so {5,7,2} with parity "-" reads {5,2,7}.
 */
struct OrientedTripletSet {
    ParityWord parity;

    [[nodiscard]] constexpr Triplet triplet(std::size_t k) const {
        Triplet t = reference_triplets[k];
        if (parity.odd[k]) std::swap(t.idx[1], t.idx[2]);
        return t;
    }

    [[nodiscard]] constexpr std::array<Triplet, 7> triplets() const {
        std::array<Triplet, 7> out{};
        for (std::size_t k = 0; k < 7; ++k) out[k] = triplet(k);
        return out;
    }

    friend constexpr bool operator==(const OrientedTripletSet&, const OrientedTripletSet&) = default;
};

[[nodiscard]] constexpr OrientedTripletSet triplet_set(AlgebraId n) { return {parity_word(n)}; }

[[nodiscard]] constexpr OrientedTripletSet apply(Automorphism a, const OrientedTripletSet& t) {
    return {apply(a, t.parity)};
}

/// Index of the reference triplet containing both distinct imaginary indices.
[[nodiscard]] constexpr std::size_t triplet_containing(int l, int m) {
    for (std::size_t k = 0; k < 7; ++k) {
        if (reference_triplets[k].contains(l) && reference_triplets[k].contains(m)) return k;
    }
    throw PreconditionViolation("indices do not share a triplet");
}

/// Third index on the Fano line through distinct imaginary indices l and m.
[[nodiscard]] constexpr int third_index(int l, int m) {
    const Triplet& t = reference_triplets[triplet_containing(l, m)];
    for (int k : t.idx) {
        if (k != l && k != m) return k;
    }
    return 0;
}

/// True when every pair of distinct indices 1..7 occurs in exactly one triplet.
[[nodiscard]] constexpr bool is_fano_incidence(const std::array<Triplet, 7>& ts) {
    std::array<std::array<int, 8>, 8> seen{};
    for (const Triplet& t : ts) {
        for (int a : t.idx) {
            if (a < 1 || a > 7) return false;
        }
        if (t.idx[0] == t.idx[1] || t.idx[1] == t.idx[2] || t.idx[0] == t.idx[2]) return false;
        for (int x = 0; x < 3; ++x) {
            for (int y = x + 1; y < 3; ++y) {
                ++seen[t.idx[x]][t.idx[y]];
                ++seen[t.idx[y]][t.idx[x]];
            }
        }
    }
    for (int a = 1; a <= 7; ++a) {
        for (int b = a + 1; b <= 7; ++b) {
            if (seen[a][b] != 1) return false;
        }
    }
    return true;
}

/// +/- one basis element; index 0 is the real unit.
struct SignedBasis {
    std::int8_t sign = 1;
    std::uint8_t index = 0;

    friend constexpr bool operator==(const SignedBasis&, const SignedBasis&) = default;
};

/// Product table of basis elements: entries[l][m] = i_l * i_m.
struct MulTable {
    std::array<std::array<SignedBasis, 8>, 8> entries{};

    [[nodiscard]] constexpr const SignedBasis& operator()(std::size_t l, std::size_t m) const {
        return entries[l][m];
    }
    friend constexpr bool operator==(const MulTable&, const MulTable&) = default;
};

[[nodiscard]] constexpr MulTable build_table(const OrientedTripletSet& ts) {
    MulTable t;
    for (std::uint8_t k = 0; k < 8; ++k) {
        t.entries[0][k] = {1, k};
        t.entries[k][0] = {1, k};
    }
    for (std::uint8_t k = 1; k < 8; ++k) t.entries[k][k] = {-1, 0};
    for (std::size_t k = 0; k < 7; ++k) {
        const auto [a, b, c] = ts.triplet(k).idx;
        const std::array<std::array<int, 3>, 3> cyclic{{{a, b, c}, {b, c, a}, {c, a, b}}};
        for (const auto& [l, m, r] : cyclic) {
            t.entries[l][m] = {1, static_cast<std::uint8_t>(r)};
            t.entries[m][l] = {-1, static_cast<std::uint8_t>(r)};
        }
    }
    return t;
}

namespace detail {

inline constexpr std::array<MulTable, 16> all_tables = [] {
    std::array<MulTable, 16> out{};
    for (int n = 0; n < 16; ++n) out[n] = build_table(triplet_set(AlgebraId(n)));
    return out;
}();

}  // namespace detail

[[nodiscard]] constexpr const MulTable& mul_table(AlgebraId n) { return detail::all_tables[n.value()]; }

/// Describes the first violated MulTable invariant, or nullopt if the table
/// has the identity row/column, -1 diagonal, anticommuting imaginaries and
/// in-range indices.
[[nodiscard]] inline std::optional<std::string> table_shape_error(const MulTable& t) {
    for (std::size_t l = 0; l < 8; ++l) {
        for (std::size_t m = 0; m < 8; ++m) {
            const SignedBasis& e = t.entries[l][m];
            if (e.index > 7) return "entry index out of range";
            if (e.sign != 1 && e.sign != -1) return "entry sign is not +1 or -1";
        }
    }
    for (std::uint8_t k = 0; k < 8; ++k) {
        if (t.entries[0][k] != SignedBasis{1, k} || t.entries[k][0] != SignedBasis{1, k}) {
            return "row/column 0 is not the identity";
        }
    }
    for (std::size_t k = 1; k < 8; ++k) {
        if (t.entries[k][k] != SignedBasis{-1, 0}) return "i_" + std::to_string(k) + "^2 != -1";
    }
    for (std::size_t l = 1; l < 8; ++l) {
        for (std::size_t m = l + 1; m < 8; ++m) {
            const SignedBasis a = t.entries[l][m];
            const SignedBasis b = t.entries[m][l];
            if (a.index != b.index || a.sign != -b.sign) {
                return "i_" + std::to_string(l) + " and i_" + std::to_string(m) + " do not anticommute";
            }
        }
    }
    return std::nullopt;
}

/// Bilinear product in rule n. Exact for integer scalars.
template <typename T>
[[nodiscard]] constexpr BasicOctonion<T> multiply(const BasicOctonion<T>& a, const BasicOctonion<T>& b,
                                                  const MulTable& table) {
    BasicOctonion<T> r;
    for (std::size_t l = 0; l < 8; ++l) {
        if (a.coeffs[l] == T{}) continue;
        for (std::size_t m = 0; m < 8; ++m) {
            const SignedBasis e = table.entries[l][m];
            const T p = a.coeffs[l] * b.coeffs[m];
            if (e.sign > 0) {
                r.coeffs[e.index] += p;
            } else {
                r.coeffs[e.index] -= p;
            }
        }
    }
    return r;
}

template <typename T>
[[nodiscard]] constexpr BasicOctonion<T> multiply(const BasicOctonion<T>& a, const BasicOctonion<T>& b,
                                                  AlgebraId n) {
    return multiply(a, b, mul_table(n));
}

/// conj(a) / |a|^2, the two-sided inverse in every rule.
[[nodiscard]] inline Octonion inverse(const Octonion& a, AlgebraId /*n*/) {
    const double n2 = norm_squared(a);
    if (n2 == 0.0) throw DivisionByZero();
    return conjugate(a) * (1.0 / n2);
}

/// The rule whose basis table equals `table`.
[[nodiscard]] inline AlgebraId identify_algebra(const MulTable& table) {
    if (auto err = table_shape_error(table)) throw NotAnEquivalentAlgebra("malformed table: " + *err);

    // Recover the oriented triplet of every reference line from i_l i_m.
    ParityWord parity;
    for (std::size_t k = 0; k < 7; ++k) {
        const auto [l, m, r] = reference_triplets[k].idx;
        const SignedBasis e = table.entries[l][m];
        if (e.index != r) {
            throw NotAnEquivalentAlgebra("i_" + std::to_string(l) + " i_" + std::to_string(m) +
                                         " does not lie on a Fano line of the reference rule");
        }
        parity.odd[k] = e.sign < 0;
    }
    for (int n = 0; n < 16; ++n) {
        const AlgebraId id(n);
        if (parity_word(id) == parity) {
            if (mul_table(id) != table) throw NotAnEquivalentAlgebra("triplet relations are not cyclic");
            return id;
        }
    }
    throw NotAnEquivalentAlgebra("orientation " + parity.to_string() + " is not one of the 16 rules");
}

/// Dense structure constants: i_l i_m = sum_r c[l][m][r] i_r.
using StructureTensor = std::array<std::array<std::array<double, 8>, 8>, 8>;

[[nodiscard]] constexpr StructureTensor to_tensor(const MulTable& t) {
    StructureTensor c{};
    for (std::size_t l = 0; l < 8; ++l) {
        for (std::size_t m = 0; m < 8; ++m) {
            c[l][m][t.entries[l][m].index] = t.entries[l][m].sign;
        }
    }
    return c;
}

/// Adapter from structure constants; every product must be exactly one
/// basis element with coefficient +1 or -1.
[[nodiscard]] inline MulTable table_from_tensor(const StructureTensor& c) {
    MulTable t;
    for (std::size_t l = 0; l < 8; ++l) {
        for (std::size_t m = 0; m < 8; ++m) {
            std::optional<SignedBasis> hit;
            for (std::size_t r = 0; r < 8; ++r) {
                const double v = c[l][m][r];
                if (v == 0.0) continue;
                if ((v != 1.0 && v != -1.0) || hit) {
                    throw NotAnEquivalentAlgebra("structure constants are not a signed basis permutation");
                }
                hit = SignedBasis{static_cast<std::int8_t>(v), static_cast<std::uint8_t>(r)};
            }
            if (!hit) throw NotAnEquivalentAlgebra("basis product vanishes");
            t.entries[l][m] = *hit;
        }
    }
    return t;
}

}  // namespace octosieve
