#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "octosieve/algebra.hpp"
#include "octosieve/expr.hpp"
#include "octosieve/octonion.hpp"
#include "octosieve/random.hpp"

namespace octosieve {

/// b_jk = (-1)^popcount(j & k), j, k in 0..15.
[[nodiscard]] constexpr int sign_entry(unsigned j, unsigned k) {
    return (std::popcount(j & k & 0xFu) & 1) ? -1 : 1;
}

struct SignMatrix {
    std::array<std::array<int, 16>, 16> entries{};

    [[nodiscard]] constexpr int operator()(std::size_t j, std::size_t k) const { return entries[j][k]; }
};

[[nodiscard]] constexpr SignMatrix sign_matrix() {
    SignMatrix b;
    for (unsigned j = 0; j < 16; ++j) {
        for (unsigned k = 0; k < 16; ++k) b.entries[j][k] = sign_entry(j, k);
    }
    return b;
}

/// Sign generator T_n^b on the distances: the matrix row selected by the
/// generator mask of T_n.
[[nodiscard]] constexpr std::array<int, 16> row_generator(int n) {
    std::array<int, 16> row{};
    const unsigned k = Automorphism::generator(n).mask();
    for (unsigned j = 0; j < 16; ++j) row[j] = sign_entry(j, k);
    return row;
}

/// f[N] for N = 0..15; entry j was produced with rule j.
struct FunctionFamily {
    std::array<Octonion, 16> values{};
    friend bool operator==(const FunctionFamily&, const FunctionFamily&) = default;
};

/// g[k] = 1/4 sum_j b_jk f[j].
struct DistanceFamily {
    std::array<Octonion, 16> values{};
    friend bool operator==(const DistanceFamily&, const DistanceFamily&) = default;
};

namespace detail {

// In-place Walsh-Hadamard butterfly over the 16 entries, then the 1/4
// normalization. Natural (Hadamard) ordering, i.e. b_jk = (-1)^popcount(j & k).
inline std::array<Octonion, 16> hadamard_quarter(std::array<Octonion, 16> v) {
    for (std::size_t h = 1; h < 16; h *= 2) {
        for (std::size_t i = 0; i < 16; i += 2 * h) {
            for (std::size_t j = i; j < i + h; ++j) {
                const Octonion x = v[j];
                const Octonion y = v[j + h];
                v[j] = x + y;
                v[j + h] = x - y;
            }
        }
    }
    for (auto& o : v) o *= 0.25;
    return v;
}

}  // namespace detail

[[nodiscard]] inline DistanceFamily sieve(const FunctionFamily& fam) {
    return {detail::hadamard_quarter(fam.values)};
}

/// Same transform applied to distances; inverse of sieve because
/// (B/4)(B/4) = I.
[[nodiscard]] inline FunctionFamily unsieve(const DistanceFamily& dist) {
    return {detail::hadamard_quarter(dist.values)};
}

/// fam'[j] = fam[j ^ mask]: relabels which rule produced which value.
[[nodiscard]] inline FunctionFamily permute(const FunctionFamily& fam, unsigned mask) {
    FunctionFamily out;
    for (unsigned j = 0; j < 16; ++j) out.values[j] = fam.values[j ^ (mask & 0xFu)];
    return out;
}

[[nodiscard]] inline FunctionFamily evaluate_family(const Expr& e, const Assignment& env) {
    FunctionFamily fam;
    for (int n = 0; n < 16; ++n) fam.values[n] = eval(e, env, AlgebraId(n));
    return fam;
}

/// First k > 0 with g[k] != 0, if any.
[[nodiscard]] inline std::optional<int> first_nonzero_distance(const DistanceFamily& d) {
    for (int k = 1; k < 16; ++k) {
        if (!d.values[k].is_zero()) return k;
    }
    return std::nullopt;
}

struct InvarianceWitness {
    Assignment assignment;
    int index = 0;      // k > 0 with g[k] != 0
    Octonion distance;  // g[k]
};

struct InvarianceVerdict {
    bool invariant = true;
    int trials = 0;  // trials actually run
    std::optional<InvarianceWitness> witness;
};

inline constexpr int default_trials = 64;

/**
 * Randomized refuter for algebraic invariance.
 *
 * Each trial binds every free variable to a random small-integer octonion,
 * evaluates the expression in all sixteen rules, sieves, and checks that
 * g[k] is exactly zero for k > 0. Stops at the first counterexample.
 * "invariant" means no counterexample was found in `trials` attempts.
 */
[[nodiscard]] inline InvarianceVerdict is_invariant(const Expr& e, int trials, std::uint64_t seed) {
    if (trials < 1) throw PreconditionViolation("trials must be at least 1");
    const auto vars = free_vars(e);
    IntSampler sampler(seed);
    InvarianceVerdict verdict;
    for (int t = 0; t < trials; ++t) {
        Assignment env = sampler.assignment(vars);
        const DistanceFamily d = sieve(evaluate_family(e, env));
        ++verdict.trials;
        if (const auto k = first_nonzero_distance(d)) {
            verdict.invariant = false;
            verdict.witness = InvarianceWitness{std::move(env), *k, d.values[*k]};
            return verdict;
        }
    }
    return verdict;
}

}  // namespace octosieve
