#pragma once

#include <array>
#include <bitset>
#include <cmath>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "octosieve/algebra.hpp"
#include "octosieve/errors.hpp"
#include "octosieve/exact_rank.hpp"
#include "octosieve/expr.hpp"
#include "octosieve/octonion.hpp"
#include "octosieve/random.hpp"

namespace octosieve {

/// D_{u,v}(a) = [[u,v],a] - 3((uv)a - u(va)), products in rule n.
template <typename T>
[[nodiscard]] constexpr BasicOctonion<T> derive(const BasicOctonion<T>& u, const BasicOctonion<T>& v,
                                                const BasicOctonion<T>& a, AlgebraId n) {
    const MulTable& t = mul_table(n);
    const auto uv = multiply(u, v, t);
    const auto commutator = uv - multiply(v, u, t);
    const auto outer = multiply(commutator, a, t) - multiply(a, commutator, t);
    const auto associator = multiply(uv, a, t) - multiply(u, multiply(v, a, t), t);
    return outer - T{3} * associator;
}

/// D(ab) - D(a)b - aD(b) for D = D_{u,v} in rule n.
template <typename T>
[[nodiscard]] constexpr BasicOctonion<T> leibniz_residual(const BasicOctonion<T>& u, const BasicOctonion<T>& v,
                                                          const BasicOctonion<T>& a, const BasicOctonion<T>& b,
                                                          AlgebraId n) {
    const MulTable& t = mul_table(n);
    return derive(u, v, multiply(a, b, t), n) - multiply(derive(u, v, a, n), b, t) -
           multiply(a, derive(u, v, b, n), t);
}

template <typename T>
[[nodiscard]] double leibniz_check(const BasicOctonion<T>& u, const BasicOctonion<T>& v, const BasicOctonion<T>& a,
                                   const BasicOctonion<T>& b, AlgebraId n) {
    return norm(leibniz_residual(u, v, a, b, n));
}

/// True when the imaginary indices (repeats allowed) all lie on one Fano
/// line, i.e. generate a quaternion subalgebra together with 1.
[[nodiscard]] constexpr bool in_common_triplet(int u, int v, int a) {
    for (const Triplet& t : reference_triplets) {
        if (t.contains(u) && t.contains(v) && t.contains(a)) return true;
    }
    return false;
}

struct ClosedFormReport {
    Octonion derivation;   // D_{i_u,i_v}(i_a)
    Octonion closed_form;  // -2 (i_u i_v) i_a
    [[nodiscard]] bool holds() const { return derivation == closed_form; }
};

/// Compares D_{i_u,i_v}(i_a) with -2(i_u i_v)i_a for an antiassociative
/// basis triple: pairwise distinct indices not on a common Fano line.
[[nodiscard]] inline ClosedFormReport antiassoc_closed_form(int u, int v, int a, AlgebraId n) {
    for (int k : {u, v, a}) {
        if (k < 1 || k > 7) throw PreconditionViolation("basis indices must be in 1..7");
    }
    if (u == v || v == a || u == a) throw PreconditionViolation("basis indices must be pairwise distinct");
    if (in_common_triplet(u, v, a)) throw PreconditionViolation("indices form an associative triplet");
    const auto iu = Octonion::unit(u);
    const auto iv = Octonion::unit(v);
    const auto ia = Octonion::unit(a);
    return {derive(iu, iv, ia, n), -2.0 * multiply(multiply(iu, iv, n), ia, n)};
}

using AlgebraSet = std::bitset<16>;

/// Rules n whose D_{u,v}(a) equals the value in rule 0 (exact comparison).
template <typename T>
[[nodiscard]] AlgebraSet cross_algebra_equal(const BasicOctonion<T>& u, const BasicOctonion<T>& v,
                                             const BasicOctonion<T>& a) {
    const auto reference = derive(u, v, a, AlgebraId(0));
    AlgebraSet out;
    for (int n = 0; n < 16; ++n) out[n] = derive(u, v, a, AlgebraId(n)) == reference;
    return out;
}

/// Action of a derivation on the imaginary subspace: column c holds the
/// imaginary coefficients of D(i_{c+1}), row r the coefficient on i_{r+1}.
using LinearMap7 = std::array<std::array<double, 7>, 7>;

[[nodiscard]] inline LinearMap7 derivation_map(const Octonion& u, const Octonion& v, AlgebraId n) {
    LinearMap7 m{};
    for (std::size_t c = 0; c < 7; ++c) {
        const Octonion image = derive(u, v, Octonion::unit(c + 1), n);
        for (std::size_t r = 0; r < 7; ++r) m[r][c] = image[r + 1];
    }
    return m;
}

/**
 * Dimension of span{D_{i_u,i_v} : (u,v) in pairs} in rule n.
 *
 * With `restrict_to` empty each map is compared as a full 7x7 matrix;
 * otherwise only the rows and columns of the listed imaginary indices are
 * kept (e.g. {1,2,3} to look at the action inside one quaternion
 * subalgebra). Entries are integers, so the rank is exact.
 */
[[nodiscard]] inline int derivation_span_rank(std::span<const std::pair<int, int>> pairs, AlgebraId n,
                                              std::span<const int> restrict_to = {}) {
    std::vector<int> axes(restrict_to.begin(), restrict_to.end());
    if (axes.empty()) axes = {1, 2, 3, 4, 5, 6, 7};
    for (int k : axes) {
        if (k < 1 || k > 7) throw PreconditionViolation("basis indices must be in 1..7");
    }

    std::vector<std::vector<std::int64_t>> rows;
    rows.reserve(pairs.size());
    for (const auto& [u, v] : pairs) {
        if (u < 1 || u > 7 || v < 1 || v > 7) throw PreconditionViolation("basis indices must be in 1..7");
        const LinearMap7 m = derivation_map(Octonion::unit(u), Octonion::unit(v), n);
        std::vector<std::int64_t> row;
        row.reserve(axes.size() * axes.size());
        for (int r : axes) {
            for (int c : axes) row.push_back(static_cast<std::int64_t>(std::llround(m[r - 1][c - 1])));
        }
        rows.push_back(std::move(row));
    }
    return static_cast<int>(exact_rank(std::move(rows)));
}

/// All 21 unordered pairs of distinct imaginary indices.
[[nodiscard]] inline std::vector<std::pair<int, int>> all_basis_pairs() {
    std::vector<std::pair<int, int>> out;
    for (int u = 1; u <= 7; ++u) {
        for (int v = u + 1; v <= 7; ++v) out.emplace_back(u, v);
    }
    return out;
}

/// D_{u,v}(f[N]) for N = 0..15, with f and D both taken in rule N.
[[nodiscard]] inline std::array<Octonion, 16> derivation_family(const Octonion& u, const Octonion& v,
                                                                const Expr& e, const Assignment& env) {
    std::array<Octonion, 16> out{};
    for (int n = 0; n < 16; ++n) {
        const AlgebraId id(n);
        out[n] = derive(u, v, eval(e, env, id), id);
    }
    return out;
}

/// First rule whose value differs from rule 0, if any.
[[nodiscard]] inline std::optional<int> first_disagreement(const std::array<Octonion, 16>& values) {
    for (int n = 1; n < 16; ++n) {
        if (values[n] != values[0]) return n;
    }
    return std::nullopt;
}

struct DerivationWitness {
    Assignment assignment;
    int algebra = 0;  // first N with D(f)[N] != D(f)[0]
    Octonion value;   // D(f)[N]
    Octonion reference;  // D(f)[0]
};

struct RegimeVerdict {
    bool all_equal = true;
    int trials = 0;
    std::optional<DerivationWitness> witness;
};

struct ExprDerivationReport {
    int u = 1;
    int v = 2;
    std::vector<int> quaternion_basis;  // real unit plus the line through u, v
    RegimeVerdict quaternionic;         // variables drawn from span(quaternion_basis)
    RegimeVerdict generic;              // variables drawn from all of R^8
};

/// Real unit plus the imaginary indices on the Fano line through u and v.
[[nodiscard]] inline std::vector<int> quaternion_basis(int u, int v) {
    if (u == v) return {0, u};
    const Triplet& t = reference_triplets[triplet_containing(u, v)];
    return {0, t.idx[0], t.idx[1], t.idx[2]};
}

/**
 * Checks whether D_{i_u,i_v}(f[N]) agrees across all sixteen rules.
 *
 * Runs `trials` random integer assignments in each of two regimes: every
 * variable inside the quaternion subalgebra spanned by {1, i_u, i_v, i_u i_v},
 * and every variable a general octonion. Each regime reports the first
 * disagreement found.
 */
[[nodiscard]] inline ExprDerivationReport expr_cross_algebra_equal(int u, int v, const Expr& e, int trials,
                                                                   std::uint64_t seed) {
    if (u < 1 || u > 7 || v < 1 || v > 7) throw PreconditionViolation("u and v must be imaginary basis indices");
    if (trials < 1) throw PreconditionViolation("trials must be at least 1");

    ExprDerivationReport report;
    report.u = u;
    report.v = v;
    report.quaternion_basis = quaternion_basis(u, v);
    const auto vars = free_vars(e);
    const auto iu = Octonion::unit(u);
    const auto iv = Octonion::unit(v);

    auto run = [&](RegimeVerdict& verdict, IntSampler& sampler, bool restricted) {
        for (int t = 0; t < trials; ++t) {
            Assignment env;
            for (const auto& name : vars) {
                const IntOctonion x = restricted ? sampler.combination(report.quaternion_basis) : sampler.octonion();
                env.emplace(name, x.cast<double>());
            }
            const auto values = derivation_family(iu, iv, e, env);
            ++verdict.trials;
            if (const auto n = first_disagreement(values)) {
                verdict.all_equal = false;
                verdict.witness = DerivationWitness{std::move(env), *n, values[*n], values[0]};
                return;
            }
        }
    };

    IntSampler quaternionic_sampler(seed);
    IntSampler generic_sampler(seed ^ 0x9E3779B97F4A7C15ull);
    run(report.quaternionic, quaternionic_sampler, true);
    run(report.generic, generic_sampler, false);
    return report;
}

}  // namespace octosieve
