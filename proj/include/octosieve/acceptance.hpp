#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "octosieve/algebra.hpp"
#include "octosieve/automorphism.hpp"
#include "octosieve/derivations.hpp"
#include "octosieve/expr.hpp"
#include "octosieve/random.hpp"
#include "octosieve/sieve.hpp"

namespace octosieve::acceptance {

struct CheckResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;
};

struct Options {
    // Quick mode shrinks the randomized sample counts; exhaustive checks are
    // unaffected.
    bool quick = false;
    std::uint64_t seed = 0x0C7051E5EEDull;
};

namespace detail {

inline int samples(const Options& opt, int full) { return opt.quick ? std::max(1, full / 10) : full; }

inline CheckResult table_fidelity(const Options&) {
    CheckResult r{1, "table fidelity", true, ""};
    std::ostringstream why;

    const std::array<std::array<int, 3>, 7> published{{
        {1, 2, 3}, {7, 6, 1}, {5, 7, 2}, {6, 5, 3}, {1, 4, 5}, {2, 4, 6}, {3, 4, 7}}};
    const auto t0 = triplet_set(AlgebraId(0)).triplets();
    for (std::size_t k = 0; k < 7; ++k) {
        if (t0[k].idx != published[k]) {
            r.passed = false;
            why << "t[0] triplet " << k << " differs; ";
        }
    }

    const std::array<const char*, 8> words{"+++++++", "++--+--", "+-+--+-", "+--+--+",
                                           "----+++", "--+++--", "-+-+-+-", "-++---+"};
    for (int n = 0; n < 8; ++n) {
        const auto got = parity_word(AlgebraId(n)).to_string();
        if (got != words[n]) {
            r.passed = false;
            why << "t[" << n << "] = " << got << " expected " << words[n] << "; ";
        }
    }

    const std::array<bool, 7> t0_swaps{0, 0, 0, 0, 1, 1, 1};
    for (int n = 0; n < 8; ++n) {
        const auto a = parity_word(AlgebraId(n)).odd;
        const auto b = parity_word(AlgebraId(n + 8)).odd;
        for (std::size_t k = 0; k < 7; ++k) {
            if ((a[k] != b[k]) != t0_swaps[k]) {
                r.passed = false;
                why << "t[" << n + 8 << "] is not T0 t[" << n << "]; ";
                break;
            }
        }
    }
    r.detail = r.passed ? "t[0] triplets, 8 published parity words, 8 chirality pairs match" : why.str();
    return r;
}

inline CheckResult norm_multiplicativity(const Options& opt) {
    CheckResult r{2, "norm multiplicativity", true, ""};
    const int pairs = samples(opt, 1000);
    IntSampler sampler(opt.seed + 2, 1 << 10);
    long long checked = 0;
    for (int n = 0; n < 16 && r.passed; ++n) {
        for (int i = 0; i < pairs; ++i) {
            const IntOctonion a = sampler.octonion();
            const IntOctonion b = sampler.octonion();
            const IntOctonion ab = multiply(a, b, AlgebraId(n));
            ++checked;
            if (norm_squared(ab) != norm_squared(a) * norm_squared(b)) {
                r.passed = false;
                r.detail = "|ab|^2 != |a|^2 |b|^2 in rule " + std::to_string(n);
                break;
            }
        }
    }
    if (r.passed) r.detail = std::to_string(checked) + " integer pairs, exact";
    return r;
}

inline FunctionFamily random_family(IntSampler& sampler) {
    FunctionFamily f;
    for (auto& v : f.values) v = sampler.octonion().cast<double>();
    return f;
}

inline CheckResult hadamard_involution(const Options& opt) {
    CheckResult r{3, "hadamard involution", true, ""};
    const int count = samples(opt, 100);
    IntSampler sampler(opt.seed + 3, 1 << 10);
    for (int i = 0; i < count; ++i) {
        const FunctionFamily f = random_family(sampler);
        if (unsieve(sieve(f)) != f) {
            r.passed = false;
            r.detail = "round trip failed on family " + std::to_string(i);
            return r;
        }
    }
    r.detail = std::to_string(count) + " integer families round-trip exactly";
    return r;
}

inline CheckResult row_generators(const Options&) {
    CheckResult r{4, "sign-matrix row generators", true, ""};
    // T0^b..T3^b as published.
    const std::array<const char*, 4> printed{"++++++++--------", "++++----++++----", "++--++--++--++--",
                                             "+-+-+-+-+-+-+-+-"};
    const SignMatrix b = sign_matrix();
    for (unsigned k = 0; k < 16; ++k) {
        for (unsigned j = 0; j < 16; ++j) {
            int expect = 1;
            for (int n = 0; n < 4; ++n) {
                if (k & (8u >> n)) expect *= printed[n][j] == '+' ? 1 : -1;
            }
            if (b(j, k) != expect) {
                r.passed = false;
                r.detail = "row " + std::to_string(k) + " entry " + std::to_string(j) + " not reconstructed";
                return r;
            }
            if (b(j, k) != b(k, j)) {
                r.passed = false;
                r.detail = "asymmetric at (" + std::to_string(j) + "," + std::to_string(k) + ")";
                return r;
            }
        }
    }
    r.detail = "16 rows from 4 generators, 256 entries symmetric";
    return r;
}

inline CheckResult sieve_invariance(const Options& opt) {
    CheckResult r{5, "sieve invariance", true, ""};
    std::ostringstream out;
    const int trials = default_trials;
    for (const char* text : {"a+b", "a*a", "a*b+b*a"}) {
        const auto v = is_invariant(parse(text), trials, opt.seed + 5);
        if (!v.invariant) {
            r.passed = false;
            out << text << " has g[" << v.witness->index << "] != 0; ";
        }
    }
    const auto v = is_invariant(parse("a*b"), trials, opt.seed + 5);
    if (v.invariant) {
        r.passed = false;
        out << "a*b showed no nonzero distance; ";
    } else {
        out << "a+b, a*a, a*b+b*a invariant over " << trials << " trials; a*b witness g[" << v.witness->index
            << "] = " << v.witness->distance << " at a = " << v.witness->assignment.at("a")
            << ", b = " << v.witness->assignment.at("b");
    }
    r.detail = out.str();
    return r;
}

inline CheckResult xor_equivariance(const Options& opt) {
    CheckResult r{6, "xor sign-equivariance", true, ""};
    const int count = samples(opt, 20);
    IntSampler sampler(opt.seed + 6, 1 << 10);
    for (int i = 0; i < count; ++i) {
        const FunctionFamily f = random_family(sampler);
        const DistanceFamily g = sieve(f);
        for (unsigned m = 0; m < 16; ++m) {
            const DistanceFamily h = sieve(permute(f, m));
            for (unsigned k = 0; k < 16; ++k) {
                if (h.values[k] != static_cast<double>(sign_entry(m, k)) * g.values[k]) {
                    r.passed = false;
                    r.detail = "mask " + std::to_string(m) + " distance " + std::to_string(k);
                    return r;
                }
            }
        }
    }
    r.detail = std::to_string(count) + " families x 16 masks";
    return r;
}

inline CheckResult leibniz(const Options& opt) {
    CheckResult r{7, "leibniz rule", true, ""};
    const int count = samples(opt, 1000);
    IntSampler sampler(opt.seed + 7);
    for (int n = 0; n < 16; ++n) {
        for (int i = 0; i < count; ++i) {
            const IntOctonion u = sampler.octonion(), v = sampler.octonion();
            const IntOctonion a = sampler.octonion(), b = sampler.octonion();
            if (!leibniz_residual(u, v, a, b, AlgebraId(n)).is_zero()) {
                r.passed = false;
                r.detail = "nonzero residual in rule " + std::to_string(n);
                return r;
            }
        }
    }
    r.detail = std::to_string(16 * count) + " integer quadruples, residual exactly 0";
    return r;
}

inline CheckResult closed_form(const Options&) {
    CheckResult r{8, "antiassociative closed form", true, ""};
    int cases = 0;
    for (int n = 0; n < 16; ++n) {
        for (int u = 1; u <= 7; ++u) {
            for (int v = 1; v <= 7; ++v) {
                for (int a = 1; a <= 7; ++a) {
                    if (u == v || v == a || u == a || in_common_triplet(u, v, a)) continue;
                    ++cases;
                    if (!antiassoc_closed_form(u, v, a, AlgebraId(n)).holds()) {
                        r.passed = false;
                        r.detail = "fails at (" + std::to_string(u) + "," + std::to_string(v) + "," +
                                   std::to_string(a) + ") rule " + std::to_string(n);
                        return r;
                    }
                }
            }
        }
    }
    const int expected = 16 * (210 - 42);
    if (cases != expected) {
        r.passed = false;
        r.detail = "enumerated " + std::to_string(cases) + " cases, expected " + std::to_string(expected);
        return r;
    }
    r.detail = std::to_string(cases) + " cases";
    return r;
}

inline CheckResult flip_signatures(const Options&) {
    CheckResult r{9, "flip-signature distinctness", true, ""};
    std::set<unsigned> seen;
    for (std::size_t k = 0; k < 7; ++k) seen.insert(flip_signature(k).mask());
    r.passed = seen.size() == 7;
    r.detail = std::to_string(seen.size()) + " distinct signatures among 7 triplets";
    return r;
}

inline CheckResult dimensions(const Options&) {
    CheckResult r{10, "derivation dimensions", true, ""};
    const auto pairs = all_basis_pairs();
    for (int n = 0; n < 16; ++n) {
        const int full = derivation_span_rank(pairs, AlgebraId(n));
        if (full != 14) {
            r.passed = false;
            r.detail = "rule " + std::to_string(n) + " full rank " + std::to_string(full);
            return r;
        }
        for (const Triplet& t : triplet_set(AlgebraId(n)).triplets()) {
            const std::vector<std::pair<int, int>> local{
                {t.idx[0], t.idx[1]}, {t.idx[0], t.idx[2]}, {t.idx[1], t.idx[2]}};
            const int q = derivation_span_rank(local, AlgebraId(n), t.idx);
            if (q != 3) {
                r.passed = false;
                r.detail = "rule " + std::to_string(n) + " quaternion rank " + std::to_string(q);
                return r;
            }
        }
    }
    r.detail = "rank 14 over 21 pairs and 3 per triplet, all 16 rules";
    return r;
}

inline CheckResult equality_criterion(const Options&) {
    CheckResult r{11, "cross-algebra equality criterion", true, ""};
    int equal_cases = 0;
    for (int u = 1; u <= 7; ++u) {
        for (int v = 1; v <= 7; ++v) {
            for (int a = 1; a <= 7; ++a) {
                const bool all = cross_algebra_equal(IntOctonion::unit(u), IntOctonion::unit(v),
                                                     IntOctonion::unit(a))
                                     .all();
                if (all != in_common_triplet(u, v, a)) {
                    r.passed = false;
                    r.detail = "mismatch at (" + std::to_string(u) + "," + std::to_string(v) + "," +
                               std::to_string(a) + ")";
                    return r;
                }
                equal_cases += all;
            }
        }
    }
    r.detail = "343 ordered triples, " + std::to_string(equal_cases) + " equal in all 16 rules";
    return r;
}

inline CheckResult identify_roundtrip(const Options&) {
    CheckResult r{12, "identify_algebra round trip", true, ""};
    for (int n = 0; n < 16; ++n) {
        if (identify_algebra(mul_table(AlgebraId(n))).value() != n) {
            r.passed = false;
            r.detail = "table " + std::to_string(n) + " misidentified";
            return r;
        }
    }
    MulTable mutated = mul_table(AlgebraId(0));
    mutated.entries[1][2] = {1, 4};
    mutated.entries[2][1] = {-1, 4};
    try {
        (void)identify_algebra(mutated);
        r.passed = false;
        r.detail = "mutated table (i1 i2 = i4) accepted";
    } catch (const NotAnEquivalentAlgebra&) {
        r.detail = "16 tables identified, mutated table rejected";
    }
    return r;
}

}  // namespace detail

/// Runs every acceptance criterion in order. Never throws for a failing
/// criterion; an unexpected exception is reported as a failed check.
[[nodiscard]] inline std::vector<CheckResult> run_all(const Options& opt = {}) {
    using Check = CheckResult (*)(const Options&);
    const std::array<std::pair<int, Check>, 12> checks{{
        {1, detail::table_fidelity},
        {2, detail::norm_multiplicativity},
        {3, detail::hadamard_involution},
        {4, detail::row_generators},
        {5, detail::sieve_invariance},
        {6, detail::xor_equivariance},
        {7, detail::leibniz},
        {8, detail::closed_form},
        {9, detail::flip_signatures},
        {10, detail::dimensions},
        {11, detail::equality_criterion},
        {12, detail::identify_roundtrip},
    }};
    std::vector<CheckResult> out;
    for (const auto& [id, check] : checks) {
        try {
            out.push_back(check(opt));
        } catch (const std::exception& e) {
            out.push_back({id, "criterion " + std::to_string(id), false, std::string("exception: ") + e.what()});
        }
    }
    return out;
}

}  // namespace octosieve::acceptance
