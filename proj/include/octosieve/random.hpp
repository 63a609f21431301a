#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "octosieve/expr.hpp"
#include "octosieve/octonion.hpp"

namespace octosieve {

// Coefficients drawn for randomized checks. Small enough that every product
// and sum the checks form stays exactly representable in a double.
inline constexpr std::int64_t default_coeff_bound = 8;

/// Seeded source of small integer test data. Uses the raw 64-bit engine
/// output (not std::uniform_int_distribution) so sequences are identical
/// across standard library implementations.
class IntSampler {
public:
    explicit IntSampler(std::uint64_t seed, std::int64_t bound = default_coeff_bound)
        : engine_(seed), bound_(bound) {}

    /// Uniform in [-bound, bound].
    std::int64_t next() {
        const auto span = static_cast<std::uint64_t>(2 * bound_ + 1);
        return static_cast<std::int64_t>(engine_() % span) - bound_;
    }

    IntOctonion octonion() {
        IntOctonion o;
        for (auto& c : o.coeffs) c = next();
        return o;
    }

    /// Integer combination of the given basis indices (0 = real unit).
    IntOctonion combination(const std::vector<int>& basis) {
        IntOctonion o;
        for (int k : basis) o.coeffs[k] = next();
        return o;
    }

    Assignment assignment(const std::vector<std::string>& vars) {
        Assignment env;
        for (const auto& v : vars) env.emplace(v, octonion().cast<double>());
        return env;
    }

private:
    std::mt19937_64 engine_;
    std::int64_t bound_;
};

}  // namespace octosieve
