#pragma once

#include <concepts>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace octosieve {

/**
 * Rank of an integer matrix by fraction-free (Bareiss) elimination.
 *
 * Every intermediate value is a minor of the input, and each division by the
 * previous pivot is exact, so the result has no rounding threshold.
 * Throws std::overflow_error if an intermediate product leaves the range of
 * Int.
 */
template <std::signed_integral Int>
[[nodiscard]] std::size_t exact_rank(std::vector<std::vector<Int>> m) {
    const std::size_t rows = m.size();
    if (rows == 0) return 0;
    const std::size_t cols = m.front().size();

    auto checked_mul = [](Int a, Int b) {
        Int r{};
        if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("exact_rank: overflow");
        return r;
    };
    auto checked_sub = [](Int a, Int b) {
        Int r{};
        if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("exact_rank: overflow");
        return r;
    };

    Int prev_pivot = 1;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && m[pivot][col] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[rank], m[pivot]);

        const Int p = m[rank][col];
        for (std::size_t r = rank + 1; r < rows; ++r) {
            const Int f = m[r][col];
            for (std::size_t c = col; c < cols; ++c) {
                m[r][c] = checked_sub(checked_mul(p, m[r][c]), checked_mul(f, m[rank][c])) / prev_pivot;
            }
        }
        prev_pivot = p;
        ++rank;
    }
    return rank;
}

}  // namespace octosieve
