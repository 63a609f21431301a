#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <ostream>

namespace octosieve {

/**
 * Octonion as eight real coefficients over the basis {1, i1, ..., i7}.
 *
 * Coefficient 0 is the real part. The type carries no multiplication rule;
 * products are always taken relative to one of the sixteen equivalent
 * algebras (see algebra.hpp). The scalar is a template parameter so exact
 * integer arithmetic can be used where a check must not depend on rounding.
 */
template <typename T>
struct BasicOctonion {
    using value_type = T;
    static constexpr std::size_t dimension = 8;

    std::array<T, 8> coeffs{};

    constexpr BasicOctonion() = default;
    explicit constexpr BasicOctonion(const std::array<T, 8>& c) : coeffs(c) {}

    /// Real scalar embedded as r * 1.
    static constexpr BasicOctonion real(T r) {
        BasicOctonion o;
        o.coeffs[0] = r;
        return o;
    }

    /// Basis element: 0 is the real unit, 1..7 are i1..i7.
    static constexpr BasicOctonion unit(std::size_t k) {
        BasicOctonion o;
        o.coeffs[k] = T{1};
        return o;
    }

    constexpr T& operator[](std::size_t k) { return coeffs[k]; }
    constexpr const T& operator[](std::size_t k) const { return coeffs[k]; }

    [[nodiscard]] constexpr T real_part() const { return coeffs[0]; }

    [[nodiscard]] constexpr bool is_zero() const {
        for (const T& c : coeffs) {
            if (c != T{}) return false;
        }
        return true;
    }

    /// Converts coefficient-wise to another scalar type.
    template <typename U>
    [[nodiscard]] constexpr BasicOctonion<U> cast() const {
        BasicOctonion<U> o;
        for (std::size_t k = 0; k < 8; ++k) o.coeffs[k] = static_cast<U>(coeffs[k]);
        return o;
    }

    constexpr BasicOctonion& operator+=(const BasicOctonion& rhs) {
        for (std::size_t k = 0; k < 8; ++k) coeffs[k] += rhs.coeffs[k];
        return *this;
    }
    constexpr BasicOctonion& operator-=(const BasicOctonion& rhs) {
        for (std::size_t k = 0; k < 8; ++k) coeffs[k] -= rhs.coeffs[k];
        return *this;
    }
    constexpr BasicOctonion& operator*=(T s) {
        for (T& c : coeffs) c *= s;
        return *this;
    }

    friend constexpr BasicOctonion operator+(BasicOctonion a, const BasicOctonion& b) { return a += b; }
    friend constexpr BasicOctonion operator-(BasicOctonion a, const BasicOctonion& b) { return a -= b; }
    friend constexpr BasicOctonion operator-(BasicOctonion a) {
        for (T& c : a.coeffs) c = -c;
        return a;
    }
    friend constexpr BasicOctonion operator*(T s, BasicOctonion a) { return a *= s; }
    friend constexpr BasicOctonion operator*(BasicOctonion a, T s) { return a *= s; }

    friend constexpr bool operator==(const BasicOctonion&, const BasicOctonion&) = default;
};

using Octonion = BasicOctonion<double>;
using IntOctonion = BasicOctonion<std::int64_t>;

/// Real part kept, all seven imaginary coefficients negated.
template <typename T>
[[nodiscard]] constexpr BasicOctonion<T> conjugate(BasicOctonion<T> a) {
    for (std::size_t k = 1; k < 8; ++k) a.coeffs[k] = -a.coeffs[k];
    return a;
}

/// Squared Euclidean length; exact for integer scalars.
template <typename T>
[[nodiscard]] constexpr T norm_squared(const BasicOctonion<T>& a) {
    T s{};
    for (const T& c : a.coeffs) s += c * c;
    return s;
}

template <typename T>
[[nodiscard]] double norm(const BasicOctonion<T>& a) {
    return std::sqrt(static_cast<double>(norm_squared(a)));
}

[[nodiscard]] inline bool is_finite(const Octonion& a) {
    for (double c : a.coeffs) {
        if (!std::isfinite(c)) return false;
    }
    return true;
}

template <typename T>
std::ostream& operator<<(std::ostream& os, const BasicOctonion<T>& a) {
    os << '(';
    for (std::size_t k = 0; k < 8; ++k) {
        if (k) os << ", ";
        os << a.coeffs[k];
    }
    return os << ')';
}

}  // namespace octosieve
