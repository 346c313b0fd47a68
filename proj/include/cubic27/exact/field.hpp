#ifndef CUBIC27_EXACT_FIELD_HPP
#define CUBIC27_EXACT_FIELD_HPP

#include "cubic27/exact/quadratic.hpp"
#include "cubic27/exact/rational.hpp"

#include <concepts>
#include <span>
#include <string>

namespace cubic27 {

template <class K>
concept ExactField = std::regular<K> && requires(K a, K b, std::span<K> v) {
    { a + b } -> std::convertible_to<K>;
    { a - b } -> std::convertible_to<K>;
    { a * b } -> std::convertible_to<K>;
    { a / b } -> std::convertible_to<K>;
    { -a } -> std::convertible_to<K>;
    { a.is_zero() } -> std::same_as<bool>;
    { a.inverse() } -> std::convertible_to<K>;
    { a.str() } -> std::convertible_to<std::string>;
    { is_rational_value(a) } -> std::same_as<bool>;
    clear_denominators(v);
    K(1);
};

/// Canonical scaling of a coefficient vector: divide by the first nonzero
/// entry, then clear denominators (over Q: coprime integers, first entry > 0).
template <ExactField K>
void normalize_projectively(std::span<K> coeffs) {
    for (const auto& c : coeffs) {
        if (c.is_zero()) continue;
        const K inv = c.inverse();
        for (auto& x : coeffs) x *= inv;
        break;
    }
    clear_denominators(coeffs);
}

} // namespace cubic27

#endif
