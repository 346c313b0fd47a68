#ifndef CUBIC27_EXACT_RESULTANT_HPP
#define CUBIC27_EXACT_RESULTANT_HPP

#include "cubic27/exact/polynomial.hpp"

#include <cstdint>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace cubic27 {

/// A polynomial in an auxiliary variable t whose coefficients are
/// polynomials; coeffs[k] multiplies t^k.
template <ExactField K>
using TPolynomial = std::vector<Polynomial<K>>;

/// Determinant of a square matrix of polynomials by Laplace expansion along
/// rows, memoized on the set of still-unused columns. Division free, so it
/// works over the polynomial ring; fine for the small Sylvester matrices here.
template <ExactField K>
Polynomial<K> polynomial_determinant(const std::vector<std::vector<Polynomial<K>>>& m, int nvars) {
    const std::size_t n = m.size();
    if (n > 20) throw std::invalid_argument("polynomial determinant too large");
    if (n == 0) return Polynomial<K>::constant(nvars, K(1));
    std::unordered_map<std::uint32_t, Polynomial<K>> memo;
    // Rows are consumed top-down; `used` marks columns taken by earlier rows.
    auto minor = [&](auto&& self, std::size_t row, std::uint32_t used) -> Polynomial<K> {
        if (row == n) return Polynomial<K>::constant(nvars, K(1));
        if (auto it = memo.find(used); it != memo.end()) return it->second;
        Polynomial<K> sum(nvars);
        int sign = 1;
        for (std::size_t c = 0; c < n; ++c) {
            if (used & (1U << c)) continue;
            if (!m[row][c].is_zero()) {
                Polynomial<K> term = m[row][c] * self(self, row + 1, used | (1U << c));
                sum = sign > 0 ? sum + term : sum - term;
            }
            sign = -sign;
        }
        memo.emplace(used, sum);
        return sum;
    };
    return minor(minor, 0, 0);
}

/// Sylvester resultant res_t(p, q), p listed first. Both must be nonzero;
/// their degrees in t are taken after dropping zero leading coefficients.
template <ExactField K>
Polynomial<K> resultant_in_t(TPolynomial<K> p, TPolynomial<K> q) {
    auto trim = [](TPolynomial<K>& f) {
        while (!f.empty() && f.back().is_zero()) f.pop_back();
    };
    trim(p);
    trim(q);
    if (p.empty() || q.empty()) throw std::domain_error("resultant of a zero polynomial");
    const int nvars = p.front().nvars();
    for (const auto& c : p)
        if (c.nvars() != nvars) throw std::invalid_argument("resultant coefficient arity mismatch");
    for (const auto& c : q)
        if (c.nvars() != nvars) throw std::invalid_argument("resultant coefficient arity mismatch");
    const std::size_t dp = p.size() - 1, dq = q.size() - 1;
    const std::size_t n = dp + dq;
    if (n == 0) return Polynomial<K>::constant(nvars, K(1));
    std::vector<std::vector<Polynomial<K>>> syl(n, std::vector<Polynomial<K>>(n, Polynomial<K>(nvars)));
    // Rows hold coefficients from the highest power of t down.
    for (std::size_t r = 0; r < dq; ++r)
        for (std::size_t k = 0; k <= dp; ++k) syl[r][r + k] = p[dp - k];
    for (std::size_t r = 0; r < dp; ++r)
        for (std::size_t k = 0; k <= dq; ++k) syl[dq + r][r + k] = q[dq - k];
    return polynomial_determinant(syl, nvars);
}

} // namespace cubic27

#endif
