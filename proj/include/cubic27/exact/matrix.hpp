#ifndef CUBIC27_EXACT_MATRIX_HPP
#define CUBIC27_EXACT_MATRIX_HPP

#include "cubic27/exact/field.hpp"

#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace cubic27 {

/// Dense row-major matrix over an exact field.
template <ExactField K>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, K(0)) {}
    Matrix(std::initializer_list<std::initializer_list<K>> init) {
        rows_ = init.size();
        cols_ = rows_ == 0 ? 0 : init.begin()->size();
        for (const auto& row : init) {
            if (row.size() != cols_) throw std::invalid_argument("ragged matrix initializer");
            a_.insert(a_.end(), row.begin(), row.end());
        }
    }

    static Matrix from_rows(const std::vector<std::vector<K>>& rows) {
        Matrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
        for (std::size_t r = 0; r < m.rows_; ++r) {
            if (rows[r].size() != m.cols_) throw std::invalid_argument("ragged matrix rows");
            for (std::size_t c = 0; c < m.cols_; ++c) m(r, c) = rows[r][c];
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    K& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const K& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    std::span<const K> row(std::size_t r) const { return {a_.data() + r * cols_, cols_}; }
    std::span<K> row(std::size_t r) { return {a_.data() + r * cols_, cols_}; }

    void swap_rows(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(i, c), (*this)(j, c));
    }

    Matrix transposed() const {
        Matrix t(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
        return t;
    }

    std::vector<K> apply(std::span<const K> v) const {
        if (v.size() != cols_) throw std::invalid_argument("matrix-vector size mismatch");
        std::vector<K> out(rows_, K(0));
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c)
                if (!v[c].is_zero()) out[r] += (*this)(r, c) * v[c];
        return out;
    }

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<K> a_;
};

template <ExactField K>
struct EchelonForm {
    Matrix<K> reduced;               ///< reduced row echelon form
    std::vector<std::size_t> pivots; ///< pivot column of each nonzero row
    std::size_t rank() const { return pivots.size(); }
};

namespace detail {

/// Fraction-free forward elimination (Bareiss). Rows are first scaled to
/// have integral entries over Q so intermediate entries stay integral minors.
/// Returns pivot columns; `sign` tracks row swaps, `scale` the product of the
/// row multipliers applied up front.
template <ExactField K>
std::vector<std::size_t> bareiss_forward(Matrix<K>& m, int& sign, K& scale) {
    sign = 1;
    scale = K(1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        auto row = m.row(r);
        K first(0);
        for (const auto& x : row)
            if (!x.is_zero()) { first = x; break; }
        if (first.is_zero()) continue;
        std::vector<K> copy(row.begin(), row.end());
        clear_denominators(std::span<K>(copy));
        // copy = factor * row for some nonzero factor; recover it from one entry.
        for (std::size_t c = 0; c < row.size(); ++c)
            if (!row[c].is_zero()) { scale *= copy[c] / row[c]; break; }
        std::copy(copy.begin(), copy.end(), row.begin());
    }

    std::vector<std::size_t> pivots;
    K prev(1);
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m(p, c).is_zero()) ++p;
        if (p == m.rows()) continue;
        if (p != r) {
            m.swap_rows(p, r);
            sign = -sign;
        }
        const K pivot = m(r, c);
        for (std::size_t i = r + 1; i < m.rows(); ++i) {
            const K lead = m(i, c);
            for (std::size_t j = c + 1; j < m.cols(); ++j) {
                K v = pivot * m(i, j);
                if (!lead.is_zero()) v -= lead * m(r, j);
                m(i, j) = v / prev;
            }
            m(i, c) = K(0);
        }
        prev = pivot;
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

} // namespace detail

/// Reduced row echelon form via fraction-free elimination followed by
/// back-substitution; deterministic (first nonzero row is the pivot).
template <ExactField K>
EchelonForm<K> reduced_echelon(Matrix<K> m) {
    int sign = 1;
    K scale(1);
    std::vector<std::size_t> pivots = detail::bareiss_forward(m, sign, scale);
    for (std::size_t r = pivots.size(); r-- > 0;) {
        const std::size_t pc = pivots[r];
        const K inv = m(r, pc).inverse();
        for (std::size_t j = pc; j < m.cols(); ++j) m(r, j) *= inv;
        for (std::size_t i = 0; i < r; ++i) {
            const K f = m(i, pc);
            if (f.is_zero()) continue;
            for (std::size_t j = pc; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
        }
    }
    for (std::size_t r = pivots.size(); r < m.rows(); ++r)
        for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) = K(0);
    return {std::move(m), std::move(pivots)};
}

template <ExactField K>
std::size_t rank(const Matrix<K>& m) {
    Matrix<K> copy = m;
    int sign = 1;
    K scale(1);
    return detail::bareiss_forward(copy, sign, scale).size();
}

/// Basis of the right kernel {v : m v = 0}, one vector per free column, with
/// a 1 in that column and 0 in the other free columns.
template <ExactField K>
std::vector<std::vector<K>> kernel_basis(const Matrix<K>& m) {
    const EchelonForm<K> e = reduced_echelon(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : e.pivots) is_pivot[c] = true;
    std::vector<std::vector<K>> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        std::vector<K> v(m.cols(), K(0));
        v[f] = K(1);
        for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

template <ExactField K>
K determinant(const Matrix<K>& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
    if (m.rows() == 0) return K(1);
    Matrix<K> copy = m;
    int sign = 1;
    K scale(1);
    const auto pivots = detail::bareiss_forward(copy, sign, scale);
    if (pivots.size() < m.rows()) return K(0);
    K det = copy(m.rows() - 1, m.cols() - 1) / scale;
    return sign < 0 ? -det : det;
}

} // namespace cubic27

#endif
