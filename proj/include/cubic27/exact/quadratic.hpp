#ifndef CUBIC27_EXACT_QUADRATIC_HPP
#define CUBIC27_EXACT_QUADRATIC_HPP

#include "cubic27/exact/rational.hpp"

#include <algorithm>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace cubic27 {

/// Element a + b*sqrt(D) of the real quadratic field Q(sqrt(D)), D squarefree.
template <long D>
class QuadraticNumber {
    static_assert(D > 1, "QuadraticNumber needs a squarefree D > 1");

public:
    QuadraticNumber() = default;
    QuadraticNumber(Rational a) : a_(std::move(a)) {}
    template <std::integral T>
    QuadraticNumber(T v) : a_(v) {}
    QuadraticNumber(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}

    static QuadraticNumber root() { return QuadraticNumber(Rational(0), Rational(1)); }

    const Rational& rational_part() const { return a_; }
    const Rational& root_part() const { return b_; }

    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    bool is_rational() const { return b_.is_zero(); }
    QuadraticNumber conjugate() const { return QuadraticNumber(a_, -b_); }
    Rational norm() const { return a_ * a_ - Rational(D) * b_ * b_; }

    QuadraticNumber inverse() const {
        if (is_zero()) throw std::domain_error("inverse of zero");
        const Rational n = norm();
        return QuadraticNumber(a_ / n, -b_ / n);
    }

    QuadraticNumber& operator+=(const QuadraticNumber& o) { a_ += o.a_; b_ += o.b_; return *this; }
    QuadraticNumber& operator-=(const QuadraticNumber& o) { a_ -= o.a_; b_ -= o.b_; return *this; }
    QuadraticNumber& operator*=(const QuadraticNumber& o) {
        Rational a = a_ * o.a_ + Rational(D) * b_ * o.b_;
        b_ = a_ * o.b_ + b_ * o.a_;
        a_ = std::move(a);
        return *this;
    }
    QuadraticNumber& operator/=(const QuadraticNumber& o) { return *this *= o.inverse(); }

    friend QuadraticNumber operator+(QuadraticNumber x, const QuadraticNumber& y) { return x += y; }
    friend QuadraticNumber operator-(QuadraticNumber x, const QuadraticNumber& y) { return x -= y; }
    friend QuadraticNumber operator*(QuadraticNumber x, const QuadraticNumber& y) { return x *= y; }
    friend QuadraticNumber operator/(QuadraticNumber x, const QuadraticNumber& y) { return x /= y; }
    friend QuadraticNumber operator-(const QuadraticNumber& x) { return QuadraticNumber(-x.a_, -x.b_); }
    friend bool operator==(const QuadraticNumber&, const QuadraticNumber&) = default;

    /// "a" when rational, otherwise "(a+b*sqrtD)".
    std::string str() const {
        if (b_.is_zero()) return a_.str();
        std::string out = "(";
        if (!a_.is_zero()) out += a_.str() + (b_.sign() > 0 ? "+" : "");
        out += b_.is_one() ? "" : (b_ == Rational(-1) ? "-" : b_.str() + "*");
        return out + "sqrt" + std::to_string(D) + ")";
    }

private:
    Rational a_;
    Rational b_;
};

using QSqrt5 = QuadraticNumber<5>;

template <long D>
bool is_rational_value(const QuadraticNumber<D>& x) { return x.is_rational(); }
template <long D>
Rational rational_part(const QuadraticNumber<D>& x) { return x.rational_part(); }

/// Clears denominators only when every entry is rational; otherwise the
/// monic normalization already applied by the caller is left as is.
template <long D>
void clear_denominators(std::span<QuadraticNumber<D>> coeffs) {
    if (!std::all_of(coeffs.begin(), coeffs.end(), [](const auto& c) { return c.is_rational(); }))
        return;
    std::vector<Rational> flat;
    flat.reserve(coeffs.size());
    for (const auto& c : coeffs) flat.push_back(c.rational_part());
    clear_denominators(std::span<Rational>(flat));
    for (std::size_t k = 0; k < coeffs.size(); ++k) coeffs[k] = QuadraticNumber<D>(flat[k]);
}

} // namespace cubic27

#endif
