#ifndef CUBIC27_EXACT_RATIONAL_HPP
#define CUBIC27_EXACT_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <span>
#include <string>
#include <string_view>

namespace cubic27 {

/// Arbitrary-precision rational number, always in lowest terms with a
/// positive denominator. Thin value wrapper over GMP's mpq_class so that
/// generic code never sees gmpxx expression templates.
class Rational {
public:
    Rational() = default;

    template <std::integral T>
    Rational(T v) : q_(static_cast<long>(v)) {}

    Rational(const mpz_class& num, const mpz_class& den);
    explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

    /// Accepts "n" or "n/d" with optional sign and surrounding blanks.
    static Rational parse(std::string_view text);

    const mpq_class& value() const { return q_; }
    mpz_class numerator() const { return q_.get_num(); }
    mpz_class denominator() const { return q_.get_den(); }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_one() const { return q_ == 1; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    Rational inverse() const;
    Rational abs() const { return Rational(mpq_class(::abs(q_))); }

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.q_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    /// "n" for integers, "n/d" otherwise.
    std::string str() const;

private:
    mpq_class q_;
};

using Scalar = Rational;

/// Rescales a coefficient vector in place to coprime integers, keeping signs.
/// Entries must already be normalized so that the first nonzero one is
/// positive; the multiplier applied is positive.
void clear_denominators(std::span<Rational> coeffs);

inline bool is_rational_value(const Rational&) { return true; }
inline Rational rational_part(const Rational& r) { return r; }

} // namespace cubic27

#endif
