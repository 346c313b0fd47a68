#include "cubic27/exact/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace cubic27 {

Rational::Rational(const mpz_class& num, const mpz_class& den) : q_(num, den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    q_.canonicalize();
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

mpz_class parse_integer(std::string_view s, std::string_view whole) {
    s = trim(s);
    std::string digits(s);
    bool ok = !digits.empty();
    for (std::size_t k = 0; k < digits.size() && ok; ++k) {
        const char c = digits[k];
        if (std::isdigit(static_cast<unsigned char>(c))) continue;
        if ((c == '-' || c == '+') && k == 0 && digits.size() > 1) continue;
        ok = false;
    }
    if (!ok) throw std::invalid_argument("not a rational number: '" + std::string(whole) + "'");
    if (digits.front() == '+') digits.erase(0, 1);
    return mpz_class(digits, 10);
}

} // namespace

Rational Rational::parse(std::string_view text) {
    const std::string_view t = trim(text);
    const auto slash = t.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(t, text), mpz_class(1));
    const mpz_class den = parse_integer(t.substr(slash + 1), text);
    if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    return Rational(parse_integer(t.substr(0, slash), text), den);
}

Rational Rational::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    return Rational(mpq_class(1 / q_));
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("division by zero");
    q_ /= o.q_;
    return *this;
}

std::string Rational::str() const {
    if (is_integer()) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

void clear_denominators(std::span<Rational> coeffs) {
    mpz_class lcm_den = 1;
    for (const auto& c : coeffs) {
        if (c.is_zero()) continue;
        mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.value().get_den().get_mpz_t());
    }
    mpz_class gcd_num = 0;
    for (auto& c : coeffs) {
        c *= Rational(lcm_den, mpz_class(1));
        mpz_gcd(gcd_num.get_mpz_t(), gcd_num.get_mpz_t(), c.value().get_num().get_mpz_t());
    }
    if (gcd_num == 0 || gcd_num == 1) return;
    const Rational factor(mpz_class(1), gcd_num);
    for (auto& c : coeffs) c *= factor;
}

} // namespace cubic27
