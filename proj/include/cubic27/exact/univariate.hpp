#ifndef CUBIC27_EXACT_UNIVARIATE_HPP
#define CUBIC27_EXACT_UNIVARIATE_HPP

#include "cubic27/exact/polynomial.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace cubic27 {

/// Dense univariate polynomial, coefficients from degree 0 upward, trimmed.
template <ExactField K>
class UPoly {
public:
    UPoly() = default;
    explicit UPoly(std::vector<K> coeffs) : c_(std::move(coeffs)) { trim(); }

    static UPoly monomial(std::size_t degree, const K& c) {
        std::vector<K> v(degree + 1, K(0));
        v[degree] = c;
        return UPoly(std::move(v));
    }

    bool is_zero() const { return c_.empty(); }
    /// -1 for zero.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<K>& coeffs() const { return c_; }
    const K& leading() const { return c_.back(); }
    K coeff(std::size_t k) const { return k < c_.size() ? c_[k] : K(0); }

    K evaluate(const K& x) const {
        K acc(0);
        for (std::size_t k = c_.size(); k-- > 0;) acc = acc * x + c_[k];
        return acc;
    }

    UPoly derivative() const {
        std::vector<K> d;
        for (std::size_t k = 1; k < c_.size(); ++k) d.push_back(c_[k] * K(static_cast<long>(k)));
        return UPoly(std::move(d));
    }

    UPoly monic() const {
        if (is_zero()) return *this;
        return scaled(leading().inverse());
    }

    UPoly scaled(const K& s) const {
        std::vector<K> v = c_;
        for (auto& x : v) x *= s;
        return UPoly(std::move(v));
    }

    friend UPoly operator+(const UPoly& a, const UPoly& b) {
        std::vector<K> v(std::max(a.c_.size(), b.c_.size()), K(0));
        for (std::size_t k = 0; k < a.c_.size(); ++k) v[k] += a.c_[k];
        for (std::size_t k = 0; k < b.c_.size(); ++k) v[k] += b.c_[k];
        return UPoly(std::move(v));
    }
    friend UPoly operator-(const UPoly& a, const UPoly& b) { return a + b.scaled(K(-1)); }
    friend UPoly operator*(const UPoly& a, const UPoly& b) {
        if (a.is_zero() || b.is_zero()) return UPoly();
        std::vector<K> v(a.c_.size() + b.c_.size() - 1, K(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
        return UPoly(std::move(v));
    }
    friend bool operator==(const UPoly&, const UPoly&) = default;

    /// Euclidean division: a = q*b + r with deg r < deg b.
    static std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
        if (b.is_zero()) throw std::domain_error("polynomial division by zero");
        std::vector<K> rem = a.c_;
        const int db = b.degree();
        const K inv = b.leading().inverse();
        std::vector<K> quot(a.degree() >= db ? a.degree() - db + 1 : 0, K(0));
        for (int k = a.degree(); k >= db; --k) {
            const K f = rem[k] * inv;
            if (f.is_zero()) continue;
            quot[k - db] = f;
            for (int j = 0; j <= db; ++j) rem[k - db + j] -= f * b.c_[j];
        }
        return {UPoly(std::move(quot)), UPoly(std::move(rem))};
    }

    /// Monic gcd; gcd(0, 0) = 0.
    static UPoly gcd(UPoly a, UPoly b) {
        while (!b.is_zero()) {
            UPoly r = divmod(a, b).second;
            a = std::move(b);
            b = std::move(r);
        }
        return a.monic();
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<K> c_;
};

/// Yun's square-free decomposition of a nonzero polynomial: returns monic
/// a_1, a_2, ... with p = lc * a_1 * a_2^2 * a_3^3 * ..., pairwise coprime.
template <ExactField K>
std::vector<UPoly<K>> squarefree_decomposition(const UPoly<K>& p) {
    if (p.is_zero()) throw std::domain_error("square-free decomposition of zero");
    std::vector<UPoly<K>> factors;
    if (p.degree() == 0) return factors;
    UPoly<K> d = p.derivative();
    UPoly<K> a = UPoly<K>::gcd(p, d);
    UPoly<K> b = UPoly<K>::divmod(p, a).first;
    UPoly<K> c = UPoly<K>::divmod(d, a).first;
    for (;;) {
        UPoly<K> e = c - b.derivative();
        if (e.is_zero()) {
            factors.push_back(b.monic());
            break;
        }
        UPoly<K> g = UPoly<K>::gcd(b, e);
        factors.push_back(g);
        b = UPoly<K>::divmod(b, g).first;
        c = UPoly<K>::divmod(e, g).first;
        if (b.degree() == 0) break;
    }
    while (!factors.empty() && factors.back().degree() == 0) factors.pop_back();
    return factors;
}

// ---------------------------------------------------------------------------
// Binary forms b(s, t), stored as homogeneous 2-variable polynomials.

/// Dehomogenization at t = 1 together with the multiplicity of the root
/// [1:0] (the power of t dividing b).
template <ExactField K>
struct DehomogenizedForm {
    UPoly<K> affine;
    int root_at_infinity = 0;
    int degree = 0;
};

template <ExactField K>
DehomogenizedForm<K> dehomogenize(const Polynomial<K>& b) {
    if (b.nvars() != 2) throw std::invalid_argument("binary form must have two variables");
    if (b.is_zero()) throw std::domain_error("zero binary form");
    if (!b.is_homogeneous()) throw std::invalid_argument("binary form must be homogeneous");
    const int n = b.total_degree();
    std::vector<K> coeffs(n + 1, K(0));
    for (const auto& [m, c] : b.terms()) coeffs[m.exps[0]] = c;
    DehomogenizedForm<K> out{UPoly<K>(std::move(coeffs)), 0, n};
    out.root_at_infinity = n - out.affine.degree();
    return out;
}

template <ExactField K>
Polynomial<K> homogenize(const UPoly<K>& u, int degree) {
    std::vector<typename Polynomial<K>::Term> terms;
    for (int k = 0; k <= u.degree(); ++k) {
        if (u.coeff(k).is_zero()) continue;
        Monomial m;
        m.exps[0] = static_cast<std::uint16_t>(k);
        m.exps[1] = static_cast<std::uint16_t>(degree - k);
        terms.emplace_back(m, u.coeff(k));
    }
    return Polynomial<K>::from_terms(2, std::move(terms));
}

/// Gcd of binary forms (monic in the dehomogenized sense).
template <ExactField K>
Polynomial<K> binary_gcd(const Polynomial<K>& a, const Polynomial<K>& b) {
    const auto da = dehomogenize(a), db = dehomogenize(b);
    const UPoly<K> g = UPoly<K>::gcd(da.affine, db.affine);
    const int inf = std::min(da.root_at_infinity, db.root_at_infinity);
    return homogenize(g, g.degree() + inf);
}

/// Exact quotient a / b of binary forms; throws if b does not divide a.
template <ExactField K>
Polynomial<K> binary_divide(const Polynomial<K>& a, const Polynomial<K>& b) {
    const auto da = dehomogenize(a), db = dehomogenize(b);
    if (db.root_at_infinity > da.root_at_infinity) throw std::domain_error("binary form does not divide");
    auto [q, r] = UPoly<K>::divmod(da.affine, db.affine);
    if (!r.is_zero()) throw std::domain_error("binary form does not divide");
    return homogenize(q, da.degree - db.degree);
}

/// Root-multiplicity structure of a binary form, from the gcd(b, b') tower.
struct SquarefreeProfile {
    int degree = 0;
    /// count_by_multiplicity[k] = number of distinct roots of multiplicity k+1.
    std::vector<int> count_by_multiplicity;
    /// Degree of gcd(b, b') counted over P^1: sum of (multiplicity - 1).
    int gcd_degree = 0;
    /// Whether gcd(b, b') is itself square-free (no root of multiplicity >= 3).
    bool gcd_squarefree = true;

    int distinct_roots(int multiplicity) const {
        return multiplicity >= 1 && multiplicity <= static_cast<int>(count_by_multiplicity.size())
                   ? count_by_multiplicity[multiplicity - 1]
                   : 0;
    }
    /// Exactly two distinct double roots, all other roots simple.
    bool is_bitangent() const { return gcd_degree == 2 && gcd_squarefree; }
};

template <ExactField K>
SquarefreeProfile binary_squarefree_profile(const Polynomial<K>& b) {
    const DehomogenizedForm<K> d = dehomogenize(b);
    SquarefreeProfile prof;
    prof.degree = d.degree;
    const auto factors = d.affine.degree() > 0 ? squarefree_decomposition(d.affine) : std::vector<UPoly<K>>{};
    prof.count_by_multiplicity.assign(std::max<std::size_t>(factors.size(), d.root_at_infinity), 0);
    for (std::size_t k = 0; k < factors.size(); ++k)
        prof.count_by_multiplicity[k] += std::max(factors[k].degree(), 0);
    if (d.root_at_infinity > 0) ++prof.count_by_multiplicity[d.root_at_infinity - 1];
    for (std::size_t k = 0; k < prof.count_by_multiplicity.size(); ++k) {
        prof.gcd_degree += prof.count_by_multiplicity[k] * static_cast<int>(k);
        if (k >= 2 && prof.count_by_multiplicity[k] > 0) prof.gcd_squarefree = false;
    }
    while (!prof.count_by_multiplicity.empty() && prof.count_by_multiplicity.back() == 0)
        prof.count_by_multiplicity.pop_back();
    return prof;
}

} // namespace cubic27

#endif
