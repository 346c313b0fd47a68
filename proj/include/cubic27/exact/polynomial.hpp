#ifndef CUBIC27_EXACT_POLYNOMIAL_HPP
#define CUBIC27_EXACT_POLYNOMIAL_HPP

#include "cubic27/exact/field.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cubic27 {

inline constexpr int kMaxVars = 4;

struct Monomial {
    std::array<std::uint16_t, kMaxVars> exps{};

    int degree() const {
        int d = 0;
        for (auto e : exps) d += e;
        return d;
    }
    Monomial operator*(const Monomial& o) const {
        Monomial m;
        for (int k = 0; k < kMaxVars; ++k) m.exps[k] = static_cast<std::uint16_t>(exps[k] + o.exps[k]);
        return m;
    }
    friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Graded lexicographic order with x > y > z > w; "greater" sorts leading terms first.
struct GrlexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const {
        const int da = a.degree(), db = b.degree();
        if (da != db) return da > db;
        return a.exps > b.exps;
    }
};

/// All monomials of total degree `degree` in `nvars` variables, leading first.
std::vector<Monomial> monomials_of_degree(int nvars, int degree);

/// Variable names used in the text serialization for the given arity.
const char* variable_name(int nvars, int index);

/// Sparse multivariate polynomial in 1..4 variables. Immutable value type:
/// terms are kept sorted in graded-lex order, leading term first, with no
/// zero coefficients.
template <ExactField K>
class Polynomial {
public:
    using Term = std::pair<Monomial, K>;

    explicit Polynomial(int nvars = 4) : nvars_(nvars) { check_arity(nvars); }

    static Polynomial constant(int nvars, const K& c) { return monomial(nvars, Monomial{}, c); }

    static Polynomial variable(int nvars, int index) {
        if (index < 0 || index >= nvars) throw std::invalid_argument("variable index out of range");
        Monomial m;
        m.exps[index] = 1;
        return monomial(nvars, m, K(1));
    }

    static Polynomial monomial(int nvars, const Monomial& m, const K& c) {
        Polynomial p(nvars);
        for (int k = nvars; k < kMaxVars; ++k)
            if (m.exps[k] != 0) throw std::invalid_argument("monomial uses a variable beyond nvars");
        if (!c.is_zero()) p.terms_.emplace_back(m, c);
        return p;
    }

    /// Sum of coeffs[k] * var_k.
    static Polynomial linear(std::span<const K> coeffs) {
        const int n = static_cast<int>(coeffs.size());
        Polynomial p(n);
        for (int k = 0; k < n; ++k) {
            if (coeffs[k].is_zero()) continue;
            Monomial m;
            m.exps[k] = 1;
            p.terms_.emplace_back(m, coeffs[k]);
        }
        return p;
    }

    /// Combines like terms and drops zeros; terms may come in any order.
    static Polynomial from_terms(int nvars, std::vector<Term> terms) {
        std::map<Monomial, K, GrlexGreater> acc;
        for (auto& [m, c] : terms) {
            auto [it, inserted] = acc.try_emplace(m, c);
            if (!inserted) it->second += c;
        }
        Polynomial p(nvars);
        p.absorb(acc);
        return p;
    }

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const std::vector<Term>& terms() const { return terms_; }

    /// -1 for the zero polynomial.
    int total_degree() const { return terms_.empty() ? -1 : terms_.front().first.degree(); }

    bool is_homogeneous() const {
        return std::all_of(terms_.begin(), terms_.end(),
                           [d = total_degree()](const Term& t) { return t.first.degree() == d; });
    }

    const Term& leading_term() const {
        if (terms_.empty()) throw std::domain_error("leading term of zero polynomial");
        return terms_.front();
    }

    K coefficient(const Monomial& m) const {
        auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                                   [](const Term& t, const Monomial& x) { return GrlexGreater{}(t.first, x); });
        return (it != terms_.end() && it->first == m) ? it->second : K(0);
    }

    K evaluate(std::span<const K> point) const {
        if (static_cast<int>(point.size()) != nvars_) throw std::invalid_argument("evaluation arity mismatch");
        std::array<std::vector<K>, kMaxVars> powers;
        for (int v = 0; v < nvars_; ++v) {
            powers[v].push_back(K(1));
            const int top = max_exponent(v);
            for (int e = 1; e <= top; ++e) powers[v].push_back(powers[v].back() * point[v]);
        }
        K sum(0);
        for (const auto& [m, c] : terms_) {
            K t = c;
            for (int v = 0; v < nvars_; ++v)
                if (m.exps[v] != 0) t *= powers[v][m.exps[v]];
            sum += t;
        }
        return sum;
    }

    Polynomial derivative(int var) const {
        if (var < 0 || var >= nvars_) throw std::invalid_argument("derivative variable out of range");
        std::vector<Term> out;
        for (const auto& [m, c] : terms_) {
            if (m.exps[var] == 0) continue;
            Monomial d = m;
            --d.exps[var];
            out.emplace_back(d, c * K(static_cast<long>(m.exps[var])));
        }
        return from_terms(nvars_, std::move(out));
    }

    /// sum_k direction[k] * d/dx_k.
    Polynomial directional_derivative(std::span<const K> direction) const {
        if (static_cast<int>(direction.size()) != nvars_) throw std::invalid_argument("direction arity mismatch");
        Polynomial sum(nvars_);
        for (int v = 0; v < nvars_; ++v)
            if (!direction[v].is_zero()) sum = sum + derivative(v).scaled(direction[v]);
        return sum;
    }

    /// Composition p(images[0], ..., images[n-1]); all images share one arity.
    Polynomial substitute(std::span<const Polynomial> images) const {
        if (static_cast<int>(images.size()) != nvars_) throw std::invalid_argument("substitution arity mismatch");
        const int target = images.empty() ? nvars_ : images.front().nvars();
        for (const auto& im : images)
            if (im.nvars() != target) throw std::invalid_argument("substitution images have mixed arity");
        std::array<std::vector<Polynomial>, kMaxVars> powers;
        for (int v = 0; v < nvars_; ++v) {
            powers[v].push_back(constant(target, K(1)));
            const int top = max_exponent(v);
            for (int e = 1; e <= top; ++e) powers[v].push_back(powers[v].back() * images[v]);
        }
        std::map<Monomial, K, GrlexGreater> acc;
        for (const auto& [m, c] : terms_) {
            Polynomial t = constant(target, c);
            for (int v = 0; v < nvars_; ++v)
                if (m.exps[v] != 0) t = t * powers[v][m.exps[v]];
            for (const auto& [tm, tc] : t.terms_) {
                auto [it, inserted] = acc.try_emplace(tm, tc);
                if (!inserted) it->second += tc;
            }
        }
        Polynomial out(target);
        out.absorb(acc);
        return out;
    }

    Polynomial scaled(const K& s) const {
        if (s.is_zero()) return Polynomial(nvars_);
        Polynomial p = *this;
        for (auto& t : p.terms_) t.second *= s;
        return p;
    }

    Polynomial pow(unsigned e) const {
        Polynomial result = constant(nvars_, K(1));
        Polynomial base = *this;
        while (e != 0) {
            if (e & 1U) result = result * base;
            e >>= 1U;
            if (e != 0) base = base * base;
        }
        return result;
    }

    /// Canonical representative up to scalar: leading coefficient 1, then
    /// denominators cleared (over Q: coprime integers, positive leading term).
    Polynomial normalized() const {
        if (terms_.empty()) return *this;
        std::vector<K> cs;
        cs.reserve(terms_.size());
        for (const auto& t : terms_) cs.push_back(t.second);
        normalize_projectively(std::span<K>(cs));
        Polynomial p = *this;
        for (std::size_t k = 0; k < cs.size(); ++k) p.terms_[k].second = cs[k];
        return p;
    }

    template <ExactField L, class Fn>
    Polynomial<L> map_coefficients(Fn&& fn) const {
        std::vector<typename Polynomial<L>::Term> out;
        out.reserve(terms_.size());
        for (const auto& [m, c] : terms_) out.emplace_back(m, fn(c));
        return Polynomial<L>::from_terms(nvars_, std::move(out));
    }

    /// Terms like `3/2*x^2*y`, joined with " + " / " - "; "0" for zero.
    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            std::string coeff = c.str();
            bool negative = !coeff.empty() && coeff.front() == '-';
            if (negative) coeff.erase(0, 1);
            if (first) {
                if (negative) out += "-";
            } else {
                out += negative ? " - " : " + ";
            }
            first = false;
            std::string mono;
            for (int v = 0; v < nvars_; ++v) {
                if (m.exps[v] == 0) continue;
                if (!mono.empty()) mono += "*";
                mono += variable_name(nvars_, v);
                if (m.exps[v] > 1) mono += "^" + std::to_string(m.exps[v]);
            }
            if (mono.empty()) out += coeff;
            else if (coeff == "1") out += mono;
            else out += coeff + "*" + mono;
        }
        return out;
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) { return merge(a, b, false); }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return merge(a, b, true); }
    friend Polynomial operator-(const Polynomial& a) { return a.scaled(K(-1)); }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        same_arity(a, b);
        std::map<Monomial, K, GrlexGreater> acc;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) {
                auto [it, inserted] = acc.try_emplace(ma * mb, ca * cb);
                if (!inserted) it->second += ca * cb;
            }
        Polynomial p(a.nvars_);
        p.absorb(acc);
        return p;
    }
    friend Polynomial operator*(const Polynomial& a, const K& s) { return a.scaled(s); }
    friend Polynomial operator*(const K& s, const Polynomial& a) { return a.scaled(s); }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }

private:
    static void check_arity(int n) {
        if (n < 1 || n > kMaxVars) throw std::invalid_argument("polynomial arity must be 1..4");
    }
    static void same_arity(const Polynomial& a, const Polynomial& b) {
        if (a.nvars_ != b.nvars_) throw std::invalid_argument("polynomial arity mismatch");
    }

    int max_exponent(int v) const {
        int top = 0;
        for (const auto& t : terms_) top = std::max<int>(top, t.first.exps[v]);
        return top;
    }

    void absorb(std::map<Monomial, K, GrlexGreater>& acc) {
        terms_.clear();
        terms_.reserve(acc.size());
        for (auto& [m, c] : acc)
            if (!c.is_zero()) terms_.emplace_back(m, std::move(c));
    }

    static Polynomial merge(const Polynomial& a, const Polynomial& b, bool subtract) {
        same_arity(a, b);
        Polynomial p(a.nvars_);
        p.terms_.reserve(a.terms_.size() + b.terms_.size());
        auto ia = a.terms_.begin(), ib = b.terms_.begin();
        const GrlexGreater before;
        while (ia != a.terms_.end() || ib != b.terms_.end()) {
            if (ib == b.terms_.end() || (ia != a.terms_.end() && before(ia->first, ib->first))) {
                p.terms_.push_back(*ia++);
            } else if (ia == a.terms_.end() || before(ib->first, ia->first)) {
                p.terms_.emplace_back(ib->first, subtract ? -ib->second : ib->second);
                ++ib;
            } else {
                K c = subtract ? ia->second - ib->second : ia->second + ib->second;
                if (!c.is_zero()) p.terms_.emplace_back(ia->first, std::move(c));
                ++ia;
                ++ib;
            }
        }
        return p;
    }

    int nvars_;
    std::vector<Term> terms_;
};

using MPoly = Polynomial<Rational>;

/// Returns lambda with p = lambda * q when it exists. When q = 0 the answer
/// is 1 if p = 0 as well (convention) and absent otherwise.
template <ExactField K>
std::optional<K> equal_up_to_scalar(const Polynomial<K>& p, const Polynomial<K>& q) {
    if (p.nvars() != q.nvars()) throw std::invalid_argument("polynomial arity mismatch");
    if (q.is_zero()) return p.is_zero() ? std::optional<K>(K(1)) : std::nullopt;
    if (p.is_zero()) return K(0);
    if (p.size() != q.size()) return std::nullopt;
    const K lambda = p.leading_term().second / q.leading_term().second;
    for (std::size_t k = 0; k < p.size(); ++k) {
        const auto& [mp, cp] = p.terms()[k];
        const auto& [mq, cq] = q.terms()[k];
        if (!(mp == mq) || !(cp == lambda * cq)) return std::nullopt;
    }
    return lambda;
}

/// Product of a sequence of polynomials of equal arity.
template <ExactField K>
Polynomial<K> product(std::span<const Polynomial<K>> factors, int nvars) {
    Polynomial<K> p = Polynomial<K>::constant(nvars, K(1));
    for (const auto& f : factors) p = p * f;
    return p;
}

/// Coefficient-wise embedding Q -> K.
template <ExactField K>
Polynomial<K> promote(const MPoly& p) {
    return p.template map_coefficients<K>([](const Rational& c) { return K(c); });
}

} // namespace cubic27

#endif
