#include "cubic27/exact/parse.hpp"
#include "cubic27/exact/polynomial.hpp"

#include <cctype>
#include <stdexcept>
#include <string>

namespace cubic27 {

std::vector<Monomial> monomials_of_degree(int nvars, int degree) {
    std::vector<Monomial> out;
    Monomial current;
    // Lex-descending enumeration of exponent vectors with fixed sum.
    auto recurse = [&](auto&& self, int var, int remaining) -> void {
        if (var == nvars - 1) {
            current.exps[var] = static_cast<std::uint16_t>(remaining);
            out.push_back(current);
            current.exps[var] = 0;
            return;
        }
        for (int e = remaining; e >= 0; --e) {
            current.exps[var] = static_cast<std::uint16_t>(e);
            self(self, var + 1, remaining - e);
        }
        current.exps[var] = 0;
    };
    recurse(recurse, 0, degree);
    return out;
}

const char* variable_name(int nvars, int index) {
    static const char* four[] = {"x", "y", "z", "w"};
    static const char* two[] = {"s", "t"};
    if (nvars == 2) return two[index];
    if (nvars == 1) return "t";
    return four[index];
}

namespace {

class Parser {
public:
    Parser(std::string_view text, int nvars) : text_(text), nvars_(nvars) {}

    MPoly run() {
        MPoly p = expression();
        skip();
        if (pos_ != text_.size()) fail("unexpected character");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("polynomial parse error at offset " + std::to_string(pos_) + ": " + what +
                                    " in '" + std::string(text_) + "'");
    }

    void skip() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    MPoly expression() {
        MPoly p = term();
        for (;;) {
            if (accept('+')) p = p + term();
            else if (accept('-')) p = p - term();
            else return p;
        }
    }

    MPoly term() {
        MPoly p = unary();
        for (;;) {
            if (accept('*')) {
                p = p * unary();
            } else if (accept('/')) {
                const MPoly d = unary();
                if (d.total_degree() != 0) fail("division by a non-constant");
                p = p.scaled(d.leading_term().second.inverse());
            } else {
                return p;
            }
        }
    }

    MPoly unary() {
        if (accept('-')) return -unary();
        if (accept('+')) return unary();
        return power();
    }

    MPoly power() {
        MPoly base = primary();
        if (!accept('^')) return base;
        skip();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected exponent");
        return base.pow(static_cast<unsigned>(std::stoul(std::string(text_.substr(start, pos_ - start)))));
    }

    MPoly primary() {
        skip();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            MPoly p = expression();
            if (!accept(')')) fail("expected ')'");
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            return MPoly::constant(nvars_, Rational::parse(text_.substr(start, pos_ - start)));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            for (int v = 0; v < nvars_; ++v) {
                if (c == variable_name(nvars_, v)[0]) {
                    ++pos_;
                    return MPoly::variable(nvars_, v);
                }
            }
            fail(std::string("unknown variable '") + c + "'");
        }
        fail("unexpected character");
    }

    std::string_view text_;
    int nvars_;
    std::size_t pos_ = 0;
};

} // namespace

MPoly parse_polynomial(std::string_view text, int nvars) { return Parser(text, nvars).run(); }

} // namespace cubic27
