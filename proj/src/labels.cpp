#include "cubic27/labels.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace cubic27 {

namespace {

void check_index(int i) {
    if (i < 1 || i > 6) throw std::invalid_argument("line label index must be in 1..6");
}

// Position of the pair (i, j), i < j, among the 15 pairs in lex order.
std::size_t pair_rank(int i, int j) {
    std::size_t r = 0;
    for (int a = 1; a <= 6; ++a)
        for (int b = a + 1; b <= 6; ++b) {
            if (a == i && b == j) return r;
            ++r;
        }
    throw std::invalid_argument("invalid index pair");
}

std::vector<std::array<TritangentLabel::Pair, 3>> all_partitions() {
    std::vector<std::array<TritangentLabel::Pair, 3>> out;
    for (int b = 2; b <= 6; ++b) {
        std::vector<int> rest;
        for (int k = 2; k <= 6; ++k)
            if (k != b) rest.push_back(k);
        // rest has four entries; pair its smallest with each of the others.
        for (int q = 1; q < 4; ++q) {
            std::vector<int> last;
            for (int t = 1; t < 4; ++t)
                if (t != q) last.push_back(rest[t]);
            out.push_back({TritangentLabel::Pair{1, b}, TritangentLabel::Pair{rest[0], rest[q]},
                           TritangentLabel::Pair{last[0], last[1]}});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

template <class T, std::size_t N, std::size_t... I>
std::array<T, N> to_array_impl(const std::vector<T>& v, std::index_sequence<I...>) {
    return {v.at(I)...};
}

template <std::size_t N, class T>
std::array<T, N> to_array(const std::vector<T>& v) {
    return to_array_impl<T, N>(v, std::make_index_sequence<N>{});
}

int parse_digit(char c) {
    if (c < '1' || c > '6') throw std::invalid_argument(std::string("bad label index '") + c + "'");
    return c - '0';
}

} // namespace

LineLabel LineLabel::E(int i) {
    check_index(i);
    return {Kind::E, i, 0};
}

LineLabel LineLabel::F(int i, int j) {
    check_index(i);
    check_index(j);
    if (i == j) throw std::invalid_argument("F label needs distinct indices");
    return {Kind::F, std::min(i, j), std::max(i, j)};
}

LineLabel LineLabel::G(int j) {
    check_index(j);
    return {Kind::G, j, 0};
}

LineLabel LineLabel::from_index(std::size_t index) { return all_line_labels().at(index); }

LineLabel LineLabel::parse(std::string_view text) {
    if (text.size() == 2 && text[0] == 'E') return E(parse_digit(text[1]));
    if (text.size() == 2 && text[0] == 'G') return G(parse_digit(text[1]));
    if (text.size() == 3 && text[0] == 'F') return F(parse_digit(text[1]), parse_digit(text[2]));
    throw std::invalid_argument("not a line label: '" + std::string(text) + "'");
}

std::size_t LineLabel::index() const {
    switch (kind_) {
    case Kind::E: return static_cast<std::size_t>(i_ - 1);
    case Kind::F: return 6 + pair_rank(i_, j_);
    case Kind::G: return 21 + static_cast<std::size_t>(i_ - 1);
    }
    return 0;
}

std::string LineLabel::str() const {
    switch (kind_) {
    case Kind::E: return "E" + std::to_string(i_);
    case Kind::F: return "F" + std::to_string(i_) + std::to_string(j_);
    case Kind::G: return "G" + std::to_string(i_);
    }
    return {};
}

bool LineLabel::meets(const LineLabel& o) const {
    if (*this == o) return false;
    const auto in_pair = [](const LineLabel& f, int k) { return f.i_ == k || f.j_ == k; };
    if (kind_ == Kind::F && o.kind_ == Kind::F)
        return !in_pair(*this, o.i_) && !in_pair(*this, o.j_);
    if (kind_ == Kind::F) return in_pair(*this, o.i_);
    if (o.kind_ == Kind::F) return in_pair(o, i_);
    // E_i meets G_j exactly when i != j; two E's or two G's are skew.
    return kind_ != o.kind_ && i_ != o.i_;
}

const std::array<LineLabel, kLineCount>& all_line_labels() {
    static const auto labels = [] {
        std::vector<LineLabel> v;
        for (int i = 1; i <= 6; ++i) v.push_back(LineLabel::E(i));
        for (int i = 1; i <= 6; ++i)
            for (int j = i + 1; j <= 6; ++j) v.push_back(LineLabel::F(i, j));
        for (int j = 1; j <= 6; ++j) v.push_back(LineLabel::G(j));
        return to_array<kLineCount>(v);
    }();
    return labels;
}

TritangentLabel TritangentLabel::type_one(int i, int j) {
    check_index(i);
    check_index(j);
    if (i == j) throw std::invalid_argument("type I tritangent needs i != j");
    return {true, {Pair{i, j}, Pair{0, 0}, Pair{0, 0}}};
}

TritangentLabel TritangentLabel::type_two(Pair a, Pair b, Pair c) {
    std::array<Pair, 3> p{a, b, c};
    std::array<bool, 7> seen{};
    for (auto& q : p) {
        check_index(q.first);
        check_index(q.second);
        if (q.first > q.second) std::swap(q.first, q.second);
        for (int k : {q.first, q.second}) {
            if (seen[k]) throw std::invalid_argument("type II tritangent needs a partition of 1..6");
            seen[k] = true;
        }
    }
    std::sort(p.begin(), p.end());
    return {false, p};
}

TritangentLabel TritangentLabel::from_index(std::size_t index) { return all_tritangent_labels().at(index); }

TritangentLabel TritangentLabel::parse(std::string_view text) {
    if (text.size() == 3 && text[0] == 'x') return type_one(parse_digit(text[1]), parse_digit(text[2]));
    if (text.size() == 7 && text[0] == 'y')
        return type_two({parse_digit(text[1]), parse_digit(text[2])}, {parse_digit(text[3]), parse_digit(text[4])},
                        {parse_digit(text[5]), parse_digit(text[6])});
    throw std::invalid_argument("not a tritangent label: '" + std::string(text) + "'");
}

std::size_t TritangentLabel::index() const {
    if (type_one_) {
        const int i = pairs_[0].first, j = pairs_[0].second;
        return static_cast<std::size_t>((i - 1) * 5 + (j < i ? j - 1 : j - 2));
    }
    static const auto parts = all_partitions();
    const auto it = std::find(parts.begin(), parts.end(), pairs_);
    return 30 + static_cast<std::size_t>(it - parts.begin());
}

std::string TritangentLabel::str() const {
    if (type_one_) return "x" + std::to_string(pairs_[0].first) + std::to_string(pairs_[0].second);
    std::string s = "y";
    for (const auto& [a, b] : pairs_) s += std::to_string(a) + std::to_string(b);
    return s;
}

std::array<LineLabel, 3> TritangentLabel::lines() const {
    if (type_one_) {
        const int i = pairs_[0].first, j = pairs_[0].second;
        return {LineLabel::E(i), LineLabel::G(j), LineLabel::F(i, j)};
    }
    return {LineLabel::F(pairs_[0].first, pairs_[0].second), LineLabel::F(pairs_[1].first, pairs_[1].second),
            LineLabel::F(pairs_[2].first, pairs_[2].second)};
}

bool TritangentLabel::contains(const LineLabel& l) const {
    const auto ls = lines();
    return std::find(ls.begin(), ls.end(), l) != ls.end();
}

bool TritangentLabel::shares_line_with(const TritangentLabel& o) const {
    for (const auto& l : lines())
        if (o.contains(l)) return true;
    return false;
}

const std::array<TritangentLabel, kTritangentCount>& all_tritangent_labels() {
    static const auto labels = [] {
        std::vector<TritangentLabel> v;
        for (int i = 1; i <= 6; ++i)
            for (int j = 1; j <= 6; ++j)
                if (i != j) v.push_back(TritangentLabel::type_one(i, j));
        for (const auto& p : all_partitions()) v.push_back(TritangentLabel::type_two(p[0], p[1], p[2]));
        return to_array<kTritangentCount>(v);
    }();
    return labels;
}

std::optional<TritangentLabel> tritangent_through(const LineLabel& a, const LineLabel& b) {
    if (!a.meets(b)) return std::nullopt;
    for (const auto& t : all_tritangent_labels())
        if (t.contains(a) && t.contains(b)) return t;
    return std::nullopt;
}

std::array<TritangentLabel, 5> tritangents_through(const LineLabel& line) {
    std::vector<TritangentLabel> hits;
    for (const auto& t : all_tritangent_labels())
        if (t.contains(line)) hits.push_back(t);
    if (hits.size() != 5) throw std::logic_error("line does not lie in exactly five tritangent labels");
    return {hits[0], hits[1], hits[2], hits[3], hits[4]};
}

std::optional<TritangentLabel> tritangent_of_triple(const LineLabel& a, const LineLabel& b, const LineLabel& c) {
    const auto t = tritangent_through(a, b);
    if (t && t->contains(c) && !(c == a) && !(c == b)) return t;
    return std::nullopt;
}

} // namespace cubic27
