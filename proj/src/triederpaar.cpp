#include "cubic27/triederpaar.hpp"

#include <map>
#include <set>

namespace cubic27 {

namespace {

using L = LineLabel;

TritangentLabel plane_of(const std::array<LineLabel, 3>& lines) {
    const auto t = tritangent_of_triple(lines[0], lines[1], lines[2]);
    if (!t) throw CertificationError("lines " + lines[0].str() + ", " + lines[1].str() + ", " + lines[2].str() +
                                     " do not form a tritangent triple");
    return *t;
}

std::vector<LineGrid> pattern_grids(int pattern) {
    std::vector<LineGrid> out;
    std::array<int, 6> p{1, 2, 3, 4, 5, 6};
    do {
        const int i = p[0], j = p[1], k = p[2], l = p[3], m = p[4], n = p[5];
        if (pattern == 1)
            out.push_back({{{L::E(i), L::G(j), L::F(i, j)}, {L::G(k), L::F(j, k), L::E(j)},
                            {L::F(i, k), L::E(k), L::G(i)}}});
        else if (pattern == 2)
            out.push_back({{{L::E(i), L::G(j), L::F(i, j)}, {L::G(k), L::E(l), L::F(l, k)},
                            {L::F(i, k), L::F(j, l), L::F(m, n)}}});
        else
            out.push_back({{{L::F(i, j), L::F(l, m), L::F(k, n)}, {L::F(l, n), L::F(i, k), L::F(j, m)},
                            {L::F(k, m), L::F(j, n), L::F(i, l)}}});
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

} // namespace

std::array<std::size_t, 3> sorted_indices(const PlaneTriple& t) {
    std::array<std::size_t, 3> s{t[0].index(), t[1].index(), t[2].index()};
    std::sort(s.begin(), s.end());
    return s;
}

Triederpaar Triederpaar::from_grid(const LineGrid& grid, int pattern) {
    std::set<std::size_t> seen;
    for (const auto& row : grid)
        for (const auto& l : row) seen.insert(l.index());
    if (seen.size() != 9) throw CertificationError("Triederpaar grid repeats a line");
    PlaneTriple rows{plane_of(grid[0]), plane_of(grid[1]), plane_of(grid[2])};
    PlaneTriple cols{plane_of({grid[0][0], grid[1][0], grid[2][0]}), plane_of({grid[0][1], grid[1][1], grid[2][1]}),
                     plane_of({grid[0][2], grid[1][2], grid[2][2]})};
    return Triederpaar(pattern, grid, rows, cols);
}

Triederpaar::Key Triederpaar::key() const {
    auto a = sorted_indices(rows_), b = sorted_indices(cols_);
    if (b < a) std::swap(a, b);
    return {a, b};
}

std::string Triederpaar::str() const {
    std::string s = "{";
    for (std::size_t k = 0; k < 3; ++k) s += (k ? "," : "") + rows_[k].str();
    s += "|";
    for (std::size_t k = 0; k < 3; ++k) s += (k ? "," : "") + cols_[k].str();
    return s + "}";
}

std::vector<Triederpaar> enumerate_triederpaare() {
    static const std::array<int, 3> expected{20, 90, 10};
    std::map<Triederpaar::Key, Triederpaar> all;
    for (int pattern = 1; pattern <= 3; ++pattern) {
        std::map<Triederpaar::Key, Triederpaar> found;
        for (const auto& grid : pattern_grids(pattern)) {
            const Triederpaar tp = Triederpaar::from_grid(grid, pattern);
            found.emplace(tp.key(), tp);
        }
        if (static_cast<int>(found.size()) != expected[pattern - 1])
            throw CertificationError("pattern " + std::to_string(pattern) + " yields " + std::to_string(found.size()) +
                                     " Triederpaare");
        for (const auto& [key, tp] : found)
            if (!all.emplace(key, tp).second) throw CertificationError("Triederpaar patterns overlap");
    }
    std::vector<Triederpaar> out;
    for (const auto& [key, tp] : all) out.push_back(tp);
    return out;
}

std::array<int, 3> pattern_counts(const std::vector<Triederpaar>& tps) {
    std::array<int, 3> c{0, 0, 0};
    for (const auto& tp : tps) ++c.at(tp.pattern() - 1);
    return c;
}

std::vector<TritangentLabel> valid_partners(const TritangentLabel& plane) {
    std::vector<TritangentLabel> out;
    for (const auto& t : all_tritangent_labels())
        if (!(t == plane) && !t.shares_line_with(plane)) out.push_back(t);
    return out;
}

Triederpaar complete_pair_to_triederpaar(const TritangentLabel& first, const TritangentLabel& second) {
    if (first == second || first.shares_line_with(second))
        throw GeometryError("planes " + first.str() + " and " + second.str() + " share a line");
    const auto a = first.lines(), b = second.lines();
    std::array<std::optional<LineLabel>, 3> partner, third;
    for (std::size_t r = 0; r < 3; ++r) {
        int hits = 0;
        for (const auto& cand : b)
            if (a[r].meets(cand)) {
                ++hits;
                partner[r] = cand;
            }
        if (hits != 1)
            throw CertificationError("line " + a[r].str() + " meets " + std::to_string(hits) + " lines of " +
                                     second.str());
        const TritangentLabel col = *tritangent_through(a[r], *partner[r]);
        for (const auto& l : col.lines())
            if (!(l == a[r]) && !(l == *partner[r])) third[r] = l;
    }
    const LineGrid grid{{a, {*partner[0], *partner[1], *partner[2]}, {*third[0], *third[1], *third[2]}}};
    const Triederpaar tp = Triederpaar::from_grid(grid, 1);
    int type_two = 0;
    for (const auto& t : tp.rows()) type_two += !t.is_type_one();
    for (const auto& t : tp.cols()) type_two += !t.is_type_one();
    const int pattern = type_two == 0 ? 1 : (type_two == 2 ? 2 : 3);
    if (type_two != 0 && type_two != 2 && type_two != 6)
        throw CertificationError("completed Triederpaar matches no pattern");
    return Triederpaar::from_grid(grid, pattern);
}

} // namespace cubic27
