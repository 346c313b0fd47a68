#ifndef CUBIC27_SURFACE_HPP
#define CUBIC27_SURFACE_HPP

#include "cubic27/errors.hpp"
#include "cubic27/geom/projective.hpp"
#include "cubic27/labels.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace cubic27 {

/// The 27 lines of a surface, indexed by LineLabel::index().
template <ExactField K>
class LineSet {
public:
    explicit LineSet(std::vector<Line<K>> by_index) : lines_(std::move(by_index)) {
        if (lines_.size() != kLineCount) throw CertificationError("a line set needs exactly 27 lines");
    }

    const Line<K>& operator[](const LineLabel& label) const { return lines_[label.index()]; }
    const Line<K>& at(std::size_t index) const { return lines_.at(index); }
    const std::vector<Line<K>>& all() const { return lines_; }

private:
    std::vector<Line<K>> lines_;
};

using IncidenceGraph = std::array<std::array<bool, kLineCount>, kLineCount>;

/// Adjacency of the 27 lines by exact coplanarity; throws unless every
/// line meets exactly ten others.
template <ExactField K>
IncidenceGraph incidence_graph(const LineSet<K>& lines) {
    IncidenceGraph g{};
    for (std::size_t a = 0; a < kLineCount; ++a)
        for (std::size_t b = a + 1; b < kLineCount; ++b) g[a][b] = g[b][a] = lines.at(a).meets(lines.at(b));
    for (std::size_t a = 0; a < kLineCount; ++a) {
        const auto n = std::count(g[a].begin(), g[a].end(), true);
        if (n != 10)
            throw CertificationError("line " + LineLabel::from_index(a).str() + " meets " + std::to_string(n) +
                                     " lines instead of 10");
    }
    return g;
}

/// Whether the geometric incidences coincide with the label rule.
inline bool incidence_matches_labels(const IncidenceGraph& g) {
    for (std::size_t a = 0; a < kLineCount; ++a)
        for (std::size_t b = 0; b < kLineCount; ++b)
            if (a != b && g[a][b] != LineLabel::from_index(a).meets(LineLabel::from_index(b))) return false;
    return true;
}

/// Checks the structural invariants of a line set on V(f): 27 distinct
/// lines, each identically on the surface, each Pluecker-consistent.
template <ExactField K>
void certify_lines(const LineSet<K>& lines, const Polynomial<K>& f) {
    std::set<std::string> keys;
    for (std::size_t k = 0; k < kLineCount; ++k) {
        const auto& l = lines.at(k);
        const std::string name = LineLabel::from_index(k).str();
        if (!l.pluecker_relation().is_zero()) throw CertificationError("Pluecker relation fails for " + name);
        if (!l.lies_on(f)) throw CertificationError("line " + name + " does not lie on the surface");
        keys.insert(l.key());
    }
    if (keys.size() != kLineCount) throw CertificationError("the 27 lines are not pairwise distinct");
}

template <ExactField K>
struct TritangentPlane {
    TritangentLabel label;
    PlaneForm<K> form;
    std::array<LineLabel, 3> lines;
    /// The three lines pass through one point.
    bool eckardt = false;
};

/// Tritangent plane of a label: spanned by the first two lines, certified
/// to contain the third, with F restricted to it equal (up to scalar) to
/// the product of the three line forms.
template <ExactField K>
TritangentPlane<K> tritangent_plane(const LineSet<K>& lines, const Polynomial<K>& f, const TritangentLabel& label) {
    const auto labels = label.lines();
    const Line<K>& a = lines[labels[0]];
    const Line<K>& b = lines[labels[1]];
    const Line<K>& c = lines[labels[2]];
    const std::string name = label.str();
    if (!a.meets(b) || !b.meets(c) || !a.meets(c))
        throw CertificationError("lines of tritangent " + name + " are not pairwise intersecting");
    const PlaneForm<K> plane = plane_through(a, b);
    if (!c.lies_in(plane)) throw CertificationError("third line of tritangent " + name + " is not coplanar");
    const PlaneChart<K> chart(plane);
    Polynomial<K> product = Polynomial<K>::constant(3, K(1));
    for (const Line<K>* l : {&a, &b, &c}) {
        const auto n = chart.line_form(*l);
        product = product * Polynomial<K>::linear(std::span<const K>(n));
    }
    const auto lambda = equal_up_to_scalar(chart.restrict_poly(f), product);
    if (!lambda || lambda->is_zero())
        throw CertificationError("surface restricted to tritangent " + name + " is not the product of its lines");
    const ProjPoint<K> ab = a.intersection(b), bc = b.intersection(c);
    return {label, plane, labels, ab == bc};
}

/// All 45 planes in label index order; certifies pairwise distinctness.
template <ExactField K>
std::vector<TritangentPlane<K>> all_tritangent_planes(const LineSet<K>& lines, const Polynomial<K>& f) {
    std::vector<TritangentPlane<K>> planes;
    std::set<std::string> keys;
    for (const auto& label : all_tritangent_labels()) {
        planes.push_back(tritangent_plane(lines, f, label));
        keys.insert(planes.back().form.key());
    }
    if (keys.size() != kTritangentCount) throw CertificationError("the 45 tritangent planes are not distinct");
    return planes;
}

/// Labels unlabeled lines by searching for a double-six: six pairwise skew
/// lines E1..E6 (the first containing the lowest-index input line) such
/// that every other line meets two of them (F_ij) or five (G_j). The
/// assignment is verified against the full label incidence rule.
template <ExactField K>
LineSet<K> label_lines(const std::vector<Line<K>>& lines) {
    const std::size_t n = lines.size();
    if (n != kLineCount) throw CertificationError("labelling needs exactly 27 lines");
    IncidenceGraph g{};
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b) g[a][b] = g[b][a] = lines[a].meets(lines[b]);

    std::vector<std::size_t> chosen{0};
    std::optional<std::vector<std::size_t>> assignment;  // input index per label index

    const auto try_complete = [&]() -> std::optional<std::vector<std::size_t>> {
        std::vector<std::optional<std::size_t>> slot(kLineCount);
        for (int i = 0; i < 6; ++i) slot[LineLabel::E(i + 1).index()] = chosen[i];
        for (std::size_t l = 0; l < n; ++l) {
            if (std::find(chosen.begin(), chosen.end(), l) != chosen.end()) continue;
            std::vector<int> hit, miss;
            for (int i = 0; i < 6; ++i) (g[l][chosen[i]] ? hit : miss).push_back(i + 1);
            std::size_t idx;
            if (hit.size() == 2)
                idx = LineLabel::F(hit[0], hit[1]).index();
            else if (hit.size() == 5)
                idx = LineLabel::G(miss[0]).index();
            else
                return std::nullopt;
            if (slot[idx]) return std::nullopt;
            slot[idx] = l;
        }
        std::vector<std::size_t> out;
        for (const auto& s : slot) {
            if (!s) return std::nullopt;
            out.push_back(*s);
        }
        for (std::size_t a = 0; a < kLineCount; ++a)
            for (std::size_t b = 0; b < kLineCount; ++b)
                if (a != b && g[out[a]][out[b]] != LineLabel::from_index(a).meets(LineLabel::from_index(b)))
                    return std::nullopt;
        return out;
    };

    const std::function<bool(std::size_t)> extend = [&](std::size_t next) -> bool {
        if (chosen.size() == 6) {
            assignment = try_complete();
            return assignment.has_value();
        }
        for (std::size_t l = next; l < n; ++l) {
            if (std::any_of(chosen.begin(), chosen.end(), [&](std::size_t c) { return g[l][c]; })) continue;
            chosen.push_back(l);
            if (extend(l + 1)) return true;
            chosen.pop_back();
        }
        return false;
    };
    if (!extend(1)) throw CertificationError("no double-six labelling of the 27 lines exists");

    std::vector<Line<K>> ordered;
    for (std::size_t k = 0; k < kLineCount; ++k) ordered.push_back(lines[(*assignment)[k]]);
    return LineSet<K>(std::move(ordered));
}

/// Whether a point of P^3 avoids all 27 lines.
template <ExactField K>
bool off_all_lines(const LineSet<K>& lines, const ProjPoint<K>& p) {
    return std::none_of(lines.all().begin(), lines.all().end(), [&](const Line<K>& l) { return l.contains(p); });
}

/// A point of V(f) on none of the 27 lines, found without solving a cubic:
/// for P0 on a line and v in the tangent plane at P0, the restriction of f
/// to P0 + t v has a double root at P0, so the residual root is rational.
/// P0 runs over span0 + k span1 for small k; span points themselves are
/// often special (e.g. Eckardt points).
template <ExactField K>
ProjPoint<K> surface_point_off_lines(const Polynomial<K>& f, const LineSet<K>& lines) {
    for (const auto& line : lines.all()) {
        for (int step = 1; step <= 6; ++step) {
            std::array<K, 4> base;
            for (int k = 0; k < 4; ++k) base[k] = line.span()[0][k] + K(step) * line.span()[1][k];
            const ProjPoint<K> p0(base);
            const PlaneForm<K> tp = tangent_plane(f, p0);
            Matrix<K> row(1, 4);
            for (int k = 0; k < 4; ++k) row(0, k) = tp[k];
            for (const auto& v : kernel_basis(row)) {
                Matrix<K> m(2, 4);
                for (int k = 0; k < 4; ++k) {
                    m(0, k) = p0[k];
                    m(1, k) = v[k];
                }
                std::array<Polynomial<K>, 4> img;
                for (int k = 0; k < 4; ++k) {
                    const std::array<K, 2> c{p0[k], v[k]};
                    img[k] = Polynomial<K>::linear(std::span<const K>(c));
                }
                const Polynomial<K> b = f.substitute(std::span<const Polynomial<K>>(img));
                if (b.is_zero()) continue;
                // b = c2 s t^2 + c3 t^3; residual root (s, t) = (c3, -c2).
                Monomial st2, t3;
                st2.exps = {1, 2, 0, 0};
                t3.exps = {0, 3, 0, 0};
                const K c2 = b.coefficient(st2), c3 = b.coefficient(t3);
                if (c3.is_zero()) continue;
                std::array<K, 4> x;
                for (int k = 0; k < 4; ++k) x[k] = c3 * p0[k] - c2 * v[k];
                const ProjPoint<K> p(x);
                if (!f.evaluate(p.coords()).is_zero()) throw CertificationError("residual point is off the surface");
                if (off_all_lines(lines, p)) return p;
            }
        }
    }
    throw CertificationError("no surface point off the 27 lines found");
}

} // namespace cubic27

#endif
