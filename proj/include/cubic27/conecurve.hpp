#ifndef CUBIC27_CONECURVE_HPP
#define CUBIC27_CONECURVE_HPP

#include "cubic27/errors.hpp"
#include "cubic27/exact/matrix.hpp"
#include "cubic27/exact/resultant.hpp"
#include "cubic27/exact/univariate.hpp"
#include "cubic27/surface.hpp"

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace cubic27 {

struct PlueckerData {
    long tau = 0;
    long delta = 0;
    long nu = 0;
    long mu = 0;

    /// 2 tau - 2 delta = (mu - nu)(mu + nu - 9).
    bool satisfies_relation() const { return 2 * tau - 2 * delta == (mu - nu) * (mu + nu - 9); }
};

/// Why a Pluecker tuple is not the one of a smooth cubic's contour sextic,
/// or nothing if it is acceptable.
std::optional<std::string> pluecker_rejection(const PlueckerData& p);

/// Tuple (tau, 0, degree, 12) from the certified counts; throws on rejection.
PlueckerData pluecker_certificate(long distinct_bitangents, long section_degree);

/// Cone of lines through A tangent to V(f): res_t(g, dg/dt) for
/// g(t) = f(Q + tA) = sum_k t^k D_A^k f(Q) / k!. Normalized, degree 6.
MPoly tangent_cone(const MPoly& f, const ProjPoint<Rational>& vertex);

/// The cone restricted to the chart of a plane not through A.
MPoly plane_section(const MPoly& cone, const PlaneForm<Rational>& plane, const ProjPoint<Rational>& vertex);

template <ExactField K>
struct BitangentRecord {
    LineLabel line;
    /// Plane spanned by the line and A.
    PlaneForm<K> plane;
    /// Projected line T in chart coordinates of the section plane.
    std::array<K, 3> trace;
    SquarefreeProfile profile;
    /// The binary quadratic whose roots are the two contact points.
    Polynomial<K> contact;
};

/// Binary form of a ternary curve restricted to the chart line n . u = 0,
/// parametrized by the kernel basis of n.
template <ExactField K>
Polynomial<K> section_on_trace(const Polynomial<K>& curve, const std::array<K, 3>& n) {
    Matrix<K> row(1, 3);
    for (int k = 0; k < 3; ++k) row(0, k) = n[k];
    const auto dirs = kernel_basis(row);
    std::array<Polynomial<K>, 3> img;
    for (int k = 0; k < 3; ++k) {
        const std::array<K, 2> c{dirs[0][k], dirs[1][k]};
        img[k] = Polynomial<K>::linear(std::span<const K>(c));
    }
    return curve.substitute(std::span<const Polynomial<K>>(img));
}

template <ExactField K>
BitangentRecord<K> line_to_bitangent(const Line<K>& line, const LineLabel& label, const MPoly& section,
                                     const PlaneForm<Rational>& section_plane, const ProjPoint<Rational>& vertex) {
    const ProjPoint<K> a({K(vertex[0]), K(vertex[1]), K(vertex[2]), K(vertex[3])});
    const PlaneForm<K> pi = plane_through(line, a);
    const auto& sp = section_plane.coeffs();
    const PlaneChart<K> chart(PlaneForm<K>({K(sp[0]), K(sp[1]), K(sp[2]), K(sp[3])}));
    const std::array<K, 3> n = chart.trace_of(pi);
    const Polynomial<K> b = section_on_trace(promote<K>(section), n);
    if (b.is_zero()) throw CertificationError("projected line of " + label.str() + " is a component of the section");
    const SquarefreeProfile prof = binary_squarefree_profile(b);
    if (!prof.is_bitangent())
        throw CertificationError("projected line of " + label.str() + " is not a bitangent of the section");
    Polynomial<K> g = b;
    for (int v = 0; v < 2; ++v) {
        const Polynomial<K> d = b.derivative(v);
        if (!d.is_zero()) g = binary_gcd(g, d);
    }
    return {label, pi, n, prof, g};
}

template <ExactField K>
struct ConeAnalysis {
    ProjPoint<Rational> vertex;
    PlaneForm<Rational> section_plane;
    MPoly cone;
    MPoly section;
    std::vector<BitangentRecord<K>> bitangents;
    std::size_t distinct_traces = 0;
    PlueckerData pluecker;
};

/// Whether A lies on one of the tritangent planes; then the three lines of
/// that plane would project to one line and the count would collapse.
template <ExactField K>
bool vertex_on_tritangent(const std::vector<TritangentPlane<K>>& planes, const ProjPoint<Rational>& vertex) {
    const ProjPoint<K> a({K(vertex[0]), K(vertex[1]), K(vertex[2]), K(vertex[3])});
    return std::any_of(planes.begin(), planes.end(), [&](const TritangentPlane<K>& p) { return p.form.contains(a); });
}

template <ExactField K>
ConeAnalysis<K> analyze_cone(const MPoly& f, const LineSet<K>& lines, const ProjPoint<Rational>& vertex,
                             const PlaneForm<Rational>& section_plane) {
    MPoly cone = tangent_cone(f, vertex);
    MPoly section = plane_section(cone, section_plane, vertex);
    std::vector<BitangentRecord<K>> records;
    std::set<std::string> traces;
    for (const auto& label : all_line_labels()) {
        records.push_back(line_to_bitangent(lines[label], label, section, section_plane, vertex));
        traces.insert(join_key<K>(records.back().trace));
    }
    const PlueckerData data = pluecker_certificate(static_cast<long>(traces.size()), section.total_degree());
    return {vertex, section_plane, std::move(cone), std::move(section), std::move(records), traces.size(), data};
}

/// Vertex of smallest height (entries in -2..2) off V(f) and off every
/// tritangent plane, with the first coordinate plane not through it, for
/// which the full bitangent certification succeeds.
template <ExactField K>
std::pair<ProjPoint<Rational>, PlaneForm<Rational>> find_cone_setup(const MPoly& f, const LineSet<K>& lines,
                                                                    const std::vector<TritangentPlane<K>>& planes) {
    std::vector<std::array<int, 4>> cands;
    for (int a = -2; a <= 2; ++a)
        for (int b = -2; b <= 2; ++b)
            for (int c = -2; c <= 2; ++c)
                for (int d = -2; d <= 2; ++d) cands.push_back({a, b, c, d});
    std::stable_sort(cands.begin(), cands.end(), [](const auto& x, const auto& y) {
        const auto h = [](const std::array<int, 4>& v) {
            int m = 0, s = 0;
            for (int e : v) {
                m = std::max(m, std::abs(e));
                s += std::abs(e);
            }
            return std::pair{m, s};
        };
        return h(x) < h(y);
    });
    std::set<std::string> tried;
    for (const auto& c : cands) {
        if (c == std::array<int, 4>{0, 0, 0, 0}) continue;
        const ProjPoint<Rational> a({Rational(c[0]), Rational(c[1]), Rational(c[2]), Rational(c[3])});
        if (!tried.insert(a.key()).second) continue;
        if (f.evaluate(a.coords()).is_zero() || vertex_on_tritangent(planes, a)) continue;
        std::size_t k = 0;
        while (a[k].is_zero()) ++k;
        std::array<Rational, 4> e{Rational(0), Rational(0), Rational(0), Rational(0)};
        e[k] = Rational(1);
        const PlaneForm<Rational> plane(e);
        try {
            analyze_cone(f, lines, a, plane);
        } catch (const CertificationError&) {
            continue;
        }
        return {a, plane};
    }
    throw CertificationError("no small-height cone vertex gives 27 bitangents");
}

} // namespace cubic27

#endif
