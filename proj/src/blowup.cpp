#include "cubic27/blowup.hpp"

#include "cubic27/exact/matrix.hpp"
#include "cubic27/exact/univariate.hpp"

#include <vector>

namespace cubic27 {

namespace {

MPoly from_coefficients(int nvars, const std::vector<Monomial>& monos, const std::vector<Rational>& c) {
    std::vector<MPoly::Term> terms;
    for (std::size_t k = 0; k < monos.size(); ++k)
        if (!c[k].is_zero()) terms.emplace_back(monos[k], c[k]);
    return MPoly::from_terms(nvars, std::move(terms));
}

Rational evaluate_monomial(const Monomial& m, std::span<const Rational, 3> p) {
    Rational v(1);
    for (int k = 0; k < 3; ++k)
        for (int e = 0; e < m.exps[k]; ++e) v *= p[k];
    return v;
}

Matrix<Rational> evaluation_matrix(const std::vector<Monomial>& monos, const std::vector<std::array<Rational, 3>>& pts) {
    Matrix<Rational> m(pts.size(), monos.size());
    for (std::size_t r = 0; r < pts.size(); ++r)
        for (std::size_t c = 0; c < monos.size(); ++c) m(r, c) = evaluate_monomial(monos[c], pts[r]);
    return m;
}

/// Linear binary forms a*s + b*t, one per coordinate.
std::array<MPoly, 3> pencil(const std::array<Rational, 3>& p, const std::array<Rational, 3>& q) {
    std::array<MPoly, 3> img;
    for (int k = 0; k < 3; ++k) {
        const std::array<Rational, 2> c{p[k], q[k]};
        img[k] = MPoly::linear(std::span<const Rational>(c));
    }
    return img;
}

/// Composes the cubics with a binary parametrization, strips the common
/// factor (which must have the given degree) and reads off the residual
/// linear parametrization as a line.
Line<Rational> residual_line(const std::array<MPoly, 4>& cubics, const std::array<MPoly, 3>& param, int expected_gcd,
                             const std::string& what) {
    std::array<MPoly, 4> forms;
    for (int k = 0; k < 4; ++k) forms[k] = cubics[k].substitute(std::span<const MPoly>(param));
    std::optional<MPoly> g;
    for (const auto& b : forms) {
        if (b.is_zero()) continue;
        g = g ? binary_gcd(*g, b) : b;
    }
    if (!g) throw CertificationError(what + ": all composed cubics vanish");
    if (g->total_degree() != expected_gcd)
        throw CertificationError(what + ": common factor has degree " + std::to_string(g->total_degree()));
    Matrix<Rational> span(2, 4);
    for (int k = 0; k < 4; ++k) {
        if (forms[k].is_zero()) continue;
        const MPoly r = binary_divide(forms[k], *g);
        if (r.total_degree() != 1) throw CertificationError(what + ": residual parametrization is not linear");
        Monomial s, t;
        s.exps = {1, 0, 0, 0};
        t.exps = {0, 1, 0, 0};
        span(0, k) = r.coefficient(s);
        span(1, k) = r.coefficient(t);
    }
    if (rank(span) != 2) throw CertificationError(what + ": residual parametrization is degenerate");
    return Line<Rational>(span);
}

void check_index(int i) {
    if (i < 1 || i > 6) throw std::invalid_argument("point index must be in 1..6");
}

} // namespace

SixPointConfig check_genericity(std::span<const Rational, 6> d) {
    SixPointConfig cfg;
    for (int i = 0; i < 6; ++i) {
        cfg.d[i] = d[i];
        cfg.points[i] = {Rational(1), d[i], d[i] * d[i] * d[i]};
    }
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j)
            if (d[i] == d[j])
                throw GenericityError(GenericityError::Cause::DuplicateParameter,
                                      "duplicate parameter: d" + std::to_string(i + 1) + " = d" + std::to_string(j + 1) +
                                          " = " + d[i].str(),
                                      {i + 1, j + 1, 0});
    const std::vector<std::array<Rational, 3>> pts(cfg.points.begin(), cfg.points.end());
    if (rank(evaluation_matrix(monomials_of_degree(3, 2), pts)) != 6)
        throw GenericityError(GenericityError::Cause::ConicThroughSix, "conic through six points");
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j)
            for (int k = j + 1; k < 6; ++k) {
                const Matrix<Rational> m{{cfg.points[i][0], cfg.points[i][1], cfg.points[i][2]},
                                         {cfg.points[j][0], cfg.points[j][1], cfg.points[j][2]},
                                         {cfg.points[k][0], cfg.points[k][1], cfg.points[k][2]}};
                if (determinant(m).is_zero())
                    throw GenericityError(GenericityError::Cause::CollinearTriple,
                                          "collinear triple: points " + std::to_string(i + 1) + ", " +
                                              std::to_string(j + 1) + ", " + std::to_string(k + 1) + " (d = " +
                                              d[i].str() + ", " + d[j].str() + ", " + d[k].str() + ")",
                                          {i + 1, j + 1, k + 1});
            }
    return cfg;
}

std::array<MPoly, 4> cubic_system_basis(const SixPointConfig& cfg) {
    const auto monos = monomials_of_degree(3, 3);
    const std::vector<std::array<Rational, 3>> pts(cfg.points.begin(), cfg.points.end());
    const auto ker = kernel_basis(evaluation_matrix(monos, pts));
    if (ker.size() != 4)
        throw CertificationError("cubic system through the six points has dimension " + std::to_string(ker.size()));
    std::array<MPoly, 4> cubics;
    for (int k = 0; k < 4; ++k) cubics[k] = from_coefficients(3, monos, ker[k]).normalized();
    return cubics;
}

MPoly implicitize(const std::array<MPoly, 4>& cubics) {
    const auto quaternary = monomials_of_degree(4, 3);
    const auto nonics = monomials_of_degree(3, 9);
    Matrix<Rational> m(nonics.size(), quaternary.size());
    for (std::size_t col = 0; col < quaternary.size(); ++col) {
        MPoly prod = MPoly::constant(3, Rational(1));
        for (int v = 0; v < 4; ++v) prod = prod * cubics[v].pow(quaternary[col].exps[v]);
        for (std::size_t row = 0; row < nonics.size(); ++row) m(row, col) = prod.coefficient(nonics[row]);
    }
    const auto ker = kernel_basis(m);
    if (ker.size() != 1) throw CertificationError("implicitization kernel has dimension " + std::to_string(ker.size()));
    MPoly f = from_coefficients(4, quaternary, ker[0]).normalized();
    if (!f.substitute(std::span<const MPoly>(cubics)).is_zero())
        throw CertificationError("implicit cubic does not vanish on the image");
    return f;
}

Line<Rational> line_F(const AnticanonicalMap& map, int i, int j) {
    check_index(i);
    check_index(j);
    if (i == j) throw std::invalid_argument("line_F needs distinct indices");
    const auto& p = map.config.points;
    return residual_line(map.cubics, pencil(p[i - 1], p[j - 1]), 2, LineLabel::F(i, j).str());
}

Line<Rational> line_G(const AnticanonicalMap& map, int j) {
    check_index(j);
    std::vector<std::array<Rational, 3>> five;
    for (int k = 0; k < 6; ++k)
        if (k != j - 1) five.push_back(map.config.points[k]);
    const auto quad = monomials_of_degree(3, 2);
    const auto ker = kernel_basis(evaluation_matrix(quad, five));
    if (ker.size() != 1) throw CertificationError("conic through five points is not unique");
    const MPoly conic = from_coefficients(3, quad, ker[0]);
    // Pencil of lines through the lowest-index base point p0, parametrized by
    // the line through the next two: v = s*pa + t*pb. The second intersection
    // of p0 + lambda*v with the conic is Q(v)*p0 - (grad Q(p0) . v) v.
    const auto& p0 = five[0];
    const auto v = pencil(five[1], five[2]);
    const MPoly qv = conic.substitute(std::span<const MPoly>(v));
    MPoly polar(2);
    for (int k = 0; k < 3; ++k) polar = polar + v[k] * conic.derivative(k).evaluate(p0);
    std::array<MPoly, 3> phi;
    for (int k = 0; k < 3; ++k) phi[k] = qv * p0[k] - polar * v[k];
    return residual_line(map.cubics, phi, 5, LineLabel::G(j).str());
}

Line<Rational> line_E(const AnticanonicalMap& map, int i) {
    check_index(i);
    const auto& p = map.config.points[i - 1];
    // Rows are the images of the coordinate directions under the Jacobian.
    Matrix<Rational> images(3, 4);
    for (int v = 0; v < 3; ++v)
        for (int k = 0; k < 4; ++k) images(v, k) = map.cubics[k].derivative(v).evaluate(p);
    const auto e = reduced_echelon(images);
    if (e.rank() != 2) throw CertificationError(LineLabel::E(i).str() + ": Jacobian image is not a line");
    Matrix<Rational> span(2, 4);
    for (int r = 0; r < 2; ++r)
        for (int k = 0; k < 4; ++k) span(r, k) = e.reduced(r, k);
    return Line<Rational>(span);
}

ProjPoint<Rational> rational_surface_point(const AnticanonicalMap& map, std::span<const Rational, 3> q) {
    std::array<Rational, 4> x;
    for (int k = 0; k < 4; ++k) x[k] = map.cubics[k].evaluate(q);
    if (std::all_of(x.begin(), x.end(), [](const Rational& c) { return c.is_zero(); }))
        throw GeometryError("plane point lies in the base locus of the cubic system");
    return ProjPoint<Rational>(x);
}

ProjPoint<Rational> sample_point_off_lines(const SurfaceModel& model) {
    const AnticanonicalMap map{model.config, model.map_cubics};
    for (int h = 0; h <= 20; ++h)
        for (int a = -h; a <= h; ++a)
            for (int b = -h; b <= h; ++b) {
                if (std::max(std::abs(a), std::abs(b)) != h) continue;
                const std::array<Rational, 3> q{Rational(1), Rational(a), Rational(b)};
                std::optional<ProjPoint<Rational>> p;
                try {
                    p = rational_surface_point(map, q);
                } catch (const GeometryError&) {
                    continue;
                }
                if (!model.F.evaluate(p->coords()).is_zero())
                    throw CertificationError("sampled image point is off the surface");
                if (off_all_lines(model.lines, *p)) return *p;
            }
    throw CertificationError("no sampled surface point avoids the 27 lines");
}

SurfaceModel build_surface(std::span<const Rational, 6> d) {
    SixPointConfig cfg = check_genericity(d);
    const AnticanonicalMap map{cfg, cubic_system_basis(cfg)};
    MPoly f = implicitize(map.cubics);
    std::vector<Line<Rational>> lines;
    for (const auto& label : all_line_labels()) {
        switch (label.kind()) {
        case LineLabel::Kind::E: lines.push_back(line_E(map, label.i())); break;
        case LineLabel::Kind::F: lines.push_back(line_F(map, label.i(), label.j())); break;
        case LineLabel::Kind::G: lines.push_back(line_G(map, label.i())); break;
        }
    }
    LineSet<Rational> set(std::move(lines));
    certify_lines(set, f);
    return {map.config, map.cubics, std::move(f), std::move(set)};
}

} // namespace cubic27
