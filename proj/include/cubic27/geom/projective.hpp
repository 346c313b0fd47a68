#ifndef CUBIC27_GEOM_PROJECTIVE_HPP
#define CUBIC27_GEOM_PROJECTIVE_HPP

#include "cubic27/errors.hpp"
#include "cubic27/exact/matrix.hpp"
#include "cubic27/exact/polynomial.hpp"

#include <array>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace cubic27 {

template <ExactField K>
std::string join_key(std::span<const K> v) {
    std::string key;
    for (const auto& x : v) key += x.str() + ",";
    return key;
}

/// Point of P^3, first nonzero coordinate scaled to 1.
template <ExactField K>
class ProjPoint {
public:
    explicit ProjPoint(std::array<K, 4> coords) : c_(std::move(coords)) {
        std::size_t k = 0;
        while (k < 4 && c_[k].is_zero()) ++k;
        if (k == 4) throw GeometryError("projective point with all coordinates zero");
        const K inv = c_[k].inverse();
        for (auto& x : c_) x *= inv;
    }

    const std::array<K, 4>& coords() const { return c_; }
    const K& operator[](std::size_t k) const { return c_[k]; }
    std::string key() const { return join_key<K>(c_); }

    friend bool operator==(const ProjPoint&, const ProjPoint&) = default;

private:
    std::array<K, 4> c_;
};

/// Plane a0 x + a1 y + a2 z + a3 w = 0 with canonically normalized coefficients.
template <ExactField K>
class PlaneForm {
public:
    explicit PlaneForm(std::array<K, 4> coeffs) : a_(std::move(coeffs)) {
        if (std::all_of(a_.begin(), a_.end(), [](const K& x) { return x.is_zero(); }))
            throw GeometryError("zero linear form is not a plane");
        normalize_projectively(std::span<K>(a_));
    }

    static PlaneForm from_poly(const Polynomial<K>& p) {
        if (p.nvars() != 4 || p.total_degree() != 1 || !p.is_homogeneous())
            throw GeometryError("plane must be a homogeneous linear form in 4 variables");
        std::array<K, 4> a{K(0), K(0), K(0), K(0)};
        for (const auto& [m, c] : p.terms())
            for (int v = 0; v < 4; ++v)
                if (m.exps[v] == 1) a[v] = c;
        return PlaneForm(a);
    }

    const std::array<K, 4>& coeffs() const { return a_; }
    const K& operator[](std::size_t k) const { return a_[k]; }
    Polynomial<K> poly() const { return Polynomial<K>::linear(std::span<const K>(a_)); }

    K evaluate(std::span<const K, 4> x) const {
        K s(0);
        for (int k = 0; k < 4; ++k) s += a_[k] * x[k];
        return s;
    }
    bool contains(const ProjPoint<K>& p) const { return evaluate(p.coords()).is_zero(); }

    /// Index of the first nonzero coefficient.
    std::size_t pivot() const {
        std::size_t k = 0;
        while (a_[k].is_zero()) ++k;
        return k;
    }
    std::string key() const { return join_key<K>(a_); }

    friend bool operator==(const PlaneForm&, const PlaneForm&) = default;

private:
    std::array<K, 4> a_;
};

/// Line in P^3 with three consistent representations: the reduced echelon
/// 2x4 span matrix (also the canonical key), two planes cutting it out, and
/// its Pluecker vector (p01, p02, p03, p12, p13, p23).
template <ExactField K>
class Line {
public:
    static Line through(const ProjPoint<K>& p, const ProjPoint<K>& q) {
        Matrix<K> m(2, 4);
        for (int k = 0; k < 4; ++k) {
            m(0, k) = p[k];
            m(1, k) = q[k];
        }
        return Line(m);
    }

    static Line meet(const PlaneForm<K>& a, const PlaneForm<K>& b) {
        Matrix<K> m(2, 4);
        for (int k = 0; k < 4; ++k) {
            m(0, k) = a[k];
            m(1, k) = b[k];
        }
        if (rank(m) != 2) throw GeometryError("planes coincide; no line of intersection");
        const auto ker = kernel_basis(m);
        Matrix<K> span(2, 4);
        for (int r = 0; r < 2; ++r)
            for (int k = 0; k < 4; ++k) span(r, k) = ker[r][k];
        return Line(span);
    }

    /// Line spanned by the rows of a rank-2 matrix with 4 columns.
    explicit Line(const Matrix<K>& spanning) {
        if (spanning.cols() != 4) throw GeometryError("line span needs 4 columns");
        const EchelonForm<K> e = reduced_echelon(spanning);
        if (e.rank() != 2) throw GeometryError("line span points coincide");
        std::array<K, 4> r0, r1;
        for (int k = 0; k < 4; ++k) {
            r0[k] = e.reduced(0, k);
            r1[k] = e.reduced(1, k);
        }
        span_ = {ProjPoint<K>(r0), ProjPoint<K>(r1)};
        Matrix<K> top(2, 4);
        for (int k = 0; k < 4; ++k) {
            top(0, k) = r0[k];
            top(1, k) = r1[k];
        }
        const auto ker = kernel_basis(top);
        Matrix<K> dual(2, 4);
        for (int r = 0; r < 2; ++r)
            for (int k = 0; k < 4; ++k) dual(r, k) = ker[r][k];
        const EchelonForm<K> de = reduced_echelon(dual);
        std::array<K, 4> d0, d1;
        for (int k = 0; k < 4; ++k) {
            d0[k] = de.reduced(0, k);
            d1[k] = de.reduced(1, k);
        }
        dual_ = {PlaneForm<K>(d0), PlaneForm<K>(d1)};
        static constexpr int idx[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
        for (int k = 0; k < 6; ++k) {
            const int i = idx[k][0], j = idx[k][1];
            pluecker_[k] = r0[i] * r1[j] - r0[j] * r1[i];
        }
    }

    const std::array<ProjPoint<K>, 2>& span() const { return span_; }
    const std::array<PlaneForm<K>, 2>& dual_span() const { return dual_; }
    const std::array<K, 6>& pluecker() const { return pluecker_; }

    /// p01 p23 - p02 p13 + p03 p12; zero for every genuine line.
    K pluecker_relation() const {
        const auto& p = pluecker_;
        return p[0] * p[5] - p[1] * p[4] + p[2] * p[3];
    }

    bool contains(const ProjPoint<K>& p) const { return dual_[0].contains(p) && dual_[1].contains(p); }
    bool lies_in(const PlaneForm<K>& plane) const { return plane.contains(span_[0]) && plane.contains(span_[1]); }

    /// Point s*span0 + t*span1 as linear forms in (s, t).
    std::array<Polynomial<K>, 4> parametrization() const {
        std::array<Polynomial<K>, 4> img;
        for (int k = 0; k < 4; ++k) {
            const std::array<K, 2> c{span_[0][k], span_[1][k]};
            img[k] = Polynomial<K>::linear(std::span<const K>(c));
        }
        return img;
    }

    /// Restriction of a quaternary polynomial to the line: a binary form.
    Polynomial<K> restrict_poly(const Polynomial<K>& f) const {
        const auto img = parametrization();
        return f.substitute(std::span<const Polynomial<K>>(img));
    }

    bool lies_on(const Polynomial<K>& f) const { return restrict_poly(f).is_zero(); }

    /// Coplanar and distinct.
    bool meets(const Line& o) const {
        if (*this == o) return false;
        return bilinear_pairing(o).is_zero();
    }

    /// Pluecker pairing; zero exactly when the two lines are coplanar.
    K bilinear_pairing(const Line& o) const {
        const auto& p = pluecker_;
        const auto& q = o.pluecker_;
        return p[0] * q[5] - p[1] * q[4] + p[2] * q[3] + p[3] * q[2] - p[4] * q[1] + p[5] * q[0];
    }

    ProjPoint<K> intersection(const Line& o) const {
        if (*this == o) throw GeometryError("intersection of a line with itself");
        if (!meets(o)) throw GeometryError("intersection of skew lines");
        Matrix<K> m(4, 4);
        for (int k = 0; k < 4; ++k) {
            m(0, k) = dual_[0][k];
            m(1, k) = dual_[1][k];
            m(2, k) = o.dual_[0][k];
            m(3, k) = o.dual_[1][k];
        }
        const auto ker = kernel_basis(m);
        if (ker.size() != 1) throw GeometryError("coplanar lines without a unique meeting point");
        return ProjPoint<K>({ker[0][0], ker[0][1], ker[0][2], ker[0][3]});
    }

    std::string key() const { return span_[0].key() + ";" + span_[1].key(); }

    friend bool operator==(const Line& a, const Line& b) { return a.span_ == b.span_; }

private:
    std::array<ProjPoint<K>, 2> span_{ProjPoint<K>({K(1), K(0), K(0), K(0)}), ProjPoint<K>({K(0), K(1), K(0), K(0)})};
    std::array<PlaneForm<K>, 2> dual_{PlaneForm<K>({K(0), K(0), K(1), K(0)}), PlaneForm<K>({K(0), K(0), K(0), K(1)})};
    std::array<K, 6> pluecker_{};
};

/// Plane through three non-collinear points.
template <ExactField K>
PlaneForm<K> plane_through(const ProjPoint<K>& a, const ProjPoint<K>& b, const ProjPoint<K>& c) {
    Matrix<K> m(3, 4);
    for (int k = 0; k < 4; ++k) {
        m(0, k) = a[k];
        m(1, k) = b[k];
        m(2, k) = c[k];
    }
    const auto ker = kernel_basis(m);
    if (ker.size() != 1) throw GeometryError("points are collinear; no unique plane");
    return PlaneForm<K>({ker[0][0], ker[0][1], ker[0][2], ker[0][3]});
}

/// Plane spanned by a line and a point off it.
template <ExactField K>
PlaneForm<K> plane_through(const Line<K>& line, const ProjPoint<K>& p) {
    if (line.contains(p)) throw GeometryError("point lies on the line; no unique plane");
    return plane_through(line.span()[0], line.span()[1], p);
}

/// Plane containing two distinct intersecting lines.
template <ExactField K>
PlaneForm<K> plane_through(const Line<K>& a, const Line<K>& b) {
    if (!a.meets(b)) throw GeometryError("lines are skew or equal; no unique plane");
    const ProjPoint<K>& extra = a.contains(b.span()[0]) ? b.span()[1] : b.span()[0];
    return plane_through(a, extra);
}

template <ExactField K>
std::array<K, 4> gradient_at(const Polynomial<K>& f, const ProjPoint<K>& p) {
    std::array<K, 4> g;
    for (int v = 0; v < 4; ++v) g[v] = f.derivative(v).evaluate(p.coords());
    return g;
}

/// Tangent plane sum_k x_k df/dx_k(P) at a smooth point of V(f).
template <ExactField K>
PlaneForm<K> tangent_plane(const Polynomial<K>& f, const ProjPoint<K>& p) {
    if (f.nvars() != 4) throw GeometryError("surface polynomial must have 4 variables");
    if (!f.evaluate(p.coords()).is_zero()) throw GeometryError("point is not on the surface");
    const auto g = gradient_at(f, p);
    if (std::all_of(g.begin(), g.end(), [](const K& x) { return x.is_zero(); }))
        throw GeometryError("singular point: gradient vanishes");
    return PlaneForm<K>(g);
}

/// First polar f_A = sum_k a_k df/dx_k.
template <ExactField K>
Polynomial<K> first_polar(const Polynomial<K>& f, const ProjPoint<K>& a) {
    if (f.is_zero()) throw GeometryError("first polar of the zero polynomial");
    return f.directional_derivative(std::span<const K>(a.coords()));
}

/// Affine chart on a plane: the pivot coordinate (first nonzero coefficient)
/// is eliminated and the plane is parametrized by the remaining three
/// coordinates, in increasing index order.
template <ExactField K>
class PlaneChart {
public:
    explicit PlaneChart(PlaneForm<K> plane) : plane_(std::move(plane)), pivot_(plane_.pivot()) {
        int k = 0;
        for (std::size_t v = 0; v < 4; ++v)
            if (v != pivot_) free_[k++] = v;
    }

    const PlaneForm<K>& plane() const { return plane_; }
    std::size_t pivot() const { return pivot_; }
    const std::array<std::size_t, 3>& free_coordinates() const { return free_; }

    /// The four coordinates as linear forms in the chart variables u0,u1,u2.
    std::array<Polynomial<K>, 4> embedding() const {
        std::array<Polynomial<K>, 4> img;
        const K inv = plane_[pivot_].inverse();
        std::array<K, 3> piv{};
        for (int k = 0; k < 3; ++k) {
            std::array<K, 3> e{K(0), K(0), K(0)};
            e[k] = K(1);
            img[free_[k]] = Polynomial<K>::linear(std::span<const K>(e));
            piv[k] = -plane_[free_[k]] * inv;
        }
        img[pivot_] = Polynomial<K>::linear(std::span<const K>(piv));
        return img;
    }

    Polynomial<K> restrict_poly(const Polynomial<K>& f) const {
        const auto img = embedding();
        return f.substitute(std::span<const Polynomial<K>>(img));
    }

    std::array<K, 3> to_chart(const ProjPoint<K>& p) const {
        if (!plane_.contains(p)) throw GeometryError("point is not on the chart plane");
        return {p[free_[0]], p[free_[1]], p[free_[2]]};
    }

    ProjPoint<K> from_chart(std::span<const K, 3> u) const {
        std::array<K, 4> x;
        K acc(0);
        for (int k = 0; k < 3; ++k) {
            x[free_[k]] = u[k];
            acc += plane_[free_[k]] * u[k];
        }
        x[pivot_] = -acc / plane_[pivot_];
        return ProjPoint<K>(x);
    }

    /// Linear form (3 coefficients, normalized) of a line of the plane, in chart coordinates.
    std::array<K, 3> line_form(const Line<K>& line) const {
        if (!line.lies_in(plane_)) throw GeometryError("line is not contained in the chart plane");
        const auto a = to_chart(line.span()[0]);
        const auto b = to_chart(line.span()[1]);
        std::array<K, 3> n{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
        normalize_projectively(std::span<K>(n));
        return n;
    }

    /// Chart line cut out by another plane (not equal to this one).
    std::array<K, 3> trace_of(const PlaneForm<K>& other) const {
        const auto img = embedding();
        std::array<K, 3> n{K(0), K(0), K(0)};
        for (int v = 0; v < 4; ++v) {
            for (const auto& [m, c] : img[v].terms())
                for (int k = 0; k < 3; ++k)
                    if (m.exps[k] == 1) n[k] += other[v] * c;
        }
        if (std::all_of(n.begin(), n.end(), [](const K& x) { return x.is_zero(); }))
            throw GeometryError("planes coincide; no trace line");
        normalize_projectively(std::span<K>(n));
        return n;
    }

private:
    PlaneForm<K> plane_;
    std::size_t pivot_;
    std::array<std::size_t, 3> free_{};
};

} // namespace cubic27

#endif
