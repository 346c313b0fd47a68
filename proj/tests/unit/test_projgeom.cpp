#include "doctest.h"
#include "oracles.hpp"

#include "cubic27/exact/parse.hpp"
#include "cubic27/presets.hpp"

using namespace cubic27;

namespace {

using Pt = ProjPoint<Rational>;
using Ln = Line<Rational>;

MPoly P(const char* s) { return parse_polynomial(s, 4); }

} // namespace

TEST_SUITE("projgeom") {

TEST_CASE("points and planes are canonical") {
    CHECK(Pt({0, 2, -4, 6}) == Pt({0, -1, 2, -3}));
    CHECK(Pt({0, 2, -4, 6}).key() == "0,1,-2,3,");
    CHECK_THROWS_AS(Pt({0, 0, 0, 0}), GeometryError);
    CHECK(PlaneForm<Rational>::from_poly(P("3*x+3*y")).poly() == P("x+y"));
    CHECK(PlaneForm<Rational>::from_poly(P("-1/2*y+w")).poly() == P("y-2*w"));
}

TEST_CASE("tangent_plane") {
    const MPoly f = P("x^3+y^3+z^3+w^3");
    const Pt p({1, -1, 0, 0});
    CHECK(tangent_plane(f, p).poly() == P("x+y"));
    CHECK(tangent_plane(f, p).contains(p));
    CHECK_THROWS_AS(tangent_plane(f, Pt({1, 0, 0, 0})), GeometryError);
    CHECK_THROWS_AS(tangent_plane(P("x^3 + y^2*z"), Pt({0, 0, 1, 0})), GeometryError);
}

TEST_CASE("tangent plane at a point of a line contains the line") {
    const auto& m = fixtures::base_model();
    for (const auto& l : m.lines.all()) {
        std::array<Rational, 4> x;
        for (int k = 0; k < 4; ++k) x[k] = l.span()[0][k] + Rational(2) * l.span()[1][k];
        const Pt p(x);
        const auto tp = tangent_plane(m.F, p);
        CHECK(l.lies_in(tp));
        CHECK(tp.contains(p));
    }
    const auto pre = load_preset("clebsch");
    const auto f5 = promote<QSqrt5>(pre.surface);
    for (const auto& l : clebsch_lines()) CHECK(l.lies_in(tangent_plane(f5, l.span()[1])));
}

TEST_CASE("plane section is singular exactly at the tangency point") {
    const auto& m = fixtures::base_model();
    const Pt p = sample_point_off_lines(m);
    const auto tp = tangent_plane(m.F, p);
    const PlaneChart<Rational> chart(tp);
    const MPoly c = chart.restrict_poly(m.F);
    const auto u = chart.to_chart(p);
    for (int v = 0; v < 3; ++v) CHECK(c.derivative(v).evaluate(u).is_zero());
    // A different plane through P cuts a curve smooth at P.
    const Ln l = Ln::through(p, Pt({1, 2, 3, 5}));
    const auto other = plane_through(l, Pt({0, 1, -1, 2}));
    const PlaneChart<Rational> ch2(other);
    const MPoly c2 = ch2.restrict_poly(m.F);
    const auto u2 = ch2.to_chart(p);
    bool singular = true;
    for (int v = 0; v < 3; ++v) singular = singular && c2.derivative(v).evaluate(u2).is_zero();
    CHECK_FALSE(singular);
}

TEST_CASE("first_polar") {
    const MPoly f = P("x^3 + 2*x*y*z - w^3 + y^2*w");
    CHECK(first_polar(f, Pt({1, 0, 0, 0})) == f.derivative(0));
    const auto pre = load_preset("clebsch");
    const Pt a({0, 0, Rational(-1, 2), 1});
    const MPoly fa = first_polar(pre.surface, a);
    CHECK(fa.total_degree() == 2);
    CHECK(fa.is_homogeneous());
    // P on f and f_A: the line PA is tangent at P, so the lambda^2 mu
    // coefficient of f(lambda P + mu A) vanishes along with lambda^3.
    const auto lines = clebsch_lines();
    int checked = 0;
    const auto fa5 = promote<QSqrt5>(fa), f5 = promote<QSqrt5>(pre.surface);
    for (const auto& l : lines) {
        // Points of l where f_A vanishes: f_A restricted to l is a binary quadratic.
        const auto q = l.restrict_poly(fa5);
        if (q.is_zero()) continue;
        // Try the span points; at least count those that work.
        for (const auto& p : l.span()) {
            if (!fa5.evaluate(p.coords()).is_zero()) continue;
            const auto d = f5.directional_derivative(
                std::array<QSqrt5, 4>{QSqrt5(0), QSqrt5(0), QSqrt5(Rational(-1, 2)), QSqrt5(1)});
            CHECK(d.evaluate(p.coords()).is_zero());
            ++checked;
        }
    }
    // The identity also holds in general: f_A(P) is the lambda^2 mu coefficient.
    oracle::Gen g(8);
    for (int k = 0; k < 50; ++k) {
        const auto x = g.point(4);
        CHECK(fa.evaluate(x) == pre.surface.directional_derivative(a.coords()).evaluate(x));
    }
    (void)checked;
}

TEST_CASE("lines: constructors, incidence, round trip") {
    const Ln l = Ln::through(Pt({1, 0, 0, 0}), Pt({0, 1, 0, 0}));
    CHECK(l.dual_span()[0].poly() == P("z"));
    CHECK(l.dual_span()[1].poly() == P("w"));
    CHECK(Ln::meet(l.dual_span()[0], l.dual_span()[1]) == l);
    CHECK_THROWS_AS(Ln::through(Pt({1, 2, 3, 4}), Pt({2, 4, 6, 8})), GeometryError);
    CHECK_THROWS_AS(Ln::meet(PlaneForm<Rational>({1, 1, 0, 0}), PlaneForm<Rational>({2, 2, 0, 0})), GeometryError);

    const Ln a = Ln::through(Pt({1, 0, 0, 0}), Pt({0, 0, 1, 0}));
    const Ln skew = Ln::through(Pt({0, 0, 0, 1}), Pt({0, 1, 0, 0}));
    CHECK(l.meets(a));
    CHECK(l.intersection(a) == Pt({1, 0, 0, 0}));
    CHECK_FALSE(a.meets(skew));
    CHECK_THROWS_AS(a.intersection(skew), GeometryError);
    CHECK_THROWS_AS(a.intersection(a), GeometryError);
    CHECK(plane_through(l, a).poly() == P("w"));
}

TEST_CASE("random lines satisfy the Pluecker relation and round trip") {
    oracle::Gen g(9);
    for (int k = 0; k < 120; ++k) {
        const auto p = g.point(4), q = g.point(4);
        const std::array<Rational, 4> pa{p[0], p[1], p[2], p[3]}, qa{q[0], q[1], q[2], q[3]};
        if (std::all_of(pa.begin(), pa.end(), [](auto& x) { return x.is_zero(); })) continue;
        if (std::all_of(qa.begin(), qa.end(), [](auto& x) { return x.is_zero(); })) continue;
        Matrix<Rational> m(2, 4);
        for (int j = 0; j < 4; ++j) {
            m(0, j) = pa[j];
            m(1, j) = qa[j];
        }
        if (oracle::rank(oracle::to_qmat(m)) < 2) continue;
        const Ln l = Ln::through(Pt(pa), Pt(qa));
        CHECK(l.pluecker_relation().is_zero());
        CHECK(l.contains(Pt(pa)));
        CHECK(l.contains(Pt(qa)));
        CHECK(Ln::meet(l.dual_span()[0], l.dual_span()[1]) == l);
        for (const auto& d : l.dual_span()) CHECK(l.lies_in(d));
    }
}

TEST_CASE("the meet of two planes of a triederpaar triple is not on the surface") {
    const auto& m = fixtures::base_model();
    const auto planes = all_tritangent_planes(m.lines, m.F);
    // Type I x12 and x23 are two rows of the pattern-1 Triederpaar (1,2,3).
    const auto a = planes[TritangentLabel::type_one(1, 2).index()].form;
    const auto b = planes[TritangentLabel::type_one(2, 3).index()].form;
    CHECK_FALSE(Ln::meet(a, b).lies_on(m.F));
}

} // TEST_SUITE
