#include "doctest.h"
#include "oracles.hpp"

#include "cubic27/exact/univariate.hpp"

using namespace cubic27;

namespace {

using D6 = std::array<Rational, 6>;

int genericity_cause(const D6& d) {
    try {
        check_genericity(d);
    } catch (const GenericityError& e) {
        return static_cast<int>(e.cause()) + 1;
    }
    return 0;
}

/// Collinearity and conic conditions by brute force: 20 Leibniz
/// determinants and the Gauss-Jordan rank of the conic monomial matrix.
bool brute_force_generic(const D6& d) {
    std::vector<std::array<mpq_class, 3>> p;
    for (const auto& x : d) p.push_back({1, x.value(), x.value() * x.value() * x.value()});
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j) {
            if (d[i] == d[j]) return false;
            for (int k = j + 1; k < 6; ++k)
                if (oracle::leibniz_det({{p[i][0], p[i][1], p[i][2]}, {p[j][0], p[j][1], p[j][2]},
                                         {p[k][0], p[k][1], p[k][2]}}) == 0)
                    return false;
        }
    oracle::QMat conic;
    for (const auto& x : d) {
        const mpq_class t = x.value();
        conic.push_back({1, t, t * t, t * t * t, t * t * t * t, t * t * t * t * t * t});
    }
    return oracle::rank(conic) == 6;
}

} // namespace

TEST_SUITE("blowup") {

TEST_CASE("check_genericity examples") {
    CHECK(genericity_cause({1, 2, 3, 4, 5, 7}) == 0);
    CHECK(brute_force_generic({1, 2, 3, 4, 5, 7}));

    D6 collinear{0, 1, -1, 2, 3, 4};
    CHECK_FALSE(brute_force_generic(collinear));
    try {
        check_genericity(collinear);
        FAIL("expected rejection");
    } catch (const GenericityError& e) {
        CHECK(e.cause() == GenericityError::Cause::CollinearTriple);
        CHECK(e.indices() == std::array<int, 3>{1, 2, 3});
        CHECK(std::string(e.what()).find("collinear") != std::string::npos);
    }
    // Sum zero puts all six on a conic; these also contain a collinear
    // triple (1 + 2 - 3 = 0), and the conic is reported.
    CHECK(genericity_cause({1, 2, 3, -1, -2, -3}) == 2);
    CHECK(genericity_cause({-9, -8, -7, -6, -5, 35}) == 2);
    CHECK(genericity_cause({1, 1, 2, 3, 4, 5}) == 1);
}

TEST_CASE("genericity agrees with brute force on random tuples") {
    oracle::Gen g(21);
    int rejected = 0;
    for (int k = 0; k < 150; ++k) {
        D6 d;
        for (auto& x : d) x = Rational(g.integer(-4, 4));
        if (k % 3 == 0) d[5] = -(d[0] + d[1] + d[2] + d[3] + d[4]);
        const bool ok = genericity_cause(d) == 0;
        CHECK(ok == brute_force_generic(d));
        rejected += !ok;
    }
    CHECK(rejected > 0);
}

TEST_CASE("cubic_system_basis") {
    const auto& m = fixtures::base_model();
    CHECK(m.map_cubics.size() == 4);
    for (const auto& c : m.map_cubics) {
        CHECK(c.total_degree() == 3);
        for (const auto& p : m.config.points) CHECK(c.evaluate(p).is_zero());
        // On (1, t, t^3) the cubic becomes a degree-9 polynomial divisible by prod (t - d_i).
        std::array<MPoly, 3> img{MPoly::constant(1, 1), MPoly::variable(1, 0), MPoly::variable(1, 0).pow(3)};
        const MPoly u = c.substitute(std::span<const MPoly>(img));
        std::vector<Rational> coeffs(10, Rational(0));
        for (const auto& [mono, a] : u.terms()) coeffs[mono.exps[0]] = a;
        UPoly<Rational> prod(std::vector<Rational>{Rational(1)});
        for (const auto& d : m.config.d) prod = prod * UPoly<Rational>(std::vector<Rational>{-d, Rational(1)});
        CHECK(UPoly<Rational>::divmod(UPoly<Rational>(coeffs), prod).second.is_zero());
    }
}

TEST_CASE("implicitize") {
    const auto& m = fixtures::base_model();
    CHECK(m.F.total_degree() == 3);
    CHECK(m.F.is_homogeneous());
    CHECK(m.F.substitute(std::span<const MPoly>(m.map_cubics)).is_zero());
    // Common rescaling leaves the canonical F unchanged.
    auto scaled = m.map_cubics;
    for (auto& c : scaled) c = c * Rational(-7, 3);
    CHECK(implicitize(scaled) == m.F);
    // An invertible change of basis c' = M c changes F by the inverse substitution.
    const Matrix<Rational> M{{1, 2, 0, 0}, {0, 1, 0, 3}, {1, 0, 1, 0}, {0, 0, 0, 1}};
    std::array<MPoly, 4> mixed;
    for (int r = 0; r < 4; ++r) {
        mixed[r] = MPoly(3);
        for (int k = 0; k < 4; ++k) mixed[r] = mixed[r] + m.map_cubics[k] * M(r, k);
    }
    const MPoly f2 = implicitize(mixed);
    CHECK(f2.total_degree() == 3);
    std::array<MPoly, 4> lin;
    for (int r = 0; r < 4; ++r) {
        std::array<Rational, 4> row{M(r, 0), M(r, 1), M(r, 2), M(r, 3)};
        lin[r] = MPoly::linear(std::span<const Rational>(row));
    }
    CHECK(equal_up_to_scalar(f2.substitute(std::span<const MPoly>(lin)), m.F).has_value());
}

TEST_CASE("the 27 lines") {
    const auto& m = fixtures::base_model();
    const auto& L = m.lines;
    for (const auto& l : L.all()) CHECK(l.lies_on(m.F));
    const AnticanonicalMap map{m.config, m.map_cubics};
    CHECK(line_F(map, 1, 2) == L[LineLabel::F(1, 2)]);
    CHECK(line_F(map, 2, 1) == L[LineLabel::F(1, 2)]);
    CHECK(L[LineLabel::F(1, 2)].meets(L[LineLabel::F(3, 4)]));
    for (int i = 1; i <= 6; ++i) {
        for (int j = 1; j <= 6; ++j) {
            if (i == j) continue;
            CHECK(L[LineLabel::G(j)].meets(L[LineLabel::F(i, j)]));
            CHECK(L[LineLabel::E(i)].meets(L[LineLabel::G(j)]));
        }
        int meets = 0;
        for (const auto& o : L.all()) meets += L[LineLabel::E(i)].meets(o);
        CHECK(meets == 10);
    }
    // G6 meets E1..E5 and F(6, k).
    for (int k = 1; k <= 5; ++k) {
        CHECK(L[LineLabel::G(6)].meets(L[LineLabel::E(k)]));
        CHECK(L[LineLabel::G(6)].meets(L[LineLabel::F(6, k)]));
    }
    CHECK_FALSE(L[LineLabel::G(6)].meets(L[LineLabel::E(6)]));
    CHECK_THROWS_AS(line_F(map, 3, 3), std::invalid_argument);
}

TEST_CASE("proper transform of a line: common factor of degree exactly 2") {
    const auto& m = fixtures::base_model();
    const auto& p = m.config.points;
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j) {
            std::array<MPoly, 3> img;
            for (int k = 0; k < 3; ++k) {
                const std::array<Rational, 2> c{p[i][k], p[j][k]};
                img[k] = MPoly::linear(std::span<const Rational>(c));
            }
            std::optional<MPoly> g;
            for (const auto& c : m.map_cubics) {
                const MPoly b = c.substitute(std::span<const MPoly>(img));
                if (!b.is_zero()) g = g ? binary_gcd(*g, b) : b;
            }
            REQUIRE(g.has_value());
            CHECK(g->total_degree() == 2);
            CHECK(binary_squarefree_profile(*g).gcd_degree == 0);
        }
}

TEST_CASE("Jacobian at a base point kills the point direction") {
    const auto& m = fixtures::base_model();
    for (const auto& p : m.config.points)
        for (const auto& c : m.map_cubics) {
            Rational s(0);
            for (int v = 0; v < 3; ++v) s += c.derivative(v).evaluate(p) * p[v];
            CHECK(s.is_zero());
        }
}

TEST_CASE("conic through five points is unique") {
    const auto& m = fixtures::base_model();
    const auto quad = monomials_of_degree(3, 2);
    for (int j = 0; j < 6; ++j) {
        Matrix<Rational> sys(5, 6);
        int r = 0;
        for (int k = 0; k < 6; ++k) {
            if (k == j) continue;
            for (int c = 0; c < 6; ++c) sys(r, c) = MPoly::monomial(3, quad[c], 1).evaluate(m.config.points[k]);
            ++r;
        }
        CHECK(kernel_basis(sys).size() == 1);
    }
}

TEST_CASE("rational_surface_point") {
    const auto& m = fixtures::base_model();
    const AnticanonicalMap map{m.config, m.map_cubics};
    const std::array<Rational, 3> q{1, 0, 0};
    const auto pt = rational_surface_point(map, q);
    CHECK(m.F.evaluate(pt.coords()).is_zero());
    CHECK_THROWS_AS(rational_surface_point(map, m.config.points[2]), GeometryError);
    const auto off = sample_point_off_lines(m);
    for (const auto& l : m.lines.all()) CHECK_FALSE(l.contains(off));
    oracle::Gen g(31);
    for (int k = 0; k < 30; ++k) {
        const std::array<Rational, 3> u{g.rational(), g.rational(), g.nonzero_rational()};
        CHECK(m.F.evaluate(rational_surface_point(map, u).coords()).is_zero());
    }
}

TEST_CASE("other generic tuples") {
    for (const D6& d : {D6{2, 3, 5, 7, 11, 13}, D6{Rational(1, 2), -1, 3, Rational(2, 3), 5, -7},
                        D6{-3, Rational(1, 3), 4, Rational(-5, 2), 6, 9}}) {
        const auto m = build_surface(d);
        const auto g = incidence_graph(m.lines);
        CHECK(incidence_matches_labels(g));
    }
}

} // TEST_SUITE
