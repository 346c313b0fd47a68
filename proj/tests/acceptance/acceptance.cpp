// One PASS/FAIL line per acceptance criterion. Exit status is nonzero when
// any criterion fails.

#include "oracles.hpp"

#include "cubic27/cli.hpp"
#include "cubic27/conecurve.hpp"
#include "cubic27/embed45.hpp"
#include "cubic27/exact/parse.hpp"
#include "cubic27/triederpaar.hpp"

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>

using namespace cubic27;

namespace {

// Runtime limits in seconds.
constexpr double kLimitLines = 30;
constexpr double kLimitTritangents = 30;
constexpr double kLimitCensus = 30;
constexpr double kLimitCayleySalmon = 60;
constexpr double kLimitClebschExpansion = 1;
constexpr double kLimitCone = 300;
constexpr double kLimitEmbedding = 120;
constexpr double kLimitProperties = 120;
// The numeric bitangent cross-check clusters roots within this relative radius.
constexpr double kRootClusterRadius = 1e-4;
constexpr int kRandomInstances = 100;

using D6 = std::array<Rational, 6>;

const std::vector<D6>& tuples() {
    static const std::vector<D6> t{D6{1, 2, 3, 4, 5, 7}, D6{2, 3, 5, 7, 11, 13},
                                   D6{Rational(1, 2), -1, 3, Rational(2, 3), 5, -7},
                                   D6{-3, Rational(1, 3), 4, Rational(-5, 2), 6, 9}};
    return t;
}

const std::vector<SurfaceModel>& models() {
    static const std::vector<SurfaceModel> m = [] {
        std::vector<SurfaceModel> out;
        for (const auto& d : tuples()) out.push_back(build_surface(d));
        return out;
    }();
    return m;
}

std::string tuple_str(const D6& d) {
    std::string s = "(";
    for (std::size_t k = 0; k < 6; ++k) s += (k ? "," : "") + d[k].str();
    return s + ")";
}

struct Outcome {
    bool pass = true;
    std::ostringstream detail;

    void require(bool ok, const std::string& what) {
        if (!ok && pass) detail << "failed: " << what << "; ";
        pass = pass && ok;
    }
};

/// Whether two lines meet, from the Leibniz determinant of their span points.
bool meets_by_leibniz(const Line<Rational>& a, const Line<Rational>& b) {
    oracle::QMat m;
    for (const auto* l : {&a, &b})
        for (const auto& p : l->span()) m.push_back({p[0].value(), p[1].value(), p[2].value(), p[3].value()});
    return oracle::leibniz_det(m) == 0;
}

void criterion_lines(Outcome& o) {
    // Builds the shared models, so construction counts against this limit.
    oracle::Gen g(101);
    for (std::size_t t = 0; t < tuples().size(); ++t) {
        const auto& m = models()[t];
        const std::string name = tuple_str(tuples()[t]);
        std::set<std::string> keys;
        for (const auto& l : m.lines.all()) {
            keys.insert(l.key());
            o.require(l.lies_on(m.F), name + " line not on F by substitution");
            // Evaluation at random points of the line.
            for (int k = 0; k < 3; ++k) {
                const Rational s = g.rational(), u = g.nonzero_rational();
                std::vector<Rational> x(4);
                for (int j = 0; j < 4; ++j) x[j] = s * l.span()[0][j] + u * l.span()[1][j];
                o.require(m.F.evaluate(x).is_zero(), name + " line not on F by evaluation");
            }
        }
        o.require(keys.size() == 27, name + " lines not distinct");
        const auto graph = incidence_graph(m.lines);
        for (std::size_t a = 0; a < 27; ++a) {
            int n = 0, n_oracle = 0;
            for (std::size_t b = 0; b < 27; ++b) {
                if (a == b) continue;
                n += graph[a][b];
                n_oracle += meets_by_leibniz(m.lines.at(a), m.lines.at(b));
            }
            o.require(n == 10 && n_oracle == 10, name + " line does not meet exactly 10 others");
        }
        o.require(incidence_matches_labels(graph), name + " incidences contradict labels");
    }
    o.detail << tuples().size() << " tuples: 27 distinct lines on V(F), each meeting 10 (bilinear and 4x4 Leibniz)";
}

void criterion_tritangents(Outcome& o) {
    oracle::Gen g(202);
    for (std::size_t t = 0; t < tuples().size(); ++t) {
        const auto& m = models()[t];
        const std::string name = tuple_str(tuples()[t]);
        const auto planes = all_tritangent_planes(m.lines, m.F);
        int type_one = 0;
        for (const auto& p : planes) type_one += p.label.is_type_one();
        o.require(planes.size() == 45 && type_one == 30, name + " plane counts");
        for (const auto& l : m.lines.all()) {
            int n = 0;
            for (const auto& p : planes) n += l.lies_in(p.form);
            o.require(n == 5, name + " line not in exactly 5 planes");
        }
        // Independent factorization check: on the plane, F / (h_a h_b h_c) is
        // constant at random points, h_l a plane through l other than the tritangent.
        for (const auto& p : planes) {
            std::array<PlaneForm<Rational>, 3> h{p.form, p.form, p.form};
            for (int k = 0; k < 3; ++k)
                for (const auto& d : m.lines[p.lines[k]].dual_span())
                    if (!(d == p.form)) {
                        h[k] = d;
                        break;
                    }
            Matrix<Rational> row(1, 4);
            for (int k = 0; k < 4; ++k) row(0, k) = p.form[k];
            const auto basis = kernel_basis(row);
            std::optional<Rational> ratio;
            for (int s = 0; s < 4; ++s) {
                std::vector<Rational> x(4, Rational(0));
                for (const auto& b : basis) {
                    const Rational c = g.rational();
                    for (int k = 0; k < 4; ++k) x[k] += c * b[k];
                }
                Rational prod(1);
                for (const auto& hk : h) prod *= hk.poly().evaluate(x);
                const Rational fv = m.F.evaluate(x);
                if (prod.is_zero()) {
                    o.require(fv.is_zero(), name + " " + p.label.str() + " F nonzero on a line");
                    continue;
                }
                if (!ratio) ratio = fv / prod;
                o.require(fv / prod == *ratio, name + " " + p.label.str() + " restricted F is not the line product");
            }
            o.require(ratio && !ratio->is_zero(), name + " " + p.label.str() + " degenerate sample");
        }
    }
    o.detail << tuples().size() << " tuples: 45 planes (30 I, 15 II), 5 per line, factorization by chart and by sampling";
}

void criterion_census(Outcome& o) {
    std::size_t ordered = 0;
    for (const auto& t : all_tritangent_labels()) ordered += valid_partners(t).size();
    o.require(ordered == 45 * 32, "partner count");
    const auto tps = enumerate_triederpaare();
    std::set<std::array<std::size_t, 3>> triples;
    std::set<Triederpaar::Key> keys;
    for (const auto& tp : tps) {
        triples.insert(sorted_indices(tp.rows()));
        triples.insert(sorted_indices(tp.cols()));
        keys.insert(tp.key());
    }
    o.require(ordered / 6 == 240 && triples.size() == 240, "240 triples");
    o.require(tps.size() == 120, "120 Triederpaare");
    o.require(pattern_counts(tps) == std::array<int, 3>{20, 90, 10}, "pattern split 20/90/10");
    std::size_t pairs = 0;
    std::map<std::array<std::size_t, 3>, int> hits;
    const auto& T = all_tritangent_labels();
    for (std::size_t a = 0; a < 45; ++a)
        for (const auto& b : valid_partners(T[a])) {
            if (b.index() < a) continue;
            ++pairs;
            const auto tp = complete_pair_to_triederpaar(T[a], b);
            o.require(keys.count(tp.key()) == 1, "completion outside the enumeration");
            ++hits[sorted_indices(tp.rows())];
        }
    o.require(pairs == 720, "720 unordered pairs");
    o.require(hits.size() == 240, "completions cover all triples");
    for (const auto& [k, n] : hits) o.require(n == 3, "each triple completes from exactly 3 pairs");
    o.detail << ordered << "/6 = " << ordered / 6 << " triples, 120 = 20+90+10, " << pairs << " pairs complete consistently";
}

void criterion_cayley_salmon(Outcome& o) {
    const auto tps = enumerate_triederpaare();
    std::size_t total = 0;
    for (std::size_t t = 0; t < tuples().size(); ++t) {
        const auto& m = models()[t];
        const std::string name = tuple_str(tuples()[t]);
        const auto planes = all_tritangent_planes(m.lines, m.F);
        const auto witness = sample_point_off_lines(m);
        for (const auto& tp : tps) {
            const auto eq = assemble_cs_equation(planes, m.F, tp, witness);
            o.require(!eq.kappa.is_zero() && !eq.lambda.is_zero(), name + " zero scalar");
            o.require(product_of_planes(eq.l) - product_of_planes(eq.m) * eq.kappa == m.F * eq.lambda,
                      name + " " + tp.str() + " expansion");
            o.require(eq.kappa == eq.kappa_by_evaluation, name + " " + tp.str() + " kappa routes disagree");
            ++total;
        }
    }
    o.detail << total << " identities over " << tuples().size()
             << " tuples, kappa by linear solve and by evaluation at a point off the lines";
}

void criterion_clebsch_expansion(Outcome& o) {
    const auto p = [](const char* s) { return parse_polynomial(s, 4); };
    const MPoly lhs = p("-3*(w+x)") * p("w") * p("x") - p("3*(w+x+y)") * p("w+x+z") * p("y+z");
    const MPoly target = p("-(w+x+y+z)^3 + w^3 + x^3 + y^3 + z^3");
    o.require(lhs == target, "expansion differs");
    const Preset pre = load_preset("clebsch");
    o.require(verify_cs_identity(pre.surface, pre.cs_l, pre.cs_m) == Rational(1), "preset fixture lambda != 1");
    o.detail << "-3(w+x)wx - 3(w+x+y)(w+x+z)(y+z) = " << target.str();
}

void criterion_cone(Outcome& o) {
    const auto& c = fixtures::clebsch();
    const Preset& pre = c.preset;
    // The preset's vertex and plane are the given ones in the rational
    // coordinates of the surface: u = (x + r3 y + z/4, x - r3 y + z/4, -2x + z/4, 3z/4 + w).
    using Q3 = QuadraticNumber<3>;
    using P3 = Polynomial<Q3>;
    const Q3 r3 = Q3::root();
    const auto lin = [](std::array<Q3, 4> v) { return P3::linear(std::span<const Q3>(v)); };
    const std::array<P3, 4> u{lin({Q3(1), r3, Q3(Rational(1, 4)), Q3(0)}), lin({Q3(1), -r3, Q3(Rational(1, 4)), Q3(0)}),
                              lin({Q3(-2), Q3(0), Q3(Rational(1, 4)), Q3(0)}),
                              lin({Q3(0), Q3(0), Q3(Rational(3, 4)), Q3(1)})};
    const std::vector<Q3> a_given{Q3(0), Q3(0), Q3(Rational(-1, 2)), Q3(1)};
    std::array<Rational, 4> ua;
    for (int k = 0; k < 4; ++k) ua[k] = u[k].evaluate(a_given).rational_part();
    o.require(ProjPoint<Rational>(ua) == pre.vertex, "preset vertex is not the transformed A");
    const P3 pulled = promote<Q3>(pre.section_plane.poly()).substitute(std::span<const P3>(u));
    o.require(equal_up_to_scalar(pulled, P3::variable(4, 2)).has_value(), "preset plane is not the transformed x2 = 0");

    const auto an = analyze_cone(pre.surface, c.lines, pre.vertex, pre.section_plane);
    o.require(an.cone.total_degree() == 6, "cone degree");
    o.require(an.section.total_degree() == 6, "section degree");
    o.require(an.distinct_traces == 27, "27 distinct bitangents");
    o.require(!vertex_on_tritangent(c.planes, pre.vertex), "vertex on a tritangent plane");
    const PlueckerData pd = an.pluecker;
    o.require(pd.tau == 27 && pd.delta == 0 && pd.nu == 6 && pd.mu == 12, "tuple (27,0,6,12)");
    o.require(pd.satisfies_relation(), "2tau - 2delta = (mu - nu)(mu + nu - 9)");
    // Numeric cross-check: each restricted section has root clusters {1,1,2,2}.
    int numeric_ok = 0;
    for (const auto& b : an.bitangents) {
        const auto bin = section_on_trace(promote<QSqrt5>(an.section), b.trace);
        std::vector<double> coeffs(7, 0.0);
        for (const auto& [mono, v] : bin.terms()) coeffs[mono.exps[0]] = oracle::to_double(v);
        const auto roots = oracle::durand_kerner(coeffs);
        auto sizes = oracle::root_cluster_sizes(roots, kRootClusterRadius);
        if (roots.size() < 6) sizes.push_back(6 - static_cast<int>(roots.size()));
        std::sort(sizes.begin(), sizes.end());
        numeric_ok += sizes == std::vector<int>{1, 1, 2, 2};
    }
    o.require(numeric_ok == 27, "numeric root clusters");
    o.detail << "A = " << "[" << pre.vertex.key() << "]" << ", plane " << pre.section_plane.poly().str() << ": cone degree "
             << an.cone.total_degree() << ", section degree " << an.section.total_degree() << ", "
             << an.distinct_traces << " bitangents (" << numeric_ok << " confirmed numerically), (tau,delta,nu,mu) = ("
             << pd.tau << "," << pd.delta << "," << pd.nu << "," << pd.mu << ")";
}

template <ExactField K>
int embedding_checks(Outcome& o, const std::string& name, const Polynomial<K>& f, const LineSet<K>& lines,
                     const ProjPoint<K>& witness, bool generic) {
    const auto planes = all_tritangent_planes(lines, f);
    const Matrix<K> phi = phi_star_matrix(planes);
    o.require(rank(phi) == 4, name + " rank");
    o.require(relation_space_basis(phi).size() == 41, name + " relation space");
    const auto tps = enumerate_triederpaare();
    const auto bs = binomial_conjugates(tps);
    std::vector<Polynomial<K>> images;
    for (const auto& p : planes) images.push_back(p.form.poly());
    int reconciled = 0, dependent = 0;
    for (std::size_t k = 0; k < tps.size(); ++k) {
        const auto eq = assemble_cs_equation(planes, f, tps[k], witness);
        const auto cert = pullback_binomial(images, bs[k], eq, f);
        const bool ok = !cert.plus_scale.is_zero() && !cert.minus_scale.is_zero() && !cert.lambda.is_zero();
        reconciled += ok;
        for (const auto& [idx, det] : four_plane_determinants(phi, tps[k])) dependent += det.is_zero();
    }
    o.require(reconciled == 120, name + " reconciled pullbacks");
    // Four planes of a Triederpaar are independent only on a general surface.
    if (generic) o.require(dependent == 0, name + " four planes of a Triederpaar are dependent");
    return dependent;
}

void criterion_embedding(Outcome& o) {
    for (std::size_t t = 0; t < tuples().size(); ++t)
        embedding_checks(o, tuple_str(tuples()[t]), models()[t].F, models()[t].lines,
                         sample_point_off_lines(models()[t]), true);
    const auto& c = fixtures::clebsch();
    const int special = embedding_checks(o, "clebsch", c.f, c.lines, surface_point_off_lines(c.f, c.lines), false);
    o.detail << tuples().size() << " tuples and the Clebsch surface: rank 4, relations 41, 120 pullbacks reconciled; "
             << "four-plane subsets independent on the generic tuples (Clebsch: " << special << " of 1800 dependent)";
}

std::string cli_output(const std::vector<std::string>& args, int& code) {
    std::ostringstream out, err;
    code = run_cli(args, out, err);
    return out.str() + "\x1f" + err.str();
}

void criterion_properties(Outcome& o) {
    // Genericity diagnostics.
    const auto rejects = [&](const D6& d, GenericityError::Cause cause, const std::string& text) {
        try {
            check_genericity(d);
        } catch (const GenericityError& e) {
            return e.cause() == cause && std::string(e.what()).find(text) != std::string::npos;
        }
        return false;
    };
    o.require(rejects({0, 1, -1, 2, 3, 4}, GenericityError::Cause::CollinearTriple, "points 1, 2, 3"),
              "collinear diagnostic");
    o.require(rejects({-9, -8, -7, -6, -5, 35}, GenericityError::Cause::ConicThroughSix, "conic through six points"),
              "zero-sum diagnostic");
    int code = 0;
    const std::string diag = cli_output({"generate", "--d", "0,1,-1,2,3,4"}, code);
    o.require(code == kExitGenericity && diag.find("collinear triple") != std::string::npos, "CLI collinear exit");
    cli_output({"generate", "--d", "-9,-8,-7,-6,-5,35"}, code);
    o.require(code == kExitGenericity, "CLI zero-sum exit");

    // Determinism.
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"report", "cs-equations", "--d", "1,2,3,4,5,7"}, {"report", "embed45", "--preset", "clebsch"}}) {
        std::set<std::string> runs;
        for (int k = 0; k < 3; ++k) runs.insert(cli_output(args, code));
        o.require(runs.size() == 1 && code == kExitOk, "output differs across runs: " + args[1]);
    }

    // equal_up_to_scalar round trip.
    oracle::Gen g(303);
    int scalar_cases = 0;
    for (int k = 0; k < kRandomInstances; ++k) {
        const MPoly p = g.homogeneous(4, 3);
        if (p.is_zero()) continue;
        const Rational c = g.nonzero_rational();
        o.require(equal_up_to_scalar(p * c, p) == c, "scalar recovered");
        o.require(equal_up_to_scalar(p, p * c) == c.inverse(), "inverse scalar recovered");
        const MPoly q = p + MPoly::variable(4, g.integer(0, 3)).pow(3) * Rational(1, 7);
        if (!equal_up_to_scalar(q, p)) ++scalar_cases;
        else o.require(false, "perturbed polynomial proportional");
    }
    // Kernel basis: M v = 0 and dim = cols - rank (Gauss-Jordan oracle).
    int kernel_cases = 0;
    for (int k = 0; k < kRandomInstances; ++k) {
        const std::size_t r = g.integer(1, 6), c = g.integer(1, 7);
        const auto m = g.matrix(r, c, 2);
        const auto ker = kernel_basis(m);
        o.require(ker.size() == c - static_cast<std::size_t>(oracle::rank(oracle::to_qmat(m))), "kernel dimension");
        for (const auto& v : ker)
            for (std::size_t i = 0; i < r; ++i) {
                Rational s(0);
                for (std::size_t j = 0; j < c; ++j) s += m(i, j) * v[j];
                o.require(s.is_zero(), "kernel vector not annihilated");
            }
        ++kernel_cases;
    }
    o.require(scalar_cases >= kRandomInstances / 2 && kernel_cases == kRandomInstances, "instance counts");
    o.detail << "diagnostics ok, 3 identical runs x 2 reports, " << scalar_cases << " scalar and " << kernel_cases
             << " kernel instances";
}

} // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        double limit;
        std::function<void(Outcome&)> run;
    };
    const std::vector<Criterion> criteria{
        {1, "27 lines", kLimitLines, criterion_lines},
        {2, "45 tritangent planes", kLimitTritangents, criterion_tritangents},
        {3, "Triederpaar census", kLimitCensus, criterion_census},
        {4, "120 Cayley-Salmon identities", kLimitCayleySalmon, criterion_cayley_salmon},
        {5, "Clebsch expansion", kLimitClebschExpansion, criterion_clebsch_expansion},
        {6, "cone and bitangents", kLimitCone, criterion_cone},
        {7, "45-coordinate embedding", kLimitEmbedding, criterion_embedding},
        {8, "property suite", kLimitProperties, criterion_properties},
    };
    bool all = true;
    for (const auto& c : criteria) {
        Outcome o;
        const auto start = std::chrono::steady_clock::now();
        try {
            c.run(o);
        } catch (const std::exception& e) {
            o.require(false, std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        o.require(secs < c.limit, "time limit exceeded");
        all = all && o.pass;
        std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << c.id << " (" << c.name << "): " << o.detail.str()
                  << " [" << std::fixed << std::setprecision(2) << secs << " s, limit " << c.limit << " s]"
                  << std::endl;
    }
    return all ? 0 : 1;
}
