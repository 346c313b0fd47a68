#include "cubic27/cli.hpp"

#include "cubic27/exact/parse.hpp"
#include "cubic27/json_io.hpp"
#include "cubic27/presets.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <sstream>

namespace cubic27 {

namespace {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::array<Rational, 6> parse_d(const std::string& text) {
    std::vector<Rational> v;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            v.push_back(Rational::parse(item));
        } catch (const std::exception& e) {
            throw UsageError("cannot parse parameter '" + item + "': " + e.what());
        }
    }
    if (v.size() != 6) throw UsageError("--d needs exactly six comma-separated rationals");
    return {v[0], v[1], v[2], v[3], v[4], v[5]};
}

/// Everything the reports need about one surface, over its line field.
template <ExactField K>
struct SurfaceContext {
    MPoly f_rational;
    Polynomial<K> f;
    LineSet<K> lines;
    std::optional<std::pair<ProjPoint<Rational>, PlaneForm<Rational>>> cone_setup;
    std::optional<ProjPoint<K>> witness;
};

template <ExactField K>
ojson report(const std::string& which, const SurfaceContext<K>& ctx) {
    const auto graph = incidence_graph(ctx.lines);
    if (!incidence_matches_labels(graph)) throw CertificationError("line incidences contradict the labels");
    if (which == "lines") {
        ojson meets = ojson::object();
        for (const auto& a : all_line_labels()) {
            ojson row = ojson::array();
            for (const auto& b : all_line_labels())
                if (graph[a.index()][b.index()]) row.push_back(b.str());
            meets[a.str()] = row;
        }
        return {{"F", ctx.f.str()}, {"count", kLineCount}, {"lines", lines_json(ctx.lines)}, {"meets", meets}};
    }
    const auto planes = all_tritangent_planes(ctx.lines, ctx.f);
    if (which == "tritangents") return tritangents_json(planes);
    const auto tps = enumerate_triederpaare();
    if (which == "triederpaare") {
        ojson list = ojson::array();
        for (const auto& tp : tps) list.push_back(triederpaar_json(tp));
        const auto c = pattern_counts(tps);
        return {{"count", tps.size()}, {"byPattern", {c[0], c[1], c[2]}}, {"triederpaare", list}};
    }
    const ProjPoint<K> witness = ctx.witness ? *ctx.witness : surface_point_off_lines(ctx.f, ctx.lines);
    std::vector<CSEquation<K>> eqs;
    for (const auto& tp : tps) {
        eqs.push_back(assemble_cs_equation(planes, ctx.f, tp, witness));
        const auto& eq = eqs.back();
        const auto lambda = verify_cs_identity(ctx.f, eq.l_normal_form(), eq.m_normal_form());
        if (!lambda || !(*lambda == eq.lambda))
            throw CertificationError("Triederpaar " + tp.str() + ": normal form fails re-verification");
    }
    if (which == "cs-equations") {
        ojson list = ojson::array();
        for (const auto& eq : eqs) list.push_back(cs_equation_json(eq));
        return {{"F", ctx.f.str()}, {"witness", point_json(witness)}, {"count", eqs.size()}, {"equations", list}};
    }
    if (which == "embed45") {
        const Matrix<K> phi = phi_star_matrix(planes);
        ojson rows = ojson::array();
        for (std::size_t r = 0; r < phi.rows(); ++r) {
            ojson row = ojson::array();
            for (std::size_t k = 0; k < 4; ++k) row.push_back(phi(r, k).str());
            rows.push_back(row);
        }
        std::vector<Polynomial<K>> images;
        for (const auto& p : planes) images.push_back(p.form.poly());
        ojson bins = ojson::array(), certs = ojson::array();
        const auto binomials = binomial_conjugates(tps);
        for (std::size_t k = 0; k < binomials.size(); ++k) {
            const auto cert = pullback_binomial(images, binomials[k], eqs[k], ctx.f);
            bins.push_back(binomials[k].str());
            certs.push_back({{"binomial", binomials[k].str()},
                             {"plusScale", cert.plus_scale.str()},
                             {"minusScale", cert.minus_scale.str()},
                             {"kappa", cert.kappa.str()},
                             {"lambda", cert.lambda.str()}});
        }
        ojson coords = ojson::array();
        for (const auto& t : all_tritangent_labels()) coords.push_back(t.str());
        return {{"coordinates", coords},
                {"phiStar", rows},
                {"rank", rank(phi)},
                {"relationSpaceDimension", relation_space_basis(phi).size()},
                {"binomials", bins},
                {"pullbackCertificates", certs}};
    }
    throw UsageError("unknown report '" + which + "'");
}

template <ExactField K>
ojson cone_report(const SurfaceContext<K>& ctx) {
    const auto planes = all_tritangent_planes(ctx.lines, ctx.f);
    const auto setup = ctx.cone_setup ? *ctx.cone_setup : find_cone_setup(ctx.f_rational, ctx.lines, planes);
    ojson j = cone_json(analyze_cone(ctx.f_rational, ctx.lines, setup.first, setup.second));
    j["vertexOnTritangent"] = vertex_on_tritangent(planes, setup.first);
    return j;
}

SurfaceModel model_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open surface file " + path);
    ojson j;
    try {
        j = ojson::parse(in);
    } catch (const std::exception& e) {
        throw UsageError("invalid surface file: " + std::string(e.what()));
    }
    if (!j.contains("d") || !j["d"].is_array() || j["d"].size() != 6)
        throw UsageError("surface file needs six parameters under \"d\"");
    std::string d;
    for (const auto& v : j["d"]) d += (d.empty() ? "" : ",") + v.get<std::string>();
    SurfaceModel model = build_surface(parse_d(d));
    if (j.contains("F") && j["F"].get<std::string>() != model.F.str())
        throw CertificationError("surface file cubic does not match its parameters");
    return model;
}

void emit(const ojson& j, const std::string& format, const std::string& out_path, std::ostream& out) {
    const std::string text = format == "text" ? render_text(j) : j.dump(2) + "\n";
    if (out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw UsageError("cannot write " + out_path);
    f << text;
}

ojson verify_fixture(const Preset& p) {
    const auto lambda = verify_cs_identity(p.surface, p.cs_l, p.cs_m);
    const bool pass = lambda && *lambda == p.cs_lambda;
    return {{"fixture", p.name},
            {"surface", p.surface.str()},
            {"expansion", (p.cs_l[0] * p.cs_l[1] * p.cs_l[2] - p.cs_m[0] * p.cs_m[1] * p.cs_m[2]).str()},
            {"lambda", lambda ? lambda->str() : "none"},
            {"expectedLambda", p.cs_lambda.str()},
            {"pass", pass}};
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact computations on smooth cubic surfaces: lines, tritangent planes, Cayley-Salmon equations"};
    app.require_subcommand(1);
    std::string d, preset, surface_file, out_path, format = "json", which, fixture = "clebsch", fixture_file;
    const auto add_common = [&](CLI::App* sub) {
        sub->add_option("--out", out_path, "Write the result to FILE instead of stdout");
        sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));
    };
    auto* gen = app.add_subcommand("generate", "Build a surface from six parameters");
    gen->add_option("--d", d, "Six rationals a,b,c,d,e,f")->required();
    add_common(gen);
    auto* rep = app.add_subcommand("report", "Report one family of objects");
    rep->add_option("which", which, "lines|tritangents|triederpaare|cs-equations|embed45|cone")
        ->required()
        ->check(CLI::IsMember({"lines", "tritangents", "triederpaare", "cs-equations", "embed45", "cone"}));
    auto* src_d = rep->add_option("--d", d, "Six rationals a,b,c,d,e,f");
    auto* src_p = rep->add_option("--preset", preset, "Named preset (e.g. clebsch)");
    auto* src_s = rep->add_option("--surface", surface_file, "Surface JSON written by generate");
    src_d->excludes(src_p)->excludes(src_s);
    src_p->excludes(src_s);
    add_common(rep);
    auto* ver = app.add_subcommand("verify-fixture", "Check a preset's Cayley-Salmon identity by expansion");
    ver->add_option("name", fixture, "Preset name");
    ver->add_option("--file", fixture_file, "Preset file to check instead of a named preset");
    add_common(ver);

    std::vector<const char*> argv{"cubic27"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (gen->parsed()) {
            const SurfaceModel model = build_surface(parse_d(d));
            incidence_graph(model.lines);
            emit(surface_json(model), format, out_path, out);
        } else if (rep->parsed()) {
            if (!preset.empty()) {
                const Preset p = load_preset(preset);
                SurfaceContext<QSqrt5> ctx{p.surface, promote<QSqrt5>(p.surface), clebsch_line_set(p.surface),
                                           std::pair{p.vertex, p.section_plane}, std::nullopt};
                emit(which == "cone" ? cone_report(ctx) : report(which, ctx), format, out_path, out);
            } else {
                if (d.empty() && surface_file.empty()) throw UsageError("report needs --d, --preset or --surface");
                const SurfaceModel model = surface_file.empty() ? build_surface(parse_d(d)) : model_from_file(surface_file);
                SurfaceContext<Rational> ctx{model.F, model.F, model.lines, std::nullopt, sample_point_off_lines(model)};
                emit(which == "cone" ? cone_report(ctx) : report(which, ctx), format, out_path, out);
            }
        } else if (ver->parsed()) {
            const Preset p = fixture_file.empty() ? load_preset(fixture) : load_preset_file(fixture_file);
            const ojson result = verify_fixture(p);
            emit(result, format, out_path, out);
            if (!result["pass"].get<bool>()) {
                err << "fixture " << p.name << ": Cayley-Salmon identity fails\n";
                return kExitCertification;
            }
        }
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const GenericityError& e) {
        err << "genericity failure: " << e.what() << "\n";
        return kExitGenericity;
    } catch (const CertificationError& e) {
        err << "certification failure: " << e.what() << "\n";
        return kExitCertification;
    } catch (const GeometryError& e) {
        err << "certification failure: " << e.what() << "\n";
        return kExitCertification;
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitOk;
}

} // namespace cubic27
