#ifndef CUBIC27_JSON_IO_HPP
#define CUBIC27_JSON_IO_HPP

#include "cubic27/blowup.hpp"
#include "cubic27/conecurve.hpp"
#include "cubic27/embed45.hpp"
#include "cubic27/surface.hpp"
#include "cubic27/triederpaar.hpp"

#include "json.hpp"

#include <string>
#include <vector>

namespace cubic27 {

using ojson = nlohmann::ordered_json;

template <class T>
ojson scalars_json(const T& values) {
    ojson a = ojson::array();
    for (const auto& v : values) a.push_back(v.str());
    return a;
}

template <ExactField K>
ojson point_json(const ProjPoint<K>& p) {
    return scalars_json(p.coords());
}

template <ExactField K>
ojson plane_json(const PlaneForm<K>& p) {
    return {{"form", p.poly().str()}, {"coeffs", scalars_json(p.coeffs())}};
}

template <ExactField K>
ojson line_json(const Line<K>& l) {
    return {{"span", {point_json(l.span()[0]), point_json(l.span()[1])}},
            {"pluecker", scalars_json(l.pluecker())},
            {"planes", {l.dual_span()[0].poly().str(), l.dual_span()[1].poly().str()}}};
}

template <ExactField K>
ojson lines_json(const LineSet<K>& lines) {
    ojson o = ojson::object();
    for (const auto& label : all_line_labels()) o[label.str()] = line_json(lines[label]);
    return o;
}

inline ojson triple_json(const PlaneTriple& t) {
    ojson a = ojson::array();
    for (const auto& p : t) a.push_back(p.str());
    return a;
}

inline ojson grid_json(const LineGrid& g) {
    ojson a = ojson::array();
    for (const auto& row : g) {
        ojson r = ojson::array();
        for (const auto& l : row) r.push_back(l.str());
        a.push_back(r);
    }
    return a;
}

inline ojson triederpaar_json(const Triederpaar& tp) {
    return {{"patternType", tp.pattern()},
            {"rows", triple_json(tp.rows())},
            {"cols", triple_json(tp.cols())},
            {"grid", grid_json(tp.grid())}};
}

template <ExactField K>
ojson tritangents_json(const std::vector<TritangentPlane<K>>& planes) {
    ojson list = ojson::array();
    int type_one = 0, eckardt = 0;
    for (const auto& p : planes) {
        type_one += p.label.is_type_one();
        eckardt += p.eckardt;
        list.push_back({{"label", p.label.str()},
                        {"type", p.label.is_type_one() ? "I" : "II"},
                        {"form", p.form.poly().str()},
                        {"lines", {p.lines[0].str(), p.lines[1].str(), p.lines[2].str()}},
                        {"eckardt", p.eckardt}});
    }
    return {{"count", planes.size()},
            {"typeI", type_one},
            {"typeII", static_cast<int>(planes.size()) - type_one},
            {"eckardtPlanes", eckardt},
            {"tritangents", list}};
}

template <ExactField K>
ojson forms_json(const std::array<Polynomial<K>, 3>& forms) {
    return {forms[0].str(), forms[1].str(), forms[2].str()};
}

template <ExactField K>
ojson cs_equation_json(const CSEquation<K>& eq) {
    ojson j = triederpaar_json(eq.triederpaar);
    j["lLabels"] = triple_json(eq.l_labels);
    j["mLabels"] = triple_json(eq.m_labels);
    j["l"] = {eq.l[0].poly().str(), eq.l[1].poly().str(), eq.l[2].poly().str()};
    j["m"] = {eq.m[0].poly().str(), eq.m[1].poly().str(), eq.m[2].poly().str()};
    j["kappa"] = eq.kappa.str();
    j["lambda"] = eq.lambda.str();
    j["kappaByEvaluation"] = eq.kappa_by_evaluation.str();
    j["cubic"] = eq.cubic.str();
    j["normalForm"] = {{"l", forms_json(eq.l_normal_form())}, {"m", forms_json(eq.m_normal_form())}};
    return j;
}

template <ExactField K>
ojson cone_json(const ConeAnalysis<K>& ca) {
    ojson bt = ojson::array();
    for (const auto& r : ca.bitangents) {
        ojson counts = ojson::array();
        for (int c : r.profile.count_by_multiplicity) counts.push_back(c);
        bt.push_back({{"line", r.line.str()},
                      {"plane", r.plane.poly().str()},
                      {"trace", scalars_json(r.trace)},
                      {"rootsByMultiplicity", counts},
                      {"gcdDegree", r.profile.gcd_degree},
                      {"gcdSquarefree", r.profile.gcd_squarefree},
                      {"contact", r.contact.str()}});
    }
    return {{"vertex", point_json(ca.vertex)},
            {"sectionPlane", ca.section_plane.poly().str()},
            {"coneSextic", ca.cone.str()},
            {"coneDegree", ca.cone.total_degree()},
            {"sectionCurve", ca.section.str()},
            {"sectionDegree", ca.section.total_degree()},
            {"distinctBitangents", ca.distinct_traces},
            {"bitangents", bt},
            {"pluecker",
             {{"tau", ca.pluecker.tau},
              {"delta", ca.pluecker.delta},
              {"nu", ca.pluecker.nu},
              {"mu", ca.pluecker.mu},
              {"relationHolds", ca.pluecker.satisfies_relation()},
              {"assumed", {"delta", "mu"}}}}};
}

ojson surface_json(const SurfaceModel& model);

/// "key.path: value" lines, one per leaf, in document order.
std::string render_text(const ojson& j);

} // namespace cubic27

#endif
