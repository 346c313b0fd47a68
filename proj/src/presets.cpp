#include "cubic27/presets.hpp"

#include "cubic27/exact/parse.hpp"

#include "json.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>

namespace cubic27 {

namespace {

using json = nlohmann::json;

std::array<MPoly, 3> parse_three(const json& j) {
    if (!j.is_array() || j.size() != 3) throw std::invalid_argument("expected three linear forms");
    return {parse_polynomial(j[0].get<std::string>(), 4), parse_polynomial(j[1].get<std::string>(), 4),
            parse_polynomial(j[2].get<std::string>(), 4)};
}

/// Builds a P^3 line from two points in the five sum-zero coordinates.
Line<QSqrt5> line_from_five(const std::array<QSqrt5, 5>& p, const std::array<QSqrt5, 5>& q) {
    Matrix<QSqrt5> m(2, 4);
    for (int k = 0; k < 4; ++k) {
        m(0, k) = p[k];
        m(1, k) = q[k];
    }
    return Line<QSqrt5>(m);
}

} // namespace

std::filesystem::path data_directory() {
    if (const char* env = std::getenv("CUBIC27_DATA_DIR"); env && *env) return env;
    return CUBIC27_DATA_DIR;
}

std::filesystem::path preset_path(const std::string& name) { return data_directory() / "presets" / (name + ".json"); }

Preset load_preset_file(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw std::invalid_argument("cannot open preset file " + file.string());
    const json j = json::parse(in);
    const auto& v = j.at("cone").at("vertex");
    if (!v.is_array() || v.size() != 4) throw std::invalid_argument("preset vertex needs four coordinates");
    std::array<Rational, 4> a;
    for (int k = 0; k < 4; ++k) a[k] = Rational::parse(v[k].get<std::string>());
    const MPoly plane = parse_polynomial(j.at("cone").at("section_plane").get<std::string>(), 4);
    const auto& fx = j.at("cs_fixture");
    return {j.at("name").get<std::string>(),
            parse_polynomial(j.at("surface").get<std::string>(), 4),
            ProjPoint<Rational>(a),
            PlaneForm<Rational>::from_poly(plane),
            parse_three(fx.at("l")),
            parse_three(fx.at("m")),
            Rational::parse(fx.at("lambda").get<std::string>())};
}

Preset load_preset(const std::string& name) { return load_preset_file(preset_path(name)); }

std::vector<Line<QSqrt5>> clebsch_lines() {
    std::map<std::string, Line<QSqrt5>> found;
    std::array<int, 5> idx{0, 1, 2, 3, 4};
    // Rational lines: e_a - e_b and e_c - e_d span x_a + x_b = x_c + x_d = 0.
    do {
        if (!(idx[0] < idx[1] && idx[2] < idx[3] && idx[0] < idx[2])) continue;
        std::array<QSqrt5, 5> p{}, q{};
        p[idx[0]] = 1;
        p[idx[1]] = -1;
        q[idx[2]] = 1;
        q[idx[3]] = -1;
        const auto l = line_from_five(p, q);
        found.emplace(l.key(), l);
    } while (std::next_permutation(idx.begin(), idx.end()));
    // Irrational lines: orbit of the line through g1, g2 with phi = (sqrt5 - 1)/2.
    for (int sign : {1, -1}) {
        const QSqrt5 phi(Rational(-1, 2), Rational(sign, 2));
        const std::array<QSqrt5, 5> g1{1, 0, -1, phi, -phi}, g2{0, 1, phi, -1, -phi};
        std::array<int, 5> perm{0, 1, 2, 3, 4};
        do {
            std::array<QSqrt5, 5> p, q;
            for (int k = 0; k < 5; ++k) {
                p[k] = g1[perm[k]];
                q[k] = g2[perm[k]];
            }
            const auto l = line_from_five(p, q);
            found.emplace(l.key(), l);
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    std::vector<Line<QSqrt5>> out;
    for (const auto& [key, l] : found) out.push_back(l);
    if (out.size() != kLineCount) throw CertificationError("Clebsch construction gave " + std::to_string(out.size()) + " lines");
    return out;
}

LineSet<QSqrt5> clebsch_line_set(const MPoly& surface) {
    LineSet<QSqrt5> set = label_lines(clebsch_lines());
    certify_lines(set, promote<QSqrt5>(surface));
    return set;
}

} // namespace cubic27
