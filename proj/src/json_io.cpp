#include "cubic27/json_io.hpp"

namespace cubic27 {

ojson surface_json(const SurfaceModel& model) {
    ojson cubics = ojson::array();
    for (const auto& c : model.map_cubics) cubics.push_back(c.str());
    return {{"d", scalars_json(model.config.d)},
            {"mapCubics", cubics},
            {"F", model.F.str()},
            {"lines", lines_json(model.lines)}};
}

namespace {

void render(const ojson& j, const std::string& path, std::string& out) {
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) render(v, path.empty() ? k : path + "." + k, out);
    } else if (j.is_array()) {
        const bool flat = std::all_of(j.begin(), j.end(), [](const ojson& e) { return e.is_primitive(); });
        if (flat) {
            out += path + ":";
            for (const auto& e : j) out += " " + (e.is_string() ? e.get<std::string>() : e.dump());
            out += "\n";
            return;
        }
        for (std::size_t k = 0; k < j.size(); ++k) render(j[k], path + "[" + std::to_string(k) + "]", out);
    } else {
        out += path + ": " + (j.is_string() ? j.get<std::string>() : j.dump()) + "\n";
    }
}

} // namespace

std::string render_text(const ojson& j) {
    std::string out;
    render(j, "", out);
    return out;
}

} // namespace cubic27
