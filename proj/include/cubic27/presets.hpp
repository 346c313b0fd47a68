#ifndef CUBIC27_PRESETS_HPP
#define CUBIC27_PRESETS_HPP

#include "cubic27/exact/polynomial.hpp"
#include "cubic27/exact/quadratic.hpp"
#include "cubic27/geom/projective.hpp"
#include "cubic27/surface.hpp"

#include <array>
#include <filesystem>
#include <string>
#include <vector>

namespace cubic27 {

/// A named surface shipped as a data file: the cubic, a cone vertex and
/// section plane, and one Cayley-Salmon identity to check by expansion.
struct Preset {
    std::string name;
    MPoly surface;
    ProjPoint<Rational> vertex;
    PlaneForm<Rational> section_plane;
    std::array<MPoly, 3> cs_l;
    std::array<MPoly, 3> cs_m;
    Rational cs_lambda;
};

/// Directory holding presets/; CUBIC27_DATA_DIR in the environment wins
/// over the compiled-in location.
std::filesystem::path data_directory();
std::filesystem::path preset_path(const std::string& name);

Preset load_preset_file(const std::filesystem::path& file);
Preset load_preset(const std::string& name);

/// The 27 lines of -(w+x+y+z)^3 + w^3 + x^3 + y^3 + z^3. In the five
/// coordinates (x, y, z, w, -(x+y+z+w)) the surface is the sum of five
/// cubes; 15 lines are x_a + x_b = x_c + x_d = x_e = 0 and the other 12 form
/// the orbit of one line over Q(sqrt5) under coordinate permutations and
/// conjugation. Returned unlabeled, sorted by canonical key.
std::vector<Line<QSqrt5>> clebsch_lines();

/// Labeled and certified Clebsch lines on the given surface.
LineSet<QSqrt5> clebsch_line_set(const MPoly& surface);

} // namespace cubic27

#endif
