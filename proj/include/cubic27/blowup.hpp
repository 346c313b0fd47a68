#ifndef CUBIC27_BLOWUP_HPP
#define CUBIC27_BLOWUP_HPP

#include "cubic27/errors.hpp"
#include "cubic27/exact/polynomial.hpp"
#include "cubic27/exact/rational.hpp"
#include "cubic27/geom/projective.hpp"
#include "cubic27/surface.hpp"

#include <array>
#include <span>

namespace cubic27 {

/// Six points [1 : d_i : d_i^3] on the cuspidal cubic, in general position.
struct SixPointConfig {
    std::array<Rational, 6> d;
    std::array<std::array<Rational, 3>, 6> points;
};

/// The four cubics through the six points (the anticanonical map to P^3).
struct AnticanonicalMap {
    SixPointConfig config;
    std::array<MPoly, 4> cubics;
};

struct SurfaceModel {
    SixPointConfig config;
    std::array<MPoly, 4> map_cubics;
    MPoly F;
    LineSet<Rational> lines;
};

/// Validates the parameters: distinct, no conic through all six points, no
/// three collinear (checked in this order). Throws GenericityError.
SixPointConfig check_genericity(std::span<const Rational, 6> d);

std::array<MPoly, 4> cubic_system_basis(const SixPointConfig& cfg);

/// The quaternary cubic F with F(c0, c1, c2, c3) = 0, normalized.
MPoly implicitize(const std::array<MPoly, 4>& cubics);

/// Indices are 1-based as in the labels.
Line<Rational> line_F(const AnticanonicalMap& map, int i, int j);
Line<Rational> line_G(const AnticanonicalMap& map, int j);
Line<Rational> line_E(const AnticanonicalMap& map, int i);

/// Image [c0(q) : c1(q) : c2(q) : c3(q)] of a plane point.
ProjPoint<Rational> rational_surface_point(const AnticanonicalMap& map, std::span<const Rational, 3> q);

/// Image of the first plane point [1 : a : b] (small heights first) whose
/// image avoids all 27 lines.
ProjPoint<Rational> sample_point_off_lines(const SurfaceModel& model);

/// Full construction; certifies F o c = 0 and the line invariants.
SurfaceModel build_surface(std::span<const Rational, 6> d);

} // namespace cubic27

#endif
