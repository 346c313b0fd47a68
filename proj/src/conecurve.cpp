#include "cubic27/conecurve.hpp"

namespace cubic27 {

std::optional<std::string> pluecker_rejection(const PlueckerData& p) {
    if (!p.satisfies_relation()) return "Pluecker relation 2tau - 2delta = (mu - nu)(mu + nu - 9) fails";
    if (p.nu != 6) return "section curve has degree " + std::to_string(p.nu) + " instead of 6";
    if (p.tau != 27) return "found " + std::to_string(p.tau) + " distinct bitangents instead of 27";
    return std::nullopt;
}

PlueckerData pluecker_certificate(long distinct_bitangents, long section_degree) {
    // delta = 0 and mu = 12 are the values for the contour curve of a smooth
    // cubic seen from a general point; they are inputs, not computed.
    const PlueckerData p{distinct_bitangents, 0, section_degree, 12};
    if (const auto why = pluecker_rejection(p)) throw CertificationError(*why);
    return p;
}

MPoly tangent_cone(const MPoly& f, const ProjPoint<Rational>& vertex) {
    if (f.nvars() != 4 || f.total_degree() != 3) throw GeometryError("tangent cone needs a quaternary cubic");
    if (f.evaluate(vertex.coords()).is_zero()) throw GeometryError("cone vertex lies on the surface");
    const std::span<const Rational> a(vertex.coords());
    const MPoly g1 = f.directional_derivative(a);
    const MPoly d2 = g1.directional_derivative(a);
    const MPoly g2 = d2 * Rational(1, 2);
    const MPoly g3 = d2.directional_derivative(a) * Rational(1, 6);
    const TPolynomial<Rational> g{f, g1, g2, g3};
    const TPolynomial<Rational> dg{g1, g2 * Rational(2), g3 * Rational(3)};
    const MPoly res = resultant_in_t(g, dg);
    if (res.is_zero()) throw CertificationError("tangent cone resultant vanishes identically");
    if (!res.is_homogeneous() || res.total_degree() != 6)
        throw CertificationError("tangent cone has degree " + std::to_string(res.total_degree()));
    return res.normalized();
}

MPoly plane_section(const MPoly& cone, const PlaneForm<Rational>& plane, const ProjPoint<Rational>& vertex) {
    if (plane.contains(vertex)) throw GeometryError("section plane passes through the cone vertex");
    const MPoly c = PlaneChart<Rational>(plane).restrict_poly(cone);
    if (c.total_degree() != cone.total_degree() || !c.is_homogeneous())
        throw CertificationError("plane section lost degree");
    return c.normalized();
}

} // namespace cubic27
