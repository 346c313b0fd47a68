#ifndef CUBIC27_EMBED45_HPP
#define CUBIC27_EMBED45_HPP

#include "cubic27/errors.hpp"
#include "cubic27/exact/matrix.hpp"
#include "cubic27/surface.hpp"
#include "cubic27/triederpaar.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

namespace cubic27 {

/// Rows are the 45 tritangent forms in coordinate order; certified rank 4.
template <ExactField K>
Matrix<K> phi_star_matrix(const std::vector<TritangentPlane<K>>& planes) {
    if (planes.size() != kTritangentCount) throw CertificationError("phi* needs 45 tritangent planes");
    Matrix<K> m(kTritangentCount, 4);
    for (std::size_t r = 0; r < kTritangentCount; ++r) {
        if (planes[r].label.index() != r) throw CertificationError("tritangent planes out of coordinate order");
        for (int k = 0; k < 4; ++k) m(r, k) = planes[r].form[k];
    }
    if (rank(m) != 4) throw CertificationError("phi* does not have rank 4");
    return m;
}

/// Linear relations among the 45 coordinates: the left kernel of phi*.
template <ExactField K>
std::vector<std::vector<K>> relation_space_basis(const Matrix<K>& phi_star) {
    return kernel_basis(phi_star.transposed());
}

/// For a candidate relation sum_r c_r x_r, a rescaling x_r -> s_r x_r (all
/// s_r nonzero, s_r = 1 where c_r = 0) under which the relation holds on
/// the forms of phi*, if one exists among the kernel basis vectors and
/// their sum.
template <ExactField K>
std::optional<std::vector<K>> scaling_for_relation(const Matrix<K>& phi_star, const std::vector<K>& coeffs) {
    if (coeffs.size() != phi_star.rows()) throw std::invalid_argument("relation needs one coefficient per coordinate");
    std::vector<std::size_t> support;
    for (std::size_t r = 0; r < coeffs.size(); ++r)
        if (!coeffs[r].is_zero()) support.push_back(r);
    if (support.empty()) return std::nullopt;
    Matrix<K> sys(phi_star.cols(), support.size());
    for (std::size_t c = 0; c < support.size(); ++c)
        for (std::size_t k = 0; k < phi_star.cols(); ++k) sys(k, c) = coeffs[support[c]] * phi_star(support[c], k);
    auto ker = kernel_basis(sys);
    if (ker.empty()) return std::nullopt;
    std::vector<K> sum(support.size(), K(0));
    for (const auto& v : ker)
        for (std::size_t c = 0; c < v.size(); ++c) sum[c] += v[c];
    ker.push_back(sum);
    for (const auto& v : ker) {
        if (std::any_of(v.begin(), v.end(), [](const K& x) { return x.is_zero(); })) continue;
        std::vector<K> s(coeffs.size(), K(1));
        for (std::size_t c = 0; c < support.size(); ++c) s[support[c]] = v[c];
        return s;
    }
    return std::nullopt;
}

/// x_{rows} - x_{cols} for one Triederpaar.
struct BinomialConjugate {
    PlaneTriple plus;
    PlaneTriple minus;
    Triederpaar::Key key;
    std::string str() const;
};

/// One binomial per Triederpaar, throws unless there are 120.
std::vector<BinomialConjugate> binomial_conjugates(const std::vector<Triederpaar>& tps);

/// Pullback of a binomial along coordinate images, reconciled with the
/// Cayley-Salmon equation of the same Triederpaar: P+ - kappa' P- = lambda' F.
template <ExactField K>
struct PullbackCertificate {
    Polynomial<K> pullback;
    K plus_scale;   ///< P+ = plus_scale * (matching product of CS forms)
    K minus_scale;  ///< P- = minus_scale * (the other product)
    K kappa;
    K lambda;
};

template <ExactField K>
PullbackCertificate<K> pullback_binomial(const std::vector<Polynomial<K>>& images, const BinomialConjugate& b,
                                         const CSEquation<K>& eq, const Polynomial<K>& f) {
    const std::string name = b.str();
    if (images.size() != kTritangentCount) throw std::invalid_argument("pullback needs 45 coordinate images");
    if (!(eq.triederpaar.key() == b.key)) throw CertificationError("binomial " + name + " paired with wrong equation");
    const auto prod = [&](const PlaneTriple& t) {
        return images[t[0].index()] * images[t[1].index()] * images[t[2].index()];
    };
    const Polynomial<K> pp = prod(b.plus), pm = prod(b.minus);
    const Polynomial<K> pl = product_of_planes(eq.l), pmm = product_of_planes(eq.m);
    const bool plus_is_l = sorted_indices(b.plus) == sorted_indices(eq.l_labels);
    const auto alpha = equal_up_to_scalar(pp, plus_is_l ? pl : pmm);
    const auto beta = equal_up_to_scalar(pm, plus_is_l ? pmm : pl);
    if (!alpha || !beta || alpha->is_zero() || beta->is_zero())
        throw CertificationError("binomial " + name + ": monomial pullbacks not proportional to the CS products");
    // l - kappa m = lambda F. With P+ = a l, P- = b m: P+ - (a kappa / b) P- = a lambda F.
    // With P+ = a m, P- = b l: P+ - (a / (b kappa)) P- = -(a lambda / kappa) F.
    const K kappa = plus_is_l ? *alpha * eq.kappa / *beta : *alpha / (*beta * eq.kappa);
    const K lambda = plus_is_l ? *alpha * eq.lambda : -(*alpha * eq.lambda / eq.kappa);
    if (!(pp - pm * kappa == f * lambda)) throw CertificationError("binomial " + name + ": reconciled identity fails");
    return {pp - pm, *alpha, *beta, kappa, lambda};
}

/// Determinants of all 15 four-element subsets of a Triederpaar's six
/// planes; any four of them have empty common intersection, so none vanish.
template <ExactField K>
std::vector<std::pair<std::array<std::size_t, 4>, K>> four_plane_determinants(const Matrix<K>& phi_star,
                                                                              const Triederpaar& tp) {
    std::array<std::size_t, 6> six{};
    for (std::size_t k = 0; k < 3; ++k) {
        six[k] = tp.rows()[k].index();
        six[3 + k] = tp.cols()[k].index();
    }
    std::vector<std::pair<std::array<std::size_t, 4>, K>> out;
    for (std::size_t skip0 = 0; skip0 < 6; ++skip0)
        for (std::size_t skip1 = skip0 + 1; skip1 < 6; ++skip1) {
            std::array<std::size_t, 4> idx{};
            std::size_t n = 0;
            for (std::size_t k = 0; k < 6; ++k)
                if (k != skip0 && k != skip1) idx[n++] = six[k];
            Matrix<K> m(4, 4);
            for (int a = 0; a < 4; ++a)
                for (int k = 0; k < 4; ++k) m(a, k) = phi_star(idx[a], k);
            out.emplace_back(idx, determinant(m));
        }
    return out;
}

} // namespace cubic27

#endif
