#ifndef CUBIC27_TRIEDERPAAR_HPP
#define CUBIC27_TRIEDERPAAR_HPP

#include "cubic27/errors.hpp"
#include "cubic27/exact/matrix.hpp"
#include "cubic27/exact/polynomial.hpp"
#include "cubic27/geom/projective.hpp"
#include "cubic27/labels.hpp"
#include "cubic27/surface.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace cubic27 {

using LineGrid = std::array<std::array<LineLabel, 3>, 3>;
using PlaneTriple = std::array<TritangentLabel, 3>;

/// Two triples of tritangent planes cutting out the same nine lines: row r
/// of the grid lies in rows[r], column c in cols[c].
class Triederpaar {
public:
    /// Unordered pair of sorted index triples; transpose invariant.
    using Key = std::pair<std::array<std::size_t, 3>, std::array<std::size_t, 3>>;

    /// Derives the row and column planes from a 3x3 line grid; throws if a
    /// row or column is not a tritangent triple or lines repeat.
    static Triederpaar from_grid(const LineGrid& grid, int pattern);

    int pattern() const { return pattern_; }
    const LineGrid& grid() const { return grid_; }
    const PlaneTriple& rows() const { return rows_; }
    const PlaneTriple& cols() const { return cols_; }
    Key key() const;
    std::string str() const;

private:
    Triederpaar(int pattern, LineGrid grid, PlaneTriple rows, PlaneTriple cols)
        : pattern_(pattern), grid_(grid), rows_(rows), cols_(cols) {}
    int pattern_;
    LineGrid grid_;
    PlaneTriple rows_;
    PlaneTriple cols_;
};

std::array<std::size_t, 3> sorted_indices(const PlaneTriple& t);

/// All 120, from the three grid patterns over every index assignment,
/// deduplicated by key and sorted by key. Throws unless the pattern counts
/// are 20, 90 and 10.
std::vector<Triederpaar> enumerate_triederpaare();

std::array<int, 3> pattern_counts(const std::vector<Triederpaar>& tps);

/// Tritangent planes sharing no line with the given one (32 of them).
std::vector<TritangentLabel> valid_partners(const TritangentLabel& plane);

/// The Triederpaar whose row triple contains both planes, which must share
/// no line. Rows are ordered (first, second, completion).
Triederpaar complete_pair_to_triederpaar(const TritangentLabel& first, const TritangentLabel& second);

/// Identity l1 l2 l3 - kappa m1 m2 m3 = lambda F for one Triederpaar.
template <ExactField K>
struct CSEquation {
    Triederpaar triederpaar;
    PlaneTriple l_labels;
    PlaneTriple m_labels;
    std::array<PlaneForm<K>, 3> l;
    std::array<PlaneForm<K>, 3> m;
    K kappa;
    K lambda;
    Polynomial<K> cubic;
    /// l1 l2 l3 / m1 m2 m3 at a surface point off the lines.
    K kappa_by_evaluation;

    /// Forms with kappa absorbed into m1, so l1 l2 l3 - m1 m2 m3 = lambda F.
    std::array<Polynomial<K>, 3> l_normal_form() const { return {l[0].poly(), l[1].poly(), l[2].poly()}; }
    std::array<Polynomial<K>, 3> m_normal_form() const { return {m[0].poly() * kappa, m[1].poly(), m[2].poly()}; }
};

template <ExactField K>
Polynomial<K> product_of_planes(const std::array<PlaneForm<K>, 3>& planes) {
    return planes[0].poly() * planes[1].poly() * planes[2].poly();
}

/// Solves a P_l - b P_m - c F = 0 over the 20 cubic monomials for the
/// Triederpaar's planes, normalizes a = 1 and certifies the result by
/// expansion and by evaluation at the witness point.
template <ExactField K>
CSEquation<K> assemble_cs_equation(const std::vector<TritangentPlane<K>>& planes, const Polynomial<K>& f,
                                   const Triederpaar& tp, const ProjPoint<K>& witness) {
    const std::string name = tp.str();
    PlaneTriple first = tp.rows(), second = tp.cols();
    std::sort(first.begin(), first.end());
    std::sort(second.begin(), second.end());
    if (sorted_indices(second) < sorted_indices(first)) std::swap(first, second);
    const auto forms = [&](const PlaneTriple& t) {
        return std::array<PlaneForm<K>, 3>{planes.at(t[0].index()).form, planes.at(t[1].index()).form,
                                           planes.at(t[2].index()).form};
    };
    const auto l = forms(first), m = forms(second);
    const Polynomial<K> pl = product_of_planes(l), pm = product_of_planes(m);

    const auto monos = monomials_of_degree(4, 3);
    Matrix<K> sys(monos.size(), 3);
    for (std::size_t r = 0; r < monos.size(); ++r) {
        sys(r, 0) = pl.coefficient(monos[r]);
        sys(r, 1) = -pm.coefficient(monos[r]);
        sys(r, 2) = -f.coefficient(monos[r]);
    }
    const auto ker = kernel_basis(sys);
    if (ker.size() != 1 || ker[0][0].is_zero())
        throw CertificationError("Triederpaar " + name + ": no unique Cayley-Salmon solution");
    const K inv = ker[0][0].inverse();
    const K kappa = ker[0][1] * inv, lambda = ker[0][2] * inv;
    if (kappa.is_zero() || lambda.is_zero())
        throw CertificationError("Triederpaar " + name + ": degenerate Cayley-Salmon scalars");
    Polynomial<K> cubic = pl - pm * kappa;
    if (!(cubic == f * lambda)) throw CertificationError("Triederpaar " + name + ": identity fails on expansion");

    const K lw = pl.evaluate(witness.coords()), mw = pm.evaluate(witness.coords());
    if (lw.is_zero() || mw.is_zero())
        throw CertificationError("Triederpaar " + name + ": witness point lies on one of its planes");
    const K by_eval = lw / mw;
    if (!(by_eval == kappa)) throw CertificationError("Triederpaar " + name + ": kappa evaluation mismatch");
    return {tp, first, second, l, m, kappa, lambda, std::move(cubic), by_eval};
}

/// lambda with l1 l2 l3 - m1 m2 m3 = lambda f, if any.
template <ExactField K>
std::optional<K> verify_cs_identity(const Polynomial<K>& f, const std::array<Polynomial<K>, 3>& l,
                                    const std::array<Polynomial<K>, 3>& m) {
    const Polynomial<K> diff = l[0] * l[1] * l[2] - m[0] * m[1] * m[2];
    if (diff.is_zero() || f.is_zero()) return std::nullopt;
    return equal_up_to_scalar(diff, f);
}

} // namespace cubic27

#endif
