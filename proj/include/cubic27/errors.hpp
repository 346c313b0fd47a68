#ifndef CUBIC27_ERRORS_HPP
#define CUBIC27_ERRORS_HPP

#include <array>
#include <stdexcept>
#include <string>

namespace cubic27 {

/// An input violates a geometric precondition (skew lines intersected,
/// point off the surface, ...). In this pipeline it always signals a logic
/// or configuration error.
class GeometryError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A computed object failed its exact certificate (a line not on the
/// surface, an identity that does not expand to zero, a wrong count).
class CertificationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The six parameters do not give points in general position.
class GenericityError : public std::runtime_error {
public:
    enum class Cause { DuplicateParameter, ConicThroughSix, CollinearTriple };

    GenericityError(Cause cause, const std::string& what, std::array<int, 3> indices = {0, 0, 0})
        : std::runtime_error(what), cause_(cause), indices_(indices) {}

    Cause cause() const { return cause_; }
    /// 1-based indices of the offending points (two for duplicates, three
    /// for a collinear triple, unused otherwise).
    const std::array<int, 3>& indices() const { return indices_; }

private:
    Cause cause_;
    std::array<int, 3> indices_;
};

} // namespace cubic27

#endif
