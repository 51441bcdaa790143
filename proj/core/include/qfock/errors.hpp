#ifndef QFOCK_ERRORS_HPP
#define QFOCK_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qfock {

/// A 2x2 complex matrix presented where a quaternion image was required.
class MalformedMatrix : public std::runtime_error {
public:
    explicit MalformedMatrix(const std::string& what) : std::runtime_error(what) {}
};

/// Operands whose truncation orders differ.
class DimensionMismatch : public std::runtime_error {
public:
    explicit DimensionMismatch(const std::string& what) : std::runtime_error(what) {}
};

/// Operands tagged with different fixed bases.
class BasisMismatch : public std::runtime_error {
public:
    explicit BasisMismatch(const std::string& what) : std::runtime_error(what) {}
};

/// A 2Nx2N complex matrix whose blocks do not form quaternion images.
class NotInImage : public std::runtime_error {
public:
    explicit NotInImage(const std::string& what) : std::runtime_error(what) {}
};

/// The requested truncation order cannot hold the state to tolerance.
class TruncationTooSmall : public std::runtime_error {
public:
    explicit TruncationTooSmall(const std::string& what) : std::runtime_error(what) {}
};

/// An axis argument that is not a unit purely imaginary quaternion.
class BadAxis : public std::runtime_error {
public:
    explicit BadAxis(const std::string& what) : std::runtime_error(what) {}
};

/// Mandel statistic requested for a state with zero mean occupation.
class MeanZero : public std::runtime_error {
public:
    explicit MeanZero(const std::string& what) : std::runtime_error(what) {}
};

/// Operator pair whose commutator is not axis times a self-adjoint operator.
class NotCanonicalPair : public std::runtime_error {
public:
    explicit NotCanonicalPair(const std::string& what) : std::runtime_error(what) {}
};

/// Parameters expected on one commutative slice lie on different slices.
class SliceMismatch : public std::runtime_error {
public:
    explicit SliceMismatch(const std::string& what) : std::runtime_error(what) {}
};

/// Unusable quadrature or sweep grid specification.
class BadGrid : public std::runtime_error {
public:
    explicit BadGrid(const std::string& what) : std::runtime_error(what) {}
};

/// Text that does not parse as a quaternion literal; column is 1-based.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t column)
        : std::runtime_error(what), column_(column) {}
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t column_;
};

}  // namespace qfock

#endif
