#pragma once

#include <stdexcept>
#include <string>

namespace qms {

/// Base class for all qms errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Inverting zero (scalar) or taking q^{-1} of the zero quaternion.
struct DivisionByZero : Error {
    explicit DivisionByZero(const std::string& what = "division by zero") : Error(what) {}
};

/// Operand shapes are incompatible.
struct DimensionError : Error {
    explicit DimensionError(const std::string& what) : Error(what) {}
};

/// Square matrix has no inverse.
struct SingularError : Error {
    explicit SingularError(const std::string& what = "matrix is singular") : Error(what) {}
};

/// Block index outside the partition grid.
struct IndexError : Error {
    explicit IndexError(const std::string& what) : Error(what) {}
};

/// Ill-formed block pattern (inconsistent inferred sizes, empty row/column).
struct PatternError : Error {
    explicit PatternError(const std::string& what) : Error(what) {}
};

/// An internal invariant failed; signals a bug, not a user error.
struct InternalInconsistency : Error {
    explicit InternalInconsistency(const std::string& what) : Error(what) {}
};

/// The matrix equation has no solution.
struct InconsistentSystem : Error {
    explicit InconsistentSystem(const std::string& what) : Error(what) {}
};

/// A free-parameter assignment does not match the family's slot manifest.
struct ParameterError : Error {
    explicit ParameterError(const std::string& what) : Error(what) {}
};

/// Malformed input file or value.
struct FormatError : Error {
    explicit FormatError(const std::string& what) : Error(what) {}
};

}  // namespace qms
