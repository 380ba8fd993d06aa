#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qsh {

/// Base class of every error thrown by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero") {}
};

struct FieldMismatch : Error {
    FieldMismatch() : Error("scalars belong to different ground fields") {}
};

struct ParseError : Error {
    std::size_t position;
    ParseError(const std::string& what, std::size_t pos)
        : Error(what + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

struct DimensionMismatch : Error {
    DimensionMismatch(const std::string& what = "dimension mismatch") : Error(what) {}
};

/// Raised whenever an exact result would exceed the truncation cap.
/// Nothing in the library ever drops terms silently.
struct TruncationOverflow : Error {
    TruncationOverflow(const std::string& what = "result exceeds truncation cap") : Error(what) {}
};

struct GradeZeroInput : Error {
    GradeZeroInput(const std::string& what = "operand has a grade-0 component") : Error(what) {}
};

struct IndexOutOfRange : Error {
    IndexOutOfRange(const std::string& what = "index out of range") : Error(what) {}
};

struct UnverifiedBraiding : Error {
    UnverifiedBraiding() : Error("braiding has not passed the braid-relation check") {}
};

struct SingularMatrix : Error {
    SingularMatrix() : Error("braiding matrix is singular") {}
};

struct ZeroDiagonalEntry : Error {
    ZeroDiagonalEntry() : Error("diagonal braiding table contains a zero entry") {}
};

struct NoUnit : Error {
    NoUnit() : Error("algebra has no unit") {}
};

struct IncompatibleAlgebra : Error {
    IncompatibleAlgebra(const std::string& what = "algebra lacks a required verified property")
        : Error(what) {}
};

struct IncompatibleMorphism : Error {
    IncompatibleMorphism(const std::string& what = "map is not equivariant for the braidings")
        : Error(what) {}
};

struct NonSymmetricBraiding : Error {
    NonSymmetricBraiding() : Error("construction requires a symmetric braiding") {}
};

struct KernelViolation : Error {
    KernelViolation(const std::string& what) : Error(what) {}
};

} // namespace qsh
