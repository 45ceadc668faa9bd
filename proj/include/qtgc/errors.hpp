#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace qtgc {

// Base class for all library faults. Validation *failures* are not faults:
// validators return reports. Exceptions are reserved for malformed input,
// shape errors and broken preconditions.
class Error : public std::runtime_error {
  public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class ParseError : public Error {
  public:
    ParseError(std::size_t offset, std::string expected, std::string found)
        : Error("parse error at byte " + std::to_string(offset) + ": expected " + expected +
                ", found " + (found.empty() ? "end of input" : "'" + found + "'")),
          offset(offset), expected(std::move(expected)), found(std::move(found)) {}

    std::size_t offset;
    std::string expected;
    std::string found;
};

class FieldMismatch : public Error {
  public:
    explicit FieldMismatch(const std::string& msg) : Error("field mismatch: " + msg) {}
};

class DivisionByZero : public Error {
  public:
    DivisionByZero() : Error("division by zero") {}
};

class DimensionMismatch : public Error {
  public:
    explicit DimensionMismatch(const std::string& msg) : Error("dimension mismatch: " + msg) {}
};

class GradingMismatch : public Error {
  public:
    explicit GradingMismatch(const std::string& msg) : Error("grading mismatch: " + msg) {}
};

class IndexOutOfRange : public Error {
  public:
    explicit IndexOutOfRange(const std::string& msg) : Error("index out of range: " + msg) {}
};

// Thrown by matrix inversion; carries the rank reached before breakdown.
class Singular : public Error {
  public:
    explicit Singular(long rank)
        : Error("singular matrix (rank " + std::to_string(rank) + ")"), rank(rank) {}
    long rank;
};

class ShapeError : public Error {
  public:
    ShapeError(std::string block, std::string index, std::string expected_shape,
               std::string got_shape)
        : Error("shape error in block '" + block + "' at " + index + ": expected " +
                expected_shape + ", got " + got_shape),
          block(std::move(block)), index(std::move(index)) {}

    std::string block;
    std::string index;
};

class MissingComponent : public Error {
  public:
    explicit MissingComponent(const std::string& which)
        : Error("missing component: " + which) {}
};

// The composed braiding failed to be a two-sided inverse; carries the
// residual (difference from the identity) in printed form.
class BraidingNotInvertible : public Error {
  public:
    explicit BraidingNotInvertible(std::string residual)
        : Error("braiding is not invertible"), residual(std::move(residual)) {}
    std::string residual;
};

class NotACocycle : public Error {
  public:
    explicit NotACocycle(const std::string& quadruple)
        : Error("cocycle condition fails at " + quadruple) {}
};

class NotNormalized : public Error {
  public:
    explicit NotNormalized(const std::string& pair)
        : Error("cocycle not normalized at " + pair) {}
};

class NotConjInvariant : public Error {
  public:
    explicit NotConjInvariant(const std::string& triple)
        : Error("cocycle not conjugation-invariant at " + triple) {}
};

class AntipodeSolveFailed : public Error {
  public:
    explicit AntipodeSolveFailed(const std::string& residuals)
        : Error("no diagonal antipode data satisfies the axioms: " + residuals) {}
};

// A builder produced an instance that fails its own validators.
class CheckFailed : public Error {
  public:
    explicit CheckFailed(const std::string& what_failed)
        : Error("internal consistency check failed: " + what_failed) {}
};

} // namespace qtgc
