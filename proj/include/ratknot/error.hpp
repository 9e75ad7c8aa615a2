#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ratknot {

/// Base for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A mathematical precondition of an operation was violated.
class PreconditionError : public Error {
public:
    using Error::Error;
};

class InfinityNotExpandable : public PreconditionError {
public:
    InfinityNotExpandable() : PreconditionError("1/0 has no continued fraction expansion") {}
};

class InfinityInput : public PreconditionError {
public:
    explicit InfinityInput(const std::string& op)
        : PreconditionError(op + ": input must be finite, got inf") {}
};

class ZeroNumerator : public PreconditionError {
public:
    ZeroNumerator()
        : PreconditionError("fraction with zero numerator has no reduced form with |p| > |q|") {}
};

class NotCanonical : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

class NotTwoComponent : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

class InvalidContinuedFraction : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

class RangeError : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

/// Checked 64-bit arithmetic left the representable range.
class OverflowError : public Error {
public:
    OverflowError() : Error("integer overflow") {}
};

class ParseError : public Error {
public:
    ParseError(std::size_t offset, const std::string& expected)
        : Error("parse error at byte " + std::to_string(offset) + ": expected " + expected),
          offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

}  // namespace ratknot
