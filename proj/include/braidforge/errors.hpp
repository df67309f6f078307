#pragma once

#include <stdexcept>
#include <string>

namespace braidforge {

/// Base class for all errors raised by this library.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct DivisionByZeroError : Error {
    using Error::Error;
};

struct DimensionMismatchError : Error {
    using Error::Error;
};

struct SingularMatrixError : Error {
    using Error::Error;
};

/// Assembled base-change matrix is not invertible.
struct DegenerateBaseChangeError : Error {
    using Error::Error;
};

/// Parameter value known to produce a reducible representation.
struct ReducibleParameterError : Error {
    using Error::Error;
};

/// Labeled quiver fails the strong-connectivity simplicity criterion.
struct SimplicityError : Error {
    using Error::Error;
};

/// Summand collection has a negative loop or arrow count.
struct NegativeCountError : Error {
    using Error::Error;
};

/// The product of the lifted generators does not act as a scalar.
struct NonScalarCentralError : Error {
    using Error::Error;
};

/// Malformed family specification (sizes, duplicate parameters, zero mu, ...).
struct InvalidSpecError : Error {
    using Error::Error;
};

/// Malformed JSON or scalar text.
struct ParseError : Error {
    using Error::Error;
};

}  // namespace braidforge
