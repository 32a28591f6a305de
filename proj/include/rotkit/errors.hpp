#ifndef ROTKIT_ERRORS_HPP
#define ROTKIT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace rotkit {

/// Base class of all errors thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Incompatible matrix / measure shapes.
class DimensionError : public Error {
public:
    using Error::Error;
};

/// Malformed input file; the message carries the offending row when known.
class ParseError : public Error {
public:
    using Error::Error;
};

/// Invalid configuration or input value (non-positive epsilon, negative
/// weights, non-PSD covariance, non-finite costs, ...).
class ParameterError : public Error {
public:
    using Error::Error;
};

/// An operation was invoked in a mode it does not support.
class UsageError : public Error {
public:
    using Error::Error;
};

/// Numerical failure: NaN objectives, decomposition breakdown, or a metric
/// that is undefined on the given data.
class NumericError : public Error {
public:
    using Error::Error;
};

/// Evaluation outside the mathematical domain, e.g. transport mass placed
/// where the product measure has none.
class DomainError : public Error {
public:
    using Error::Error;
};

} // namespace rotkit

#endif
