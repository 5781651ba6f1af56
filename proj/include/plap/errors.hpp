#pragma once

#include <stdexcept>
#include <string>

namespace plap {

/// Base for all library errors. CLI maps these to exit code 1,
/// InternalError to exit code 2.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : Error {
    using Error::Error;
};

struct ValidationError : Error {
    using Error::Error;
};

struct MapError : Error {
    using Error::Error;
};

struct NotWeightPreservingError : Error {
    using Error::Error;
};

struct DimensionError : Error {
    using Error::Error;
};

struct SingularMatrixError : Error {
    using Error::Error;
};

/// A cross-check that should be impossible to fail has failed.
struct InternalError : Error {
    using Error::Error;
};

}  // namespace plap
