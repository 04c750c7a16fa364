#pragma once

#include <stdexcept>
#include <string>

namespace irisdet {

// Base class for all toolkit errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Invalid inputs: degenerate landmarks, malformed files, out-of-range
// coordinates. The CLI maps these to exit code 2.
struct DataError : Error {
    using Error::Error;
};

// Model (de)serialization failures, split so callers can distinguish
// an unknown format version from a damaged stream from a model that
// parsed but violates its own invariants.
struct ModelError : Error {
    using Error::Error;
};
struct ModelVersionError : ModelError {
    using ModelError::ModelError;
};
struct ModelParseError : ModelError {
    using ModelError::ModelError;
};
struct ModelInvariantError : ModelError {
    using ModelError::ModelError;
};

} // namespace irisdet
