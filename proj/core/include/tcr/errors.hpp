#pragma once

#include <stdexcept>
#include <string>

namespace tcr {

/// Base class for everything thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Invalid parameters, scenario structure, or configuration files.
/// The message names the offending field where one exists.
struct ConfigError : Error {
    using Error::Error;
};

/// Runtime evaluation failures: division guards, enumeration bounds,
/// non-positive valuations produced by a model.
struct ComputeError : Error {
    using Error::Error;
};

}  // namespace tcr
