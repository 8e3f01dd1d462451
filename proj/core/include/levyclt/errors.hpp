#pragma once

#include <stdexcept>
#include <string>

namespace levyclt {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Configuration / input validation (CLI exit code 2).
struct ConfigError : Error { using Error::Error; };
struct EmptySample : ConfigError { using ConfigError::ConfigError; };
struct InvalidCutoff : ConfigError { using ConfigError::ConfigError; };
struct DimensionTooLarge : ConfigError { using ConfigError::ConfigError; };
struct NonDiagonalUnsupported : ConfigError { using ConfigError::ConfigError; };

// Numeric degeneracy (CLI exit code 3).
struct NumericError : Error { using Error::Error; };
struct QuadratureFailure : NumericError { using NumericError::NumericError; };
struct NotPSD : NumericError { using NumericError::NumericError; };
struct DegenerateScaling : NumericError { using NumericError::NumericError; };
struct NoValidKappa : NumericError { using NumericError::NumericError; };
struct IndeterminateMoment : NumericError { using NumericError::NumericError; };
struct InfiniteActivity : NumericError { using NumericError::NumericError; };
struct TableBuildFailure : NumericError { using NumericError::NumericError; };
struct DegenerateDirection : NumericError { using NumericError::NumericError; };
struct TailDivergence : NumericError { using NumericError::NumericError; };
struct InsufficientSignal : NumericError { using NumericError::NumericError; };
struct HorizonExhausted : NumericError { using NumericError::NumericError; };
struct SelectionFailure : NumericError { using NumericError::NumericError; };

// Filesystem (CLI exit code 4).
struct IoError : Error { using Error::Error; };

} // namespace levyclt
