#pragma once

#include <stdexcept>
#include <string>

namespace cdpauth {

// Invalid argument values, out-of-range parameters, shape mismatches.
class ParameterError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Constant or otherwise degenerate numeric input for which the requested
// statistic is undefined.
class DegenerateInputError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Dataset ingestion failure; the message names the offending entry.
class IngestionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A required piece of configuration (e.g. an enrollment set) is missing.
class ConfigurationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Training diverged or could not start.
class TrainingError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Corrupt or version-mismatched serialized artifact.
class SerializationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Filesystem-level failure; the message carries the path.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace cdpauth
