#pragma once

#include <stdexcept>

namespace labelsem {

// Rejected argument values: dimension mismatches, out-of-range inputs.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Rejected experiment configuration; the message names the offending field.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Exhaustive enumeration refused: problem size exceeds the configured cap.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Operation defined only for structurally matching concepts.
class UnsupportedStructureError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace labelsem
