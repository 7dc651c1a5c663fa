#pragma once

#include <stdexcept>
#include <string>

namespace rainbow {

// Caller handed an operation arguments outside its contract (bad ids, malformed
// input, impossible parameters).
struct InputError : std::invalid_argument {
    explicit InputError(const std::string & message) : std::invalid_argument(message) {}
};

// Exact 64-bit integer arithmetic would overflow; we never wrap silently.
struct OverflowError : std::overflow_error {
    explicit OverflowError(const std::string & message) : std::overflow_error(message) {}
};

// A constructive procedure was invoked on a family that fails the hypotheses it
// needs. The message names the failing member or inequality.
struct PreconditionError : std::runtime_error {
    explicit PreconditionError(const std::string & message) : std::runtime_error(message) {}
};

// A step the surrounding argument guarantees cannot fail did fail. This always
// indicates a bug in this library, never bad user input.
struct ContradictionError : std::logic_error {
    explicit ContradictionError(const std::string & message) : std::logic_error(message) {}
};

// An exhaustive enumeration would exceed its configured cap.
struct SizeError : std::runtime_error {
    explicit SizeError(const std::string & message) : std::runtime_error(message) {}
};

} // namespace rainbow
