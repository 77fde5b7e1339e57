#pragma once

#include <stdexcept>
#include <string>

namespace coverkit {

enum class ErrorCode {
    DegenerateRay,
    InvalidPolygon,
    EmptyInput,
    InvalidCover,
    InvalidRing,
    InvalidHole,
    InvalidArgument,
    EmptyGroup,
    DuplicateObject,
    OutOfRange,
    UnknownObject,
    SequenceError,
    Parse,
};

const char* to_string(ErrorCode code);

/// Single exception type for the engine; `code()` tells callers and tests
/// which contract was violated.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace coverkit
