#include "coverkit/error.hpp"

namespace coverkit {

const char* to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::DegenerateRay: return "degenerate-ray";
        case ErrorCode::InvalidPolygon: return "invalid-polygon";
        case ErrorCode::EmptyInput: return "empty-input";
        case ErrorCode::InvalidCover: return "invalid-cover";
        case ErrorCode::InvalidRing: return "invalid-ring";
        case ErrorCode::InvalidHole: return "invalid-hole";
        case ErrorCode::InvalidArgument: return "invalid-argument";
        case ErrorCode::EmptyGroup: return "empty-group";
        case ErrorCode::DuplicateObject: return "duplicate-object";
        case ErrorCode::OutOfRange: return "out-of-range";
        case ErrorCode::UnknownObject: return "unknown-object";
        case ErrorCode::SequenceError: return "sequence-error";
        case ErrorCode::Parse: return "parse-error";
    }
    return "unknown";
}

}  // namespace coverkit
