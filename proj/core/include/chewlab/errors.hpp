#pragma once

#include <stdexcept>
#include <string>

namespace chewlab {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DegenerateTriangleError : Error {
    using Error::Error;
};

struct DuplicatePointError : Error {
    using Error::Error;
};

struct AllCollinearError : Error {
    using Error::Error;
};

struct OffCircleError : Error {
    using Error::Error;
};

struct InvalidPairError : Error {
    using Error::Error;
};

struct VertexNotInCorridorError : Error {
    using Error::Error;
};

struct MissingVertexError : Error {
    using Error::Error;
};

struct ParameterError : Error {
    using Error::Error;
};

struct GenerationError : Error {
    using Error::Error;
};

struct IoError : Error {
    using Error::Error;
};

// Raised when an internal invariant that should be unreachable is hit,
// e.g. the routing loop exceeding its corridor budget.
struct InternalError : Error {
    using Error::Error;
};

}  // namespace chewlab
