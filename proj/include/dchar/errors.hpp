#pragma once

#include <stdexcept>
#include <string>

namespace dchar {

// Base of all library errors. Subclasses name the contract that was violated,
// so callers (and the CLI) can map them to stable error categories.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct DegreeError : Error {
    using Error::Error;
};
struct RingError : Error {
    using Error::Error;
};
struct DimensionError : Error {
    using Error::Error;
};
struct DescriptorError : Error {
    using Error::Error;
};
struct NotFreeError : Error {
    using Error::Error;
};
struct NotSimplicialError : Error {
    using Error::Error;
};
struct ShapeError : Error {
    using Error::Error;
};
struct OrientabilityError : Error {
    using Error::Error;
};
struct CocycleError : Error {
    using Error::Error;
};
struct CycleError : Error {
    using Error::Error;
};
struct DualityError : Error {
    using Error::Error;
};
struct MatrixError : Error {
    using Error::Error;
};
struct ResolutionError : Error {
    using Error::Error;
};
struct InputError : Error {
    using Error::Error;
};

// Thrown when an internal mathematical invariant fails; must never fire.
struct InternalError : Error {
    using Error::Error;
};

}  // namespace dchar
