#pragma once

#include <stdexcept>
#include <string>

namespace gal2 {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Division/inversion requested for an element whose scalar part (or real
// part, for matrices) is not invertible.
struct NonInvertibleError : Error {
    using Error::Error;
};

struct DimensionMismatchError : Error {
    using Error::Error;
};

// A representation element does not match the structural pattern of its
// declared representation.
struct MalformedRepElementError : Error {
    using Error::Error;
};

// Operation not defined for the requested representation.
struct UnsupportedError : Error {
    using Error::Error;
};

// Grassmann element does not have unit scalar part.
struct NotInLambda1Error : Error {
    using Error::Error;
};

// Clifford element is not of the point form e3 + y*e2e3 + z*e1e2e3.
struct NotAPointElementError : Error {
    using Error::Error;
};

// Homogeneous coordinates cannot be normalized (second coordinate has
// non-invertible scalar part).
struct NonNormalizableError : Error {
    using Error::Error;
};

}  // namespace gal2
