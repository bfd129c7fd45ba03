#pragma once

#include <stdexcept>
#include <string>

namespace tropelim {

// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed or inconsistent input data (bad rational, g > h, arity mismatch, ...).
// Messages carry a field path where one is known, e.g. "box.lower[2]".
class ValidationError : public Error {
public:
    using Error::Error;
};

// Operation applied outside its domain (inverse of the zero element,
// zero to a non-positive power, mixed-mode operands, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

// A configured resource cap was exceeded; the message names the stage.
class CapacityError : public Error {
public:
    using Error::Error;
};

} // namespace tropelim
