#pragma once

#include <stdexcept>
#include <string>

namespace qschubert {

// Base of every failure the library reports. The CLI maps each subclass to
// an exit code.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed or out-of-range input (bad partition text, partition outside the
// box, mismatched shapes).
class InvalidInput : public Error {
public:
    using Error::Error;
};

// A mathematical invariant the engine relies on did not hold. Seeing one of
// these means a bug, not bad input.
class ConsistencyError : public Error {
public:
    using Error::Error;
};

// Floating-point verification exceeded its tolerance.
class NumericalFailure : public ConsistencyError {
public:
    using ConsistencyError::ConsistencyError;
};

// A size guard refused the computation.
class ResourceLimit : public Error {
public:
    using Error::Error;
};

}  // namespace qschubert
