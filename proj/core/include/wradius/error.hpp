#pragma once

#include <stdexcept>
#include <string>

namespace wradius {

// Base for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Operand shapes do not agree (e.g. multiplying 2x2 by 3x3).
class DimensionError : public Error {
public:
    using Error::Error;
};

// A value violates an operation's precondition (non-finite entry, non-Hermitian
// input, indefinite matrix passed to a square root, r < 1, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

// The Jacobi eigensolver hit its sweep cap.
class ConvergenceError : public Error {
public:
    using Error::Error;
};

// Malformed matrix document or unknown identifier on the harness surface.
class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace wradius
