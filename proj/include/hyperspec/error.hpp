#pragma once

#include <stdexcept>
#include <string>

namespace hyperspec {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed interchange document (bad JSON, unknown vertex, sign outside {-1,+1}).
class ParseError : public Error {
public:
    using Error::Error;
};

// Malformed family spec string, mode string or command-line parameter.
class SpecError : public Error {
public:
    using Error::Error;
};

// Operation applied to a hypergraph that violates a structural invariant.
class ValidationError : public Error {
public:
    using Error::Error;
};

// Coloring mode not applicable to the hypergraph's shape.
class ModeMismatch : public Error {
public:
    using Error::Error;
};

// Numeric precondition of a formula violated.
class DomainError : public Error {
public:
    using Error::Error;
};

class ConvergenceError : public Error {
public:
    using Error::Error;
};

} // namespace hyperspec
