#pragma once

#include <stdexcept>
#include <string>

namespace spinon {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Argument outside the domain of an operation.
class DomainError : public Error {
public:
    using Error::Error;
};

class PoleError : public Error {
public:
    using Error::Error;
};

// Series or quadrature gave up before meeting its tolerance.
class ConvergenceError : public Error {
public:
    using Error::Error;
};

// Two residue sites coincide within the resolution limit.
class DegeneracyError : public Error {
public:
    using Error::Error;
};

}  // namespace spinon
