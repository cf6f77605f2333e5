#pragma once

#include <stdexcept>
#include <string>

namespace layershock {

/// Base for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Argument outside the admissible domain of a constitutive law or formula.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Requested value not attainable (e.g. stress outside the range of a law).
class RangeError : public Error {
public:
    using Error::Error;
};

/// Loss of hyperbolicity or a vanishing wave speed.
class DegenerateError : public Error {
public:
    using Error::Error;
};

/// Non-finite or inadmissible field produced by time stepping.
class BlowupError : public Error {
public:
    using Error::Error;
};

/// Malformed or inconsistent configuration.
class ConfigError : public Error {
public:
    using Error::Error;
};

}  // namespace layershock
