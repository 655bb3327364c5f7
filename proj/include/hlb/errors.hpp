#pragma once

#include <stdexcept>
#include <string>

namespace hlb {

/// Root of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid user input: grids, configs, data files, parameter ranges.
class ConfigError : public Error {
public:
    using Error::Error;
};

/// A numerical procedure failed to reach its accuracy target.
/// The CLI maps this family to exit code 3.
class NumericalFailure : public Error {
public:
    using Error::Error;
};

class NonFiniteMultiplier : public Error {
public:
    using Error::Error;
};

class TailViolation : public ConfigError {
public:
    using ConfigError::ConfigError;
};

class CompatibilityViolation : public ConfigError {
public:
    using ConfigError::ConfigError;
};

class RangeViolation : public ConfigError {
public:
    using ConfigError::ConfigError;
};

class DegenerateData : public Error {
public:
    using Error::Error;
};

class QuadratureNotConverged : public NumericalFailure {
public:
    using NumericalFailure::NumericalFailure;
};

class ContourQuadratureNotConverged : public QuadratureNotConverged {
public:
    using QuadratureNotConverged::QuadratureNotConverged;
};

/// Picard iteration could not find a contracting window.
class NoContraction : public NumericalFailure {
public:
    using NumericalFailure::NumericalFailure;
};

/// Picard iteration ran out of iterations while still contracting.
class IterationLimit : public NumericalFailure {
public:
    using NumericalFailure::NumericalFailure;
};

class StabilityViolation : public NumericalFailure {
public:
    using NumericalFailure::NumericalFailure;
};

} // namespace hlb
