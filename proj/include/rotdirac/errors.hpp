#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace rotdirac {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Arguments outside the mathematical domain of an operation
/// (negative argument, |m| > l, malformed quantum numbers, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Requested Bessel order or root index exceeds the configured limits.
class UnsupportedOrder : public DomainError {
public:
    using DomainError::DomainError;
};

/// Omega * R >= 1: the wall of the sphere would move faster than light.
class FasterThanLightBoundary : public Error {
public:
    using Error::Error;
};

/// A root solver could not produce the requested roots.
class SolverFailure : public Error {
public:
    using Error::Error;
};

/// Invalid run configuration; `key()` names the offending entry.
class ConfigError : public Error {
public:
    ConfigError(std::string key, const std::string& what)
        : Error(key + ": " + what), key_(std::move(key)) {}

    const std::string& key() const noexcept { return key_; }

private:
    std::string key_;
};

} // namespace rotdirac
