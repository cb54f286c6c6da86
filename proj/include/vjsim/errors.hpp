#pragma once

#include <stdexcept>
#include <string>

namespace vjsim {

/// Invalid configuration (bad parameter values, malformed config documents).
/// CLI maps this to exit code 1.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// Unreadable or malformed input data (metadata/pair files, output dirs).
/// CLI maps this to exit code 2.
class DataError : public std::runtime_error {
public:
    explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

/// A simulation invariant was violated (e.g. citation conservation).
/// CLI maps this to exit code 3.
class InternalError : public std::runtime_error {
public:
    explicit InternalError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace vjsim
