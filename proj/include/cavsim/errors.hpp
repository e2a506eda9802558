#pragma once

#include <stdexcept>
#include <string>

namespace cavsim {

// Base class for all toolkit errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Invalid value or broken invariant on a domain object.
class ValidationError : public Error {
public:
    explicit ValidationError(const std::string& what) : Error(what) {}
};

// Bad scenario configuration (file, schema, or parameter constraints).
class ConfigError : public Error {
public:
    explicit ConfigError(const std::string& what) : Error(what) {}
};

// Failure inside the time-stepping loop; carries the iteration index.
class IntegrationError : public Error {
public:
    IntegrationError(const std::string& what, long iteration)
        : Error(what + " (iteration " + std::to_string(iteration) + ")"),
          iteration_(iteration) {}

    long iteration() const { return iteration_; }

private:
    long iteration_;
};

// Filesystem / output failure.
class IoError : public Error {
public:
    explicit IoError(const std::string& what) : Error(what) {}
};

}  // namespace cavsim
