#pragma once

#include <stdexcept>
#include <string>

namespace ngsocx {

/// Bad or inconsistent configuration (catalog, scenario, table files, CLI values).
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Syntax error in one of the text formats; carries the 1-based line number.
class ParseError : public ConfigError {
public:
    ParseError(const std::string& source, int line, const std::string& what)
        : ConfigError(source + ":" + std::to_string(line) + ": " + what), line_(line)
    {
    }
    int line() const { return line_; }

private:
    int line_;
};

/// A loaded object violates a domain invariant.
class InvariantError : public ConfigError {
public:
    using ConfigError::ConfigError;
};

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Numerical routine failed in a way that indicates a bug rather than bad input.
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace ngsocx
