#pragma once

#include <stdexcept>
#include <string>

namespace rulerag {

// Invalid task/options/pipeline configuration (bad schema, violated invariant).
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// Problems with the input data itself (missing file, malformed row,
// unknown column, unimputable column).
class DataError : public std::runtime_error {
public:
    explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

// Filesystem write/read failures on output artifacts.
class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace rulerag
