#pragma once

#include <stdexcept>
#include <string>

namespace qecstab {

// Bad inputs: dimension mismatches, violated preconditions, malformed files.
// The CLI maps this to exit code 1.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

// An operation refused to start because its enumeration plan exceeds the
// configured budget (or a hard size guard). CLI exit code 2.
class ResourceLimitError : public std::runtime_error {
public:
    explicit ResourceLimitError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace qecstab
