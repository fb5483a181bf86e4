#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ordlen {

/// Base class for every error this library reports.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A precondition was violated or an input exceeds a documented bound.
class domain_error : public error {
public:
    using error::error;
};

/// A coefficient or exponent left the representable 64-bit range.
class overflow_error : public error {
public:
    using error::error;
};

/// Malformed text input; position() is the byte offset of the offending token.
class parse_error : public error {
public:
    parse_error(const std::string& what, std::size_t position)
        : error(what + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

} // namespace ordlen
