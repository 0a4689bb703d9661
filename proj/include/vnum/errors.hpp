#pragma once

#include <stdexcept>
#include <string>

namespace vnum {

/// Base class for all engine errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed or out-of-contract input (wrong variable set, bad bounds, ...).
struct InvalidInput : Error {
    using Error::Error;
};

/// A value that is mathematically undefined for the given input
/// (e.g. the least generator degree of the zero ideal).
struct Undefined : Error {
    using Error::Error;
};

/// Requested computation method cannot be applied to the given ideal.
struct MethodInapplicable : Error {
    using Error::Error;
};

/// Operation requires a proper nonzero ideal.
struct NotProper : Error {
    using Error::Error;
};

/// A desk-scale enumeration guard was exceeded.
struct GuardExceeded : Error {
    using Error::Error;
};

/// DSL syntax error with source position.
struct ParseError : Error {
    int line;
    int column;
    std::string expected;

    ParseError(int line_, int column_, const std::string& expected_, const std::string& message)
        : Error(message), line(line_), column(column_), expected(expected_) {}
};

/// DSL input that parses but violates parameter bounds or typing.
struct SemanticError : Error {
    using Error::Error;
};

}  // namespace vnum
