#pragma once

#include <stdexcept>
#include <string>

namespace clustered {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed or contract-violating input (bad vertex id, overlapping groups, ...).
class InvalidInput : public Error {
public:
    using Error::Error;
};

/// An instance exceeds a configured size limit.
class TooLarge : public Error {
public:
    using Error::Error;
};

/// A construction failed to meet its proven budget. Always an implementation bug.
class BudgetExceeded : public Error {
public:
    using Error::Error;
};

/// Parse failure in one of the file formats; the message names the line or field.
class ParseError : public Error {
public:
    using Error::Error;
};

} // namespace clustered
