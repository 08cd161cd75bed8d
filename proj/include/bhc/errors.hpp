#pragma once

#include <stdexcept>
#include <string>

namespace bhc {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Requested enumeration or allocation exceeds a configured cap.
class CapacityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Input is well-formed but the quantity is undefined for it (e.g. zero form).
class DegenerateError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Exact integer result does not fit in 64 bits.
class OverflowError : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

/// Malformed external input (JSON/CSV/CLI values).
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// File system failure while writing output.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace bhc
