#pragma once

#include <stdexcept>
#include <string>

namespace compcode {

// Operand shapes do not conform (vector lengths, matrix dimensions).
struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Numeric argument outside its mathematical domain.
struct DomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// An enumeration budget would be exceeded (table sizes, codeword scans).
struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A code could not be built from the given parameters or generator.
struct ConstructionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The inner code is not a subcode of the outer code.
struct NestingError : ConstructionError {
    using ConstructionError::ConstructionError;
};

// A vector required to be a codeword is not one.
struct MembershipError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct RangeError : std::out_of_range {
    using std::out_of_range::out_of_range;
};

// Malformed textual input (bit strings, code specs, config values).
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Missing or contradictory command-line configuration.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace compcode
