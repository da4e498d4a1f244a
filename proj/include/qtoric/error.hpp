#pragma once
#include <stdexcept>

namespace qtoric {

// Precondition violation on an operation's arguments.
struct ArgumentError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Structurally well-formed input that fails a hard contract
// (e.g. the top-degree cokernel is not free of rank one).
struct IntegrityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed or unreadable input file.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace qtoric
