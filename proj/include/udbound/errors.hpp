#ifndef UDBOUND_ERRORS_HPP
#define UDBOUND_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace udbound {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed textual input (polynomial grammar, group-spec grammar, ...).
// `position` is a 0-based byte offset into the offending string.
struct ParseError : Error {
    std::size_t position;
    ParseError(const std::string& what, std::size_t pos)
        : Error(what + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

// A configurable cap (Weyl group size, search budget) was exceeded.
struct ResourceLimitError : Error {
    using Error::Error;
};

// An internal consistency check failed.  Signals a bug (e.g. a Cartan
// convention mix-up making a divided difference non-integral), never a
// user mistake.
struct InternalError : Error {
    using Error::Error;
};

}  // namespace udbound

#endif
