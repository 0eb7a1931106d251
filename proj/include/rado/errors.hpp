#ifndef RADO_ERRORS_HPP
#define RADO_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace rado {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed textual input (equation strings, coloring files, catalog lines).
struct ParseError : Error {
    using Error::Error;
};

// An operation was called outside its stated hypotheses.
struct PreconditionError : Error {
    using Error::Error;
};

// A checked 64-bit arithmetic operation would wrap.
struct OverflowError : Error {
    using Error::Error;
};

// The request exceeds a configured resource cap (enumeration size, oracle N).
struct ResourceLimitError : Error {
    using Error::Error;
};

// I/O failure reading or writing files.
struct IoError : Error {
    using Error::Error;
};

} // namespace rado

#endif
