#pragma once

#include <stdexcept>
#include <string>

namespace zerr {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed or inconsistent input data (bad labels, probability rows, ...).
struct ValidationError : Error {
    using Error::Error;
};

// An exact solver was asked for more than its configured vertex cap allows.
struct ResourceLimitError : Error {
    using Error::Error;
};

// Unreadable or syntactically invalid input file.
struct ParseError : Error {
    using Error::Error;
};

} // namespace zerr
