#pragma once

#include <stdexcept>

namespace lscat {

// Support-guard and budget overruns (CLI exit code 3).
struct ResourceLimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed documents (CLI exit code 2).
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace lscat
