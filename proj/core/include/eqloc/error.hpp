#pragma once

#include <stdexcept>
#include <string>

namespace eqloc {

// Malformed input: bad files, violated preconditions, non-generic parameters.
// The CLI maps this to exit code 2.
struct input_error : std::runtime_error {
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// A mathematical consistency check failed: the data cannot come from a
// genuine S^1-space / equivariant bundle.  The CLI maps this to exit code 1.
struct check_error : std::runtime_error {
    explicit check_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace eqloc
