#pragma once

#include <stdexcept>
#include <string>

namespace unidescent {

// Base class for all errors raised by the library.
struct error : std::runtime_error {
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed textual input (partition strings, cache JSON requested explicitly).
struct parse_error : error {
    explicit parse_error(const std::string& what) : error(what) {}
};

// Violated size/parity/domain preconditions of an engine operation.
struct constraint_error : error {
    explicit constraint_error(const std::string& what) : error(what) {}
};

// Oracle asked to run above its configured bound.
struct oracle_bound_error : constraint_error {
    explicit oracle_bound_error(const std::string& what) : constraint_error(what) {}
};

// Character-table cache could not be read or written.
struct cache_error : error {
    explicit cache_error(const std::string& what) : error(what) {}
};

}  // namespace unidescent
