#pragma once

#include <stdexcept>
#include <string>

namespace powmat {

// Malformed input text (bad rational token, invalid JSON, ...).
struct parse_error : std::runtime_error {
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

// Structurally wrong input (ragged rows, non-square, empty matrix).
struct dimension_error : std::runtime_error {
    explicit dimension_error(const std::string& what) : std::runtime_error(what) {}
};

// Inverse or negative power of a singular matrix, or closed-form
// evaluation below the validity threshold of a singular matrix.
struct singular_error : std::runtime_error {
    explicit singular_error(const std::string& what) : std::runtime_error(what) {}
};

// Invariant violations that indicate a bug, not bad input.
struct internal_error : std::logic_error {
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

}  // namespace powmat
