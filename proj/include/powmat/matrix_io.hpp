#pragma once

#include <string>

#include "powmat/matrix.hpp"

namespace powmat {

// Accepts either JSON {"entries": [[...], ...]} with integer or "p/q"
// string entries, or plain text with one row per line of whitespace
// separated rationals. Non-square or ragged input raises dimension_error;
// malformed numbers (including JSON floats) raise parse_error.
Matrix parse_matrix_input(const std::string& text);

}  // namespace powmat
