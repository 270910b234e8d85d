#pragma once

#include <string>
#include <string_view>

#include "coxlab/coxeter_matrix.hpp"

namespace coxlab {

// "rank n" followed by n rows of n tokens, each a positive integer or "inf".
// Throws Error(ParseError) on malformed text and the validation errors of
// CoxeterMatrix::validate on a non-Coxeter matrix.
CoxeterMatrix parse_matrix_file(std::string_view text);

std::string format_matrix_file(const CoxeterMatrix& matrix);

}  // namespace coxlab
