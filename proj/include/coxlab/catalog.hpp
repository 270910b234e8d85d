#pragma once

#include <string>
#include <string_view>

#include "coxlab/coxeter_matrix.hpp"

namespace coxlab {

// Coxeter matrix of a named diagram: A<n>, B<n>, D<n>, I2_<m> (m may be
// "inf"), H3, H4, F4. "A(3)" and "I2(4)" spellings are accepted too.
// Throws Error(UnknownCatalogType).
CoxeterMatrix catalog_matrix(std::string_view name);

}  // namespace coxlab
