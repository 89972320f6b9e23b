#pragma once

#include <optional>
#include <vector>

#include "cliflat/rational.hpp"

namespace cliflat {

using rat_matrix = std::vector<std::vector<rational>>;

// Reduced row echelon form in place; returns the pivot columns. Pivot rows
// are chosen among candidates by smallest numerator+denominator bit size,
// which keeps intermediate entries small; correctness does not depend on
// the choice.
std::vector<std::size_t> rref(rat_matrix& m);

// Basis of the nullspace of a (rows x cols) matrix, one vector per free
// column, in column order. The basis is canonical: free variable set to 1,
// pivot variables back-substituted.
rat_matrix nullspace(const rat_matrix& m, std::size_t cols);

// Exact solution of A x = rhs (A given column-wise is awkward; A is row-major
// rows x cols). Returns nullopt when the system is inconsistent. When the
// solution is not unique the free variables are set to zero.
std::optional<std::vector<rational>> solve(const rat_matrix& a,
                                           const std::vector<rational>& rhs);

} // namespace cliflat
