#pragma once

#include <vector>

#include "conering/integers.hpp"

namespace conering {

// Dense square matrices over exact integers; row major.
using IntMatrix = std::vector<std::vector<Int>>;

IntMatrix identity_matrix(std::size_t n);

// Exact determinant by Bareiss fraction-free elimination.
Int determinant(IntMatrix m);

// Inverse of an integer matrix with determinant +-1, computed by
// Gauss-Jordan over exact rationals. Throws std::domain_error when the
// matrix is singular or the inverse is not integral.
IntMatrix inverse_unimodular(const IntMatrix& m);

std::vector<Int> mat_vec(const IntMatrix& m, const std::vector<Int>& v);

}  // namespace conering
