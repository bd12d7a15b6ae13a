#pragma once

#include "sicp/poly/multipoly.hpp"

#include <string>
#include <vector>

namespace sicp {

/// Sylvester matrix of f and g with respect to var: deg_g rows of f's
/// coefficients (highest power first), then deg_f rows of g's.
std::vector<std::vector<MultiPoly>> sylvester_matrix(const MultiPoly& f, const MultiPoly& g, const std::string& var);

/// Determinant by Bareiss fraction-free elimination; every division is exact.
MultiPoly bareiss_determinant(std::vector<std::vector<MultiPoly>> m);

/// Res_var(f, g) = det(sylvester_matrix(f, g, var)). With this row order
/// Res_x(x - a, x - b) = a - b. Both inputs need positive degree in var.
MultiPoly resultant(const MultiPoly& f, const MultiPoly& g, const std::string& var);

}  // namespace sicp
