#pragma once

#include "sicp/poly/multipoly.hpp"

#include <string>
#include <vector>

namespace sicp {

enum class DifferenceMode {
    substitute,  // (f - f|_{u := v}) / (u - v)
    swap,        // (f - f|_{u <-> v}) / (u - v)
};

/// Divided difference of f in the variables u, v. The division must be exact;
/// std::domain_error otherwise.
MultiPoly divided_difference(const MultiPoly& f, const std::string& u, const std::string& v,
                             DifferenceMode mode = DifferenceMode::substitute);

/// Elementary symmetric polynomial e_k in the variables of `vars`.
MultiPoly elementary_symmetric(const std::vector<std::string>& vars, unsigned k);

/// True if f is invariant under every permutation of its variables (checked
/// exactly on a generating set of transpositions).
bool is_symmetric(const MultiPoly& f);

/// Writes a symmetric f in its k variables as a polynomial in the elementary
/// symmetric polynomials, named by `elementary_names` (e_1 first). Uses
/// leading-term subtraction in lex order. Throws std::invalid_argument if f
/// is not symmetric.
MultiPoly symmetric_reduce(const MultiPoly& f, const std::vector<std::string>& elementary_names);

/// Substitute e_i := elementary_symmetric(vars, i) into g (variables of g are
/// the elementary names, in order). Result is over `vars`.
MultiPoly expand_elementary(const MultiPoly& g, const std::vector<std::string>& vars);

}  // namespace sicp
