#include "sicp/poly/resultant.hpp"

#include <stdexcept>

namespace sicp {

std::vector<std::vector<MultiPoly>> sylvester_matrix(const MultiPoly& f, const MultiPoly& g, const std::string& var) {
    const unsigned m = f.degree_in(var);
    const unsigned n = g.degree_in(var);
    if (m == 0 || n == 0) throw std::invalid_argument("resultant: both polynomials need positive degree in " + var);
    const std::size_t size = m + n;
    const MultiPoly zero(f.vars());
    std::vector<std::vector<MultiPoly>> s(size, std::vector<MultiPoly>(size, zero));
    for (unsigned row = 0; row < n; ++row)
        for (unsigned k = 0; k <= m; ++k) s[row][row + k] = f.coefficient_in(var, m - k);
    for (unsigned row = 0; row < m; ++row)
        for (unsigned k = 0; k <= n; ++k) s[n + row][row + k] = g.coefficient_in(var, n - k);
    return s;
}

MultiPoly bareiss_determinant(std::vector<std::vector<MultiPoly>> a) {
    const std::size_t n = a.size();
    if (n == 0) throw std::invalid_argument("bareiss_determinant: empty matrix");
    const auto& vars = a[0][0].vars();
    MultiPoly prev = MultiPoly::constant(vars, 1);
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k].is_zero()) {
            std::size_t r = k + 1;
            while (r < n && a[r][k].is_zero()) ++r;
            if (r == n) return MultiPoly(vars);
            std::swap(a[k], a[r]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]).exact_divide(prev);
            a[i][k] = MultiPoly(vars);
        }
        prev = a[k][k];
    }
    return negate ? -a[n - 1][n - 1] : a[n - 1][n - 1];
}

MultiPoly resultant(const MultiPoly& f, const MultiPoly& g, const std::string& var) {
    if (f.vars() != g.vars()) throw std::invalid_argument("resultant: variable lists differ");
    return bareiss_determinant(sylvester_matrix(f, g, var));
}

}  // namespace sicp
