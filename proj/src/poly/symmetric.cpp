#include "sicp/poly/symmetric.hpp"

#include <bit>
#include <stdexcept>

namespace sicp {

MultiPoly divided_difference(const MultiPoly& f, const std::string& u, const std::string& v, DifferenceMode mode) {
    const auto& vars = f.vars();
    const MultiPoly other = mode == DifferenceMode::substitute ? f.substitute(u, MultiPoly::variable(vars, v))
                                                                : f.swapped(u, v);
    const MultiPoly den = MultiPoly::variable(vars, u) - MultiPoly::variable(vars, v);
    return (f - other).exact_divide(den);
}

MultiPoly elementary_symmetric(const std::vector<std::string>& vars, unsigned k) {
    const std::size_t n = vars.size();
    if (k > n) return MultiPoly(vars);
    MultiPoly e(vars);
    // Walk all k-subsets via bitmasks; n <= 8.
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        if (static_cast<unsigned>(std::popcount(mask)) != k) continue;
        MultiPoly::Exponents ex(n, 0);
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (1u << i)) ex[i] = 1;
        e.add_term(ex, 1);
    }
    return e;
}

bool is_symmetric(const MultiPoly& f) {
    const auto& vars = f.vars();
    // Adjacent transpositions generate the symmetric group.
    for (std::size_t i = 0; i + 1 < vars.size(); ++i)
        if (!(f.swapped(vars[i], vars[i + 1]) == f)) return false;
    return true;
}

MultiPoly symmetric_reduce(const MultiPoly& f, const std::vector<std::string>& elementary_names) {
    const auto& vars = f.vars();
    const std::size_t n = vars.size();
    if (elementary_names.size() != n)
        throw std::invalid_argument("symmetric_reduce: need one elementary name per variable");
    if (!is_symmetric(f)) throw std::invalid_argument("symmetric_reduce: polynomial is not symmetric");

    std::vector<MultiPoly> e;
    for (unsigned k = 1; k <= n; ++k) e.push_back(elementary_symmetric(vars, k));
    // Powers of each e_k, grown on demand.
    std::vector<std::vector<MultiPoly>> epow(n, std::vector<MultiPoly>{MultiPoly::constant(vars, 1)});
    auto power = [&](std::size_t k, unsigned m) -> const MultiPoly& {
        while (epow[k].size() <= m) epow[k].push_back(epow[k].back() * e[k]);
        return epow[k][m];
    };

    MultiPoly rest = f;
    MultiPoly out(elementary_names);
    while (!rest.is_zero()) {
        const auto lead = rest.leading_exponents();
        const BigRational c = rest.leading_coefficient();
        // lead is weakly decreasing for a symmetric polynomial; its "gaps" give the product.
        MultiPoly::Exponents ex(n);
        MultiPoly prod = MultiPoly::constant(vars, c);
        for (std::size_t k = 0; k < n; ++k) {
            const unsigned next = k + 1 < n ? lead[k + 1] : 0;
            if (lead[k] < next) throw std::logic_error("symmetric_reduce: leading exponent not decreasing");
            ex[k] = lead[k] - next;
            if (ex[k]) prod = prod * power(k, ex[k]);
        }
        out.add_term(ex, c);
        rest -= prod;
    }
    return out;
}

MultiPoly expand_elementary(const MultiPoly& g, const std::vector<std::string>& vars) {
    const std::size_t n = g.vars().size();
    if (n != vars.size()) throw std::invalid_argument("expand_elementary: variable counts differ");
    std::vector<std::vector<MultiPoly>> epow(n);
    for (std::size_t k = 0; k < n; ++k)
        epow[k] = {MultiPoly::constant(vars, 1), elementary_symmetric(vars, static_cast<unsigned>(k + 1))};
    MultiPoly out(vars);
    for (const auto& [ex, c] : g.terms()) {
        MultiPoly term = MultiPoly::constant(vars, c);
        for (std::size_t k = 0; k < n; ++k) {
            while (epow[k].size() <= ex[k]) epow[k].push_back(epow[k].back() * epow[k][1]);
            if (ex[k]) term = term * epow[k][ex[k]];
        }
        out += term;
    }
    return out;
}

}  // namespace sicp
