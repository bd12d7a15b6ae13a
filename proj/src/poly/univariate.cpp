#include "sicp/poly/univariate.hpp"

namespace sicp {

std::vector<double> real_roots(const UniPoly<double>& p, double lo, double hi, double tol) {
    if (p.degree() <= 0) return {};
    const UniPoly<double> q = square_free_part(p);
    const UniPoly<double> dq = q.derivative();
    std::vector<double> out;
    for (const auto& [a, b] : isolate_real_roots(q, lo, hi, tol)) {
        double x = 0.5 * (a + b);
        for (int it = 0; it < 30; ++it) {
            const double d = dq.eval(x);
            if (d == 0.0) break;
            const double step = q.eval(x) / d;
            const double next = x - step;
            if (!(next >= a - tol && next <= b + tol)) break;  // left the bracket: keep the bisection value
            x = next;
            if (std::fabs(step) <= 1e-16 * std::max(1.0, std::fabs(x))) break;
        }
        if (out.empty() || x - out.back() > tol) out.push_back(x);
    }
    return out;
}

std::vector<double> real_roots(const UniPoly<double>& p, double tol) {
    if (p.degree() <= 0) return {};
    const double b = root_bound(square_free_part(p));
    return real_roots(p, -b, b, tol);
}

std::vector<HighFloat> real_roots_high(const UniPoly<BigRational>& p) {
    if (p.degree() <= 0) return {};
    const UniPoly<BigRational> q = square_free_part(primitive_part(p));
    const UniPoly<BigRational> dq = q.derivative();
    const BigRational bound = root_bound(q);
    const BigRational width(1, BigInt("1000000000000"));  // 1e-12
    std::vector<HighFloat> out;
    for (const auto& [a, b] : isolate_real_roots<BigRational>(q, -bound, bound, width)) {
        const HighFloat lo = rational_cast<HighFloat>(a);
        const HighFloat hi = rational_cast<HighFloat>(b);
        HighFloat x = (lo + hi) / 2;
        bool ok = false;
        for (int it = 0; it < 60; ++it) {
            const HighFloat d = dq.eval<HighFloat>(x);
            if (d == 0) break;
            const HighFloat step = q.eval<HighFloat>(x) / d;
            x -= step;
            if (x < lo || x > hi) break;
            if (boost::multiprecision::abs(step) <= HighFloat("1e-48") * (1 + boost::multiprecision::abs(x))) {
                ok = true;
                break;
            }
        }
        if (!ok) {
            // Bisection on the sign of q; the interval holds exactly one simple root.
            HighFloat l = lo, h = hi;
            const int sh = detail::sign_of(q.eval<HighFloat>(h));
            if (sh == 0) {
                out.push_back(h);
                continue;
            }
            for (int it = 0; it < 200; ++it) {
                const HighFloat m = (l + h) / 2;
                const int sm = detail::sign_of(q.eval<HighFloat>(m));
                if (sm == 0) {
                    l = h = m;
                    break;
                }
                (sm == sh ? h : l) = m;
            }
            x = (l + h) / 2;
        }
        out.push_back(x);
    }
    return out;
}

UniPoly<BigRational> to_univariate(const MultiPoly& p, const std::string& var) {
    const std::size_t v = p.var_index(var);
    std::vector<BigRational> c(p.degree_in(var) + 1, BigRational(0));
    for (const auto& [key, coef] : p.raw_terms()) {
        for (std::size_t i = 0; i < p.vars().size(); ++i)
            if (i != v && p.exponent(key, i) != 0)
                throw std::invalid_argument("to_univariate: variable " + p.vars()[i] + " still occurs");
        c[p.exponent(key, v)] = coef;
    }
    return UniPoly<BigRational>(std::move(c));
}

UniPoly<double> to_double(const UniPoly<BigRational>& p) {
    std::vector<double> c;
    for (const auto& v : p.coeffs()) c.push_back(v.get_d());
    return UniPoly<double>(std::move(c));
}

UniPoly<BigRational> primitive_part(const UniPoly<BigRational>& p) {
    if (p.is_zero()) return p;
    BigRational g = 0;
    for (const auto& v : p.coeffs()) g = rational_gcd(g, v);
    if (p.leading() < 0) g = -g;
    std::vector<BigRational> c = p.coeffs();
    for (auto& v : c) v /= g;
    return UniPoly<BigRational>(std::move(c));
}

}  // namespace sicp
