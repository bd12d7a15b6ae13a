#pragma once

// Dense univariate polynomials over double or BigRational, with Sturm
// sequences for counting and isolating real roots.

#include "sicp/poly/multipoly.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

namespace sicp {

namespace detail {
inline int sign_of(double v) { return (v > 0) - (v < 0); }
inline int sign_of(const BigRational& v) { return sgn(v); }
inline int sign_of(const HighFloat& v) { return (v > 0) - (v < 0); }
inline double abs_of(double v) { return std::fabs(v); }
inline BigRational abs_of(const BigRational& v) { return BigRational(abs(v)); }
inline bool is_exact_zero(double v) { return v == 0.0; }
inline bool is_exact_zero(const BigRational& v) { return v == 0; }
}  // namespace detail

inline double rational_or_double(double v) { return v; }
inline double rational_or_double(const BigRational& v) { return v.get_d(); }

/// Coefficients in ascending degree; the leading stored coefficient is nonzero.
template <class T>
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<T> ascending) : c_(std::move(ascending)) { trim(); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for the zero polynomial
    bool is_zero() const { return c_.empty(); }
    const std::vector<T>& coeffs() const { return c_; }
    T operator[](std::size_t i) const { return i < c_.size() ? c_[i] : T(0); }
    T leading() const { return c_.empty() ? T(0) : c_.back(); }

    template <class U = T>
    U eval(const U& x) const {
        U acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + convert<U>(*it);
        return acc;
    }

    UniPoly derivative() const {
        std::vector<T> d;
        for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * T(static_cast<long>(i)));
        return UniPoly(std::move(d));
    }

    /// Zero every coefficient with magnitude at or below `floor`.
    void truncate_below(const T& floor) {
        for (auto& v : c_)
            if (detail::abs_of(v) <= floor) v = T(0);
        trim();
    }

    T max_abs_coeff() const {
        T m(0);
        for (const auto& v : c_) m = std::max<T>(m, detail::abs_of(v));
        return m;
    }

    friend UniPoly operator-(const UniPoly& a) {
        std::vector<T> r = a.c_;
        for (auto& v : r) v = -v;
        return UniPoly(std::move(r));
    }
    friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
        std::vector<T> r(std::max(a.c_.size(), b.c_.size()), T(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
        return UniPoly(std::move(r));
    }
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<T> r(a.c_.size() + b.c_.size() - 1, T(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        return UniPoly(std::move(r));
    }
    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

private:
    template <class U>
    static U convert(const T& v) {
        if constexpr (std::is_same_v<T, BigRational>)
            return rational_cast<U>(v);
        else
            return U(v);
    }
    void trim() {
        while (!c_.empty() && detail::is_exact_zero(c_.back())) c_.pop_back();
    }
    std::vector<T> c_;
};

/// Quotient and remainder. For doubles, remainder coefficients below
/// 1e-13 times the dividend's largest coefficient are dropped.
template <class T>
std::pair<UniPoly<T>, UniPoly<T>> divmod(const UniPoly<T>& a, const UniPoly<T>& b) {
    if (b.is_zero()) throw std::domain_error("divmod: division by the zero polynomial");
    std::vector<T> rem = a.coeffs();
    const int db = b.degree();
    std::vector<T> quo(a.degree() >= db ? static_cast<std::size_t>(a.degree() - db + 1) : 0, T(0));
    for (int i = a.degree(); i >= db; --i) {
        const T f = rem[static_cast<std::size_t>(i)] / b.leading();
        quo[static_cast<std::size_t>(i - db)] = f;
        for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(i - db + j)] -= f * b[static_cast<std::size_t>(j)];
        rem[static_cast<std::size_t>(i)] = T(0);
    }
    UniPoly<T> r(std::move(rem));
    if constexpr (std::is_same_v<T, double>) r.truncate_below(1e-13 * a.max_abs_coeff());
    return {UniPoly<T>(std::move(quo)), r};
}

template <class T>
UniPoly<T> monic(const UniPoly<T>& p) {
    if (p.is_zero()) return p;
    std::vector<T> c = p.coeffs();
    const T l = p.leading();
    for (auto& v : c) v /= l;
    return UniPoly<T>(std::move(c));
}

template <class T>
UniPoly<T> gcd(UniPoly<T> a, UniPoly<T> b) {
    while (!b.is_zero()) {
        auto r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a);
}

template <class T>
UniPoly<T> square_free_part(const UniPoly<T>& p) {
    if (p.degree() <= 0) return p;
    const auto g = gcd(p, p.derivative());
    return g.degree() <= 0 ? p : divmod(p, g).first;
}

/// p, p', then negated remainders, on the square-free part of p.
template <class T>
class SturmChain {
public:
    explicit SturmChain(const UniPoly<T>& p) {
        UniPoly<T> a = square_free_part(p);
        if (a.is_zero()) throw std::domain_error("SturmChain: zero polynomial");
        UniPoly<T> b = a.derivative();
        polys_.push_back(a);
        while (!b.is_zero()) {
            polys_.push_back(b);
            UniPoly<T> r = -divmod(a, b).second;
            a = std::move(b);
            b = std::move(r);
        }
    }

    const std::vector<UniPoly<T>>& polys() const { return polys_; }

    int sign_changes(const T& x) const {
        int changes = 0, last = 0;
        for (const auto& q : polys_) {
            const int s = detail::sign_of(q.eval(x));
            if (s == 0) continue;
            if (last != 0 && s != last) ++changes;
            last = s;
        }
        return changes;
    }

    /// Number of distinct real roots in (lo, hi].
    int count(const T& lo, const T& hi) const { return sign_changes(lo) - sign_changes(hi); }

private:
    std::vector<UniPoly<T>> polys_;
};

template <class T>
int sturm_count(const UniPoly<T>& p, const T& lo, const T& hi) {
    if (p.degree() <= 0) return 0;
    return SturmChain<T>(p).count(lo, hi);
}

/// Cauchy bound: every root has modulus below 1 + max |a_i / a_n|.
template <class T>
T root_bound(const UniPoly<T>& p) {
    T m(0);
    for (int i = 0; i < p.degree(); ++i)
        m = std::max<T>(m, detail::abs_of(T(p[static_cast<std::size_t>(i)] / p.leading())));
    return m + T(1);
}

class RootFindingError : public std::runtime_error {
public:
    RootFindingError(const std::string& what, std::vector<double> partial)
        : std::runtime_error(what), partial_(std::move(partial)) {}
    const std::vector<double>& partial() const { return partial_; }

private:
    std::vector<double> partial_;
};

/// Disjoint intervals (lo, hi], ascending, each holding exactly one root of
/// the square-free part of p, of width at most `width`.
template <class T>
std::vector<std::pair<T, T>> isolate_real_roots(const UniPoly<T>& p, const T& lo, const T& hi, const T& width,
                                                int max_steps = 100000) {
    std::vector<std::pair<T, T>> out;
    if (p.degree() <= 0) return out;
    const SturmChain<T> chain(p);
    struct Cell {
        T a, b;
        int va, vb;
    };
    std::vector<Cell> stack{{lo, hi, chain.sign_changes(lo), chain.sign_changes(hi)}};
    int steps = 0;
    while (!stack.empty()) {
        Cell c = stack.back();
        stack.pop_back();
        const int k = c.va - c.vb;
        if (k <= 0) continue;
        if (k == 1 && c.b - c.a <= width) {
            out.emplace_back(c.a, c.b);
            continue;
        }
        if (++steps > max_steps) {
            std::vector<double> partial;
            for (const auto& [a, b] : out) partial.push_back(rational_or_double((a + b) / T(2)));
            for (const auto& s : stack) partial.push_back(rational_or_double((s.a + s.b) / T(2)));
            throw RootFindingError("isolate_real_roots: iteration cap exceeded", std::move(partial));
        }
        const T m = (c.a + c.b) / T(2);
        const int vm = chain.sign_changes(m);
        // Upper half is pushed first so the lower half is processed first.
        stack.push_back({m, c.b, vm, c.vb});
        stack.push_back({c.a, m, c.va, vm});
    }
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    return out;
}

/// Roots in (lo, hi] to within tol: Sturm bisection, then a safeguarded Newton polish.
std::vector<double> real_roots(const UniPoly<double>& p, double lo, double hi, double tol = 1e-12);
/// Over the whole real line.
std::vector<double> real_roots(const UniPoly<double>& p, double tol = 1e-12);

/// Exact isolation, then Newton in 50-digit arithmetic inside each interval.
std::vector<HighFloat> real_roots_high(const UniPoly<BigRational>& p);

/// Convert a polynomial in which only `var` occurs.
UniPoly<BigRational> to_univariate(const MultiPoly& p, const std::string& var);
UniPoly<double> to_double(const UniPoly<BigRational>& p);

/// Makes the coefficients coprime integers with positive leading coefficient.
UniPoly<BigRational> primitive_part(const UniPoly<BigRational>& p);

}  // namespace sicp
