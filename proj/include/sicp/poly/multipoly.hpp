#pragma once

#include "sicp/poly/rational.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sicp {

/// Sparse polynomial with rational coefficients in an ordered list of at most
/// eight named variables. Monomials are packed one byte per exponent with the
/// first variable in the most significant byte, so integer order on the packed
/// key is lexicographic order on exponent vectors. Exponents are capped at 127.
class MultiPoly {
public:
    using Exponents = std::vector<unsigned>;
    using Key = std::uint64_t;
    static constexpr std::size_t max_vars = 8;
    static constexpr unsigned max_exponent = 127;

    MultiPoly() = default;
    explicit MultiPoly(std::vector<std::string> vars);

    static MultiPoly constant(std::vector<std::string> vars, const BigRational& c);
    static MultiPoly variable(std::vector<std::string> vars, const std::string& name);

    const std::vector<std::string>& vars() const { return vars_; }
    std::size_t var_index(const std::string& name) const;  // throws if absent
    bool has_var(const std::string& name) const;

    std::size_t term_count() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;

    void add_term(const Exponents& e, const BigRational& c);
    BigRational coefficient(const Exponents& e) const;
    /// Terms in descending lex order.
    std::vector<std::pair<Exponents, BigRational>> terms() const;
    Exponents leading_exponents() const;
    BigRational leading_coefficient() const;

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly& operator*=(const BigRational& s);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(MultiPoly a, const BigRational& s) { return a *= s; }
    friend MultiPoly operator*(const BigRational& s, MultiPoly a) { return a *= s; }
    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return a.vars_ == b.vars_ && a.terms_ == b.terms_;
    }

    MultiPoly pow(unsigned k) const;

    /// Evaluate at a point given in variable order. Exact for BigRational,
    /// approximate for floating types.
    template <class T>
    T eval(std::span<const T> point) const;

    /// Replace one variable by a polynomial over the same variable list.
    MultiPoly substitute(const std::string& var, const MultiPoly& value) const;
    MultiPoly derivative(const std::string& var) const;
    /// Exchange the roles of two variables.
    MultiPoly swapped(const std::string& u, const std::string& v) const;
    /// Variable i is renamed to variable perm[i].
    MultiPoly permuted(std::span<const std::size_t> perm) const;
    /// Re-express over another variable list; every variable that occurs must exist there.
    MultiPoly with_vars(const std::vector<std::string>& vars) const;

    unsigned degree_in(const std::string& var) const;
    unsigned total_degree() const;
    /// Coefficient of var^k, as a polynomial over the same variables.
    MultiPoly coefficient_in(const std::string& var, unsigned k) const;

    /// Exact division; throws std::domain_error when the divisor does not divide.
    MultiPoly exact_divide(const MultiPoly& divisor) const;

    /// Positive rational gcd of all coefficients, and this divided by it.
    BigRational content() const;
    MultiPoly primitive() const;

    const std::map<Key, BigRational>& raw_terms() const { return terms_; }
    unsigned exponent(Key k, std::size_t var) const { return static_cast<unsigned>((k >> shift(var)) & 0xffu); }
    Key pack(const Exponents& e) const;
    Exponents unpack(Key k) const;

private:
    static unsigned shift(std::size_t var) { return static_cast<unsigned>(8 * (max_vars - 1 - var)); }
    void require_same_vars(const MultiPoly& o, const char* op) const;
    static Key add_keys(Key a, Key b);

    std::vector<std::string> vars_;
    std::map<Key, BigRational> terms_;
};

template <class T>
T MultiPoly::eval(std::span<const T> point) const {
    if (point.size() != vars_.size()) throw std::invalid_argument("MultiPoly::eval: wrong number of values");
    // Powers per variable up to the degree that occurs.
    std::vector<std::vector<T>> powers(vars_.size());
    for (std::size_t v = 0; v < vars_.size(); ++v) {
        const unsigned d = degree_in(vars_[v]);
        powers[v].reserve(d + 1);
        powers[v].push_back(T(1));
        for (unsigned k = 1; k <= d; ++k) powers[v].push_back(powers[v].back() * point[v]);
    }
    T sum(0);
    for (const auto& [key, c] : terms_) {
        T term = rational_cast<T>(c);
        for (std::size_t v = 0; v < vars_.size(); ++v) {
            const unsigned e = exponent(key, v);
            if (e) term *= powers[v][e];
        }
        sum += term;
    }
    return sum;
}

/// A polynomial with coefficients converted once, for repeated evaluation.
template <class T>
class CompiledPoly {
public:
    CompiledPoly() = default;
    explicit CompiledPoly(const MultiPoly& p) : nvars_(p.vars().size()), degrees_(nvars_, 0) {
        for (const auto& [key, c] : p.raw_terms()) {
            coefs_.push_back(rational_cast<T>(c));
            std::vector<unsigned> e(nvars_);
            for (std::size_t v = 0; v < nvars_; ++v) {
                e[v] = p.exponent(key, v);
                degrees_[v] = std::max(degrees_[v], e[v]);
            }
            exps_.push_back(std::move(e));
        }
    }

    T operator()(std::span<const T> point) const {
        if (point.size() != nvars_) throw std::invalid_argument("CompiledPoly: wrong number of values");
        std::vector<std::vector<T>> powers(nvars_);
        for (std::size_t v = 0; v < nvars_; ++v) {
            powers[v].push_back(T(1));
            for (unsigned k = 1; k <= degrees_[v]; ++k) powers[v].push_back(powers[v].back() * point[v]);
        }
        T sum(0);
        for (std::size_t i = 0; i < coefs_.size(); ++i) {
            T term = coefs_[i];
            for (std::size_t v = 0; v < nvars_; ++v)
                if (exps_[i][v]) term *= powers[v][exps_[i][v]];
            sum += term;
        }
        return sum;
    }

    /// Sum of absolute term values; a natural scale for residuals.
    T magnitude(std::span<const T> point) const {
        using std::abs;
        T sum(0);
        for (std::size_t i = 0; i < coefs_.size(); ++i) {
            T term = abs(coefs_[i]);
            for (std::size_t v = 0; v < nvars_; ++v)
                for (unsigned k = 0; k < exps_[i][v]; ++k) term *= abs(point[v]);
            sum += term;
        }
        return sum;
    }

private:
    std::size_t nvars_ = 0;
    std::vector<unsigned> degrees_;
    std::vector<T> coefs_;
    std::vector<std::vector<unsigned>> exps_;
};

}  // namespace sicp
