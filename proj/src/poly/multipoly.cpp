#include "sicp/poly/multipoly.hpp"

#include <algorithm>

namespace sicp {

namespace {
constexpr MultiPoly::Key high_bits = 0x8080808080808080ull;
}

MultiPoly::MultiPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {
    if (vars_.size() > max_vars) throw std::invalid_argument("MultiPoly: at most 8 variables");
    for (std::size_t i = 0; i < vars_.size(); ++i)
        for (std::size_t j = i + 1; j < vars_.size(); ++j)
            if (vars_[i] == vars_[j]) throw std::invalid_argument("MultiPoly: repeated variable " + vars_[i]);
}

MultiPoly MultiPoly::constant(std::vector<std::string> vars, const BigRational& c) {
    MultiPoly p(std::move(vars));
    if (c != 0) {
        p.terms_[0] = c;
        p.terms_[0].canonicalize();
    }
    return p;
}

MultiPoly MultiPoly::variable(std::vector<std::string> vars, const std::string& name) {
    MultiPoly p(std::move(vars));
    p.terms_[Key{1} << shift(p.var_index(name))] = 1;
    return p;
}

std::size_t MultiPoly::var_index(const std::string& name) const {
    const auto it = std::find(vars_.begin(), vars_.end(), name);
    if (it == vars_.end()) throw std::invalid_argument("MultiPoly: unknown variable " + name);
    return static_cast<std::size_t>(it - vars_.begin());
}

bool MultiPoly::has_var(const std::string& name) const {
    return std::find(vars_.begin(), vars_.end(), name) != vars_.end();
}

bool MultiPoly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0); }

MultiPoly::Key MultiPoly::pack(const Exponents& e) const {
    if (e.size() != vars_.size()) throw std::invalid_argument("MultiPoly: exponent vector has wrong length");
    Key k = 0;
    for (std::size_t v = 0; v < e.size(); ++v) {
        if (e[v] > max_exponent) throw std::overflow_error("MultiPoly: exponent above 127");
        k |= Key{e[v]} << shift(v);
    }
    return k;
}

MultiPoly::Exponents MultiPoly::unpack(Key k) const {
    Exponents e(vars_.size());
    for (std::size_t v = 0; v < vars_.size(); ++v) e[v] = exponent(k, v);
    return e;
}

MultiPoly::Key MultiPoly::add_keys(Key a, Key b) {
    // Both inputs have every byte <= 127, so bytewise sums cannot carry.
    const Key s = a + b;
    if (s & high_bits) throw std::overflow_error("MultiPoly: exponent above 127");
    return s;
}

void MultiPoly::require_same_vars(const MultiPoly& o, const char* op) const {
    if (vars_ != o.vars_) throw std::invalid_argument(std::string("MultiPoly::") + op + ": variable lists differ");
}

void MultiPoly::add_term(const Exponents& e, const BigRational& c) {
    if (c == 0) return;
    const Key k = pack(e);
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (inserted) {
        it->second.canonicalize();  // callers may hand in an unreduced num/den
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

BigRational MultiPoly::coefficient(const Exponents& e) const {
    const auto it = terms_.find(pack(e));
    return it == terms_.end() ? BigRational(0) : it->second;
}

std::vector<std::pair<MultiPoly::Exponents, BigRational>> MultiPoly::terms() const {
    std::vector<std::pair<Exponents, BigRational>> out;
    out.reserve(terms_.size());
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) out.emplace_back(unpack(it->first), it->second);
    return out;
}

MultiPoly::Exponents MultiPoly::leading_exponents() const {
    if (terms_.empty()) throw std::domain_error("MultiPoly: zero polynomial has no leading term");
    return unpack(terms_.rbegin()->first);
}

BigRational MultiPoly::leading_coefficient() const {
    if (terms_.empty()) return 0;
    return terms_.rbegin()->second;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r = *this;
    for (auto& [k, c] : r.terms_) c = -c;
    return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    require_same_vars(o, "add");
    for (const auto& [k, c] : o.terms_) {
        auto [it, inserted] = terms_.try_emplace(k, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    require_same_vars(o, "sub");
    for (const auto& [k, c] : o.terms_) {
        auto [it, inserted] = terms_.try_emplace(k, -c);
        if (!inserted) {
            it->second -= c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

MultiPoly& MultiPoly::operator*=(const BigRational& s) {
    if (s == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [k, c] : terms_) c *= s;
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    a.require_same_vars(b, "mul");
    MultiPoly r(a.vars_);
    BigRational prod;
    for (const auto& [ka, ca] : a.terms_)
        for (const auto& [kb, cb] : b.terms_) {
            const MultiPoly::Key k = MultiPoly::add_keys(ka, kb);
            prod = ca * cb;
            auto [it, inserted] = r.terms_.try_emplace(k, prod);
            if (!inserted) it->second += prod;
        }
    std::erase_if(r.terms_, [](const auto& kv) { return kv.second == 0; });
    return r;
}

MultiPoly MultiPoly::pow(unsigned k) const {
    MultiPoly result = constant(vars_, 1);
    MultiPoly base = *this;
    while (k) {
        if (k & 1u) result = result * base;
        k >>= 1;
        if (k) base = base * base;
    }
    return result;
}

MultiPoly MultiPoly::substitute(const std::string& var, const MultiPoly& value) const {
    require_same_vars(value, "substitute");
    const std::size_t v = var_index(var);
    const Key mask = Key{0xff} << shift(v);
    std::vector<MultiPoly> powers{constant(vars_, 1)};
    MultiPoly r(vars_);
    for (const auto& [k, c] : terms_) {
        const unsigned e = exponent(k, v);
        while (powers.size() <= e) powers.push_back(powers.back() * value);
        MultiPoly rest(vars_);
        rest.terms_[k & ~mask] = c;
        r += rest * powers[e];
    }
    return r;
}

MultiPoly MultiPoly::derivative(const std::string& var) const {
    const std::size_t v = var_index(var);
    MultiPoly r(vars_);
    for (const auto& [k, c] : terms_) {
        const unsigned e = exponent(k, v);
        if (e == 0) continue;
        r.terms_[k - (Key{1} << shift(v))] = c * e;
    }
    return r;
}

MultiPoly MultiPoly::swapped(const std::string& u, const std::string& v) const {
    std::vector<std::size_t> perm(vars_.size());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
    std::swap(perm[var_index(u)], perm[var_index(v)]);
    return permuted(perm);
}

MultiPoly MultiPoly::permuted(std::span<const std::size_t> perm) const {
    if (perm.size() != vars_.size()) throw std::invalid_argument("MultiPoly::permuted: wrong permutation length");
    std::vector<bool> seen(perm.size(), false);
    for (auto p : perm) {
        if (p >= perm.size() || seen[p]) throw std::invalid_argument("MultiPoly::permuted: not a permutation");
        seen[p] = true;
    }
    MultiPoly r(vars_);
    for (const auto& [k, c] : terms_) {
        Key nk = 0;
        for (std::size_t i = 0; i < vars_.size(); ++i) nk |= Key{exponent(k, i)} << shift(perm[i]);
        r.terms_[nk] = c;
    }
    return r;
}

MultiPoly MultiPoly::with_vars(const std::vector<std::string>& vars) const {
    MultiPoly r(vars);
    std::vector<std::size_t> target(vars_.size(), max_vars);
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        const auto it = std::find(vars.begin(), vars.end(), vars_[i]);
        if (it != vars.end()) target[i] = static_cast<std::size_t>(it - vars.begin());
    }
    for (const auto& [k, c] : terms_) {
        Key nk = 0;
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            const unsigned e = exponent(k, i);
            if (e == 0) continue;
            if (target[i] == max_vars)
                throw std::invalid_argument("MultiPoly::with_vars: variable " + vars_[i] + " would be lost");
            nk |= Key{e} << shift(target[i]);
        }
        r.terms_[nk] = c;
    }
    return r;
}

unsigned MultiPoly::degree_in(const std::string& var) const {
    const std::size_t v = var_index(var);
    unsigned d = 0;
    for (const auto& [k, c] : terms_) d = std::max(d, exponent(k, v));
    return d;
}

unsigned MultiPoly::total_degree() const {
    unsigned d = 0;
    for (const auto& [k, c] : terms_) {
        unsigned s = 0;
        for (std::size_t v = 0; v < vars_.size(); ++v) s += exponent(k, v);
        d = std::max(d, s);
    }
    return d;
}

MultiPoly MultiPoly::coefficient_in(const std::string& var, unsigned e) const {
    const std::size_t v = var_index(var);
    const Key mask = Key{0xff} << shift(v);
    MultiPoly r(vars_);
    for (const auto& [k, c] : terms_)
        if (exponent(k, v) == e) r.terms_[k & ~mask] = c;
    return r;
}

MultiPoly MultiPoly::exact_divide(const MultiPoly& divisor) const {
    require_same_vars(divisor, "exact_divide");
    if (divisor.is_zero()) throw std::domain_error("MultiPoly::exact_divide: division by zero");
    const Key lead = divisor.terms_.rbegin()->first;
    const BigRational lead_c = divisor.terms_.rbegin()->second;
    MultiPoly rem = *this;
    MultiPoly quo(vars_);
    while (!rem.is_zero()) {
        const Key k = rem.terms_.rbegin()->first;
        // Divisibility of monomials: every byte of k must be at least the byte of lead.
        for (std::size_t v = 0; v < vars_.size(); ++v)
            if (exponent(k, v) < exponent(lead, v))
                throw std::domain_error("MultiPoly::exact_divide: nonzero remainder");
        MultiPoly t(vars_);
        t.terms_[k - lead] = rem.terms_.rbegin()->second / lead_c;
        quo += t;
        rem -= t * divisor;
    }
    return quo;
}

BigRational MultiPoly::content() const {
    BigRational g = 0;
    for (const auto& [k, c] : terms_) g = rational_gcd(g, c);
    return g;
}

MultiPoly MultiPoly::primitive() const {
    if (is_zero()) return *this;
    MultiPoly r = *this;
    const BigRational g = content();
    for (auto& [k, c] : r.terms_) c /= g;
    return r;
}

}  // namespace sicp
