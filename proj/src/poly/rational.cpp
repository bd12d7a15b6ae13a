#include "sicp/poly/rational.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

namespace sicp {

BigRational parse_rational(std::string_view s) {
    const std::string text(s);
    auto fail = [&] { throw std::invalid_argument("not a rational number: '" + text + "'"); };
    if (s.empty()) fail();

    if (const auto slash = s.find('/'); slash != std::string_view::npos) {
        const BigRational num = parse_rational(s.substr(0, slash));
        const BigRational den = parse_rational(s.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
        return num / den;
    }

    std::size_t i = 0;
    bool neg = false;
    if (s[i] == '+' || s[i] == '-') neg = s[i++] == '-';
    std::string digits;
    long long scale = 0;  // value = digits * 10^scale
    bool seen_dot = false, any = false;
    for (; i < s.size(); ++i) {
        const char c = s[i];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            digits += c;
            any = true;
            if (seen_dot) --scale;
        } else if (c == '.' && !seen_dot) {
            seen_dot = true;
        } else {
            break;
        }
    }
    if (!any) fail();
    if (i < s.size()) {
        if (s[i] != 'e' && s[i] != 'E') fail();
        ++i;
        bool eneg = false;
        if (i < s.size() && (s[i] == '+' || s[i] == '-')) eneg = s[i++] == '-';
        if (i == s.size()) fail();
        long long e = 0;
        for (; i < s.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) fail();
            e = e * 10 + (s[i] - '0');
            if (e > 100000) fail();
        }
        scale += eneg ? -e : e;
    }
    BigInt n(digits, 10);
    BigInt p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(scale < 0 ? -scale : scale));
    BigRational q = scale < 0 ? BigRational(n, p) : BigRational(n * p);
    q.canonicalize();
    return neg ? BigRational(-q) : q;
}

BigRational rational_from_double(double v) {
    if (!std::isfinite(v)) throw std::invalid_argument("rational_from_double: non-finite value");
    BigRational q;
    mpq_set_d(q.get_mpq_t(), v);
    return q;
}

std::string to_string(const BigRational& q) { return q.get_str(); }

BigRational rational_gcd(const BigRational& a, const BigRational& b) {
    BigInt n, d;
    mpz_gcd(n.get_mpz_t(), a.get_num_mpz_t(), b.get_num_mpz_t());
    mpz_lcm(d.get_mpz_t(), a.get_den_mpz_t(), b.get_den_mpz_t());
    if (d == 0) d = 1;
    BigRational q(n, d);
    q.canonicalize();
    return q;
}

}  // namespace sicp
