#include "sicp/poly/text.hpp"

#include <algorithm>
#include <cctype>

namespace sicp {

namespace {

class Parser {
public:
    Parser(std::string_view s, const std::vector<std::string>& vars) : s_(s), vars_(vars) {}

    MultiPoly run() {
        MultiPoly out(vars_);
        skip();
        if (pos_ == s_.size()) throw PolyParseError("empty polynomial", pos_);
        bool first = true;
        while (pos_ < s_.size()) {
            bool neg = false;
            if (s_[pos_] == '+' || s_[pos_] == '-') {
                neg = s_[pos_] == '-';
                ++pos_;
                skip();
            } else if (!first) {
                throw PolyParseError("expected '+' or '-'", pos_);
            }
            first = false;
            BigRational coef = 1;
            MultiPoly::Exponents ex(vars_.size(), 0);
            factor(coef, ex);
            while (pos_ < s_.size() && s_[pos_] == '*' && !(pos_ + 1 < s_.size() && s_[pos_ + 1] == '*')) {
                ++pos_;
                skip();
                factor(coef, ex);
            }
            out.add_term(ex, neg ? BigRational(-coef) : coef);
        }
        return out;
    }

private:
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    void factor(BigRational& coef, MultiPoly::Exponents& ex) {
        if (pos_ >= s_.size()) throw PolyParseError("unexpected end of input", pos_);
        const char c = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            coef *= number();
        } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            const std::size_t start = pos_;
            while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
            const std::string name(s_.substr(start, pos_ - start));
            const auto it = std::find(vars_.begin(), vars_.end(), name);
            if (it == vars_.end()) throw PolyParseError("unknown variable '" + name + "'", start);
            skip();
            unsigned power = 1;
            if (pos_ < s_.size() && (s_[pos_] == '^' || s_.substr(pos_, 2) == "**")) {
                pos_ += s_[pos_] == '^' ? 1 : 2;
                skip();
                const std::size_t p0 = pos_;
                unsigned long v = 0;
                while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
                    v = v * 10 + static_cast<unsigned long>(s_[pos_] - '0');
                    if (v > MultiPoly::max_exponent) throw PolyParseError("exponent too large", p0);
                    ++pos_;
                }
                if (pos_ == p0) throw PolyParseError("expected an exponent", p0);
                power = static_cast<unsigned>(v);
            }
            ex[static_cast<std::size_t>(it - vars_.begin())] += power;
        } else {
            throw PolyParseError(std::string("unexpected character '") + c + "'", pos_);
        }
        skip();
    }

    BigRational number() {
        const std::size_t start = pos_;
        auto digits = [&] {
            while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.')) ++pos_;
        };
        digits();
        if (pos_ < s_.size() && s_[pos_] == '/' && pos_ + 1 < s_.size() &&
            std::isdigit(static_cast<unsigned char>(s_[pos_ + 1]))) {
            ++pos_;
            digits();
        }
        try {
            return parse_rational(s_.substr(start, pos_ - start));
        } catch (const std::invalid_argument&) {
            throw PolyParseError("bad number", start);
        }
    }

    std::string_view s_;
    const std::vector<std::string>& vars_;
    std::size_t pos_ = 0;
};

}  // namespace

MultiPoly parse_poly(std::string_view text, const std::vector<std::string>& vars) { return Parser(text, vars).run(); }

std::string term_text(const MultiPoly::Exponents& e, const BigRational& c, const std::vector<std::string>& vars) {
    std::string mono;
    for (std::size_t v = 0; v < e.size(); ++v) {
        if (e[v] == 0) continue;
        if (!mono.empty()) mono += '*';
        mono += vars[v];
        if (e[v] > 1) mono += '^' + std::to_string(e[v]);
    }
    if (mono.empty()) return c.get_str();
    if (c == 1) return mono;
    if (c == -1) return "-" + mono;
    return c.get_str() + "*" + mono;
}

std::string to_text(const MultiPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (const auto& [e, c] : p.terms()) {
        std::string t = term_text(e, c, p.vars());
        if (out.empty()) {
            out = t;
        } else if (t.front() == '-') {
            out += " - " + t.substr(1);
        } else {
            out += " + " + t;
        }
    }
    return out;
}

}  // namespace sicp
