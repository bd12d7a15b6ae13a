#include "sicp/classification.hpp"

#include "sicp/pinched_torus.hpp"
#include "sicp/poly/resultant.hpp"
#include "sicp/poly/symmetric.hpp"
#include "sicp/poly/text.hpp"

#include <boost/math/constants/constants.hpp>

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <mutex>
#include <cmath>
#include <numbers>
#include <thread>

namespace sicp {

namespace {

namespace mp = boost::multiprecision;

const std::vector<std::string> xyz{"x", "y", "z"};
const std::vector<std::string> txyz{"t", "x", "y", "z"};

MultiPoly var(const std::vector<std::string>& vars, const std::string& name) { return MultiPoly::variable(vars, name); }
MultiPoly num(const std::vector<std::string>& vars, const BigRational& c) { return MultiPoly::constant(vars, c); }

/// Renames the i-th variable of f to targets[i], inside the variable list `vars`.
MultiPoly instantiate(const MultiPoly& f, const std::vector<std::string>& targets, const std::vector<std::string>& vars) {
    std::vector<std::size_t> idx;
    for (const auto& name : targets) idx.push_back(static_cast<std::size_t>(std::find(vars.begin(), vars.end(), name) - vars.begin()));
    MultiPoly out(vars);
    for (const auto& [e, c] : f.terms()) {
        MultiPoly::Exponents g(vars.size(), 0);
        for (std::size_t i = 0; i < e.size(); ++i) g[idx[i]] += e[i];
        out.add_term(g, c);
    }
    return out;
}

/// g(values[0], values[1], ...) with g over its own variables.
MultiPoly compose(const MultiPoly& g, const std::vector<MultiPoly>& values) {
    const auto& vars = values.front().vars();
    std::vector<std::vector<MultiPoly>> powers(values.size());
    for (std::size_t v = 0; v < values.size(); ++v) {
        powers[v].push_back(num(vars, 1));
        for (unsigned k = 1; k <= g.degree_in(g.vars()[v]); ++k) powers[v].push_back(powers[v].back() * values[v]);
    }
    MultiPoly out(vars);
    for (const auto& [e, c] : g.terms()) {
        MultiPoly term = num(vars, c);
        for (std::size_t v = 0; v < e.size(); ++v)
            if (e[v]) term = term * powers[v][e[v]];
        out += term;
    }
    return out;
}

MultiPoly cosine_numerator(const std::vector<std::string>& vars, const std::string& u, const std::string& v) {
    const MultiPoly x = var(vars, u), y = var(vars, v);
    return num(vars, -11) + BigRational(9) * x * x + BigRational(9) * y * y - BigRational(27) * x * x * y * y -
           BigRational(24) * x * y;
}

MultiPoly cosine_denominator(const std::vector<std::string>& vars, const std::string& u, const std::string& v) {
    return num(vars, 1) + BigRational(3) * var(vars, u) * var(vars, v);
}

template <class T>
struct Compiled {
    std::array<CompiledPoly<T>, 7> polys;  // F, F1..F4, G, f(x,y,z)
    Compiled() {
        polys[0] = CompiledPoly<T>(F_poly());
        for (int i = 1; i <= 4; ++i) polys[static_cast<std::size_t>(i)] = CompiledPoly<T>(F_i_poly(i));
        polys[5] = CompiledPoly<T>(G_poly());
        polys[6] = CompiledPoly<T>(f_xyz_poly());
    }
};

template <class T>
const Compiled<T>& compiled() {
    static const Compiled<T> c;
    return c;
}

/// dF_i/d(a, b, c, d), i = 1..4, for Gauss-Newton.
struct Gradients {
    std::array<std::array<CompiledPoly<HighFloat>, 4>, 4> d;
    Gradients() {
        for (int i = 0; i < 4; ++i)
            for (std::size_t v = 0; v < 4; ++v)
                d[static_cast<std::size_t>(i)][v] = CompiledPoly<HighFloat>(F_i_poly(i + 1).derivative(quad_vars()[v]));
    }
};

const Gradients& gradients() {
    static const Gradients g;
    return g;
}

double to_d(const HighFloat& v) { return v.convert_to<double>(); }
double to_d(double v) { return v; }
double to_d(const BigRational& v) { return v.get_d(); }

std::string unipoly_text(const UniPoly<BigRational>& p, const std::string& v) {
    MultiPoly m({v});
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) m.add_term({static_cast<unsigned>(i)}, p.coeffs()[i]);
    return to_text(m);
}

DerivationItem compare(const std::string& name, const MultiPoly& derived, const std::string& listed_text,
                       const std::vector<std::string>& vars) {
    DerivationItem item;
    item.name = name;
    item.derived_terms = derived.term_count();
    MultiPoly listed;
    try {
        listed = parse_poly(listed_text, vars);
    } catch (const PolyParseError& e) {
        item.first_mismatch = std::string("listed table does not parse: ") + e.what();
        return item;
    }
    item.listed_terms = listed.term_count();
    const MultiPoly diff = derived - listed;
    item.match = diff.is_zero();
    item.mismatched_monomials = diff.term_count();
    if (!item.match) {
        const auto e = diff.leading_exponents();
        std::string mono = term_text(e, BigRational(1), vars);
        item.first_mismatch = mono + ": derived " + derived.coefficient(e).get_str() + ", listed " +
                              listed.coefficient(e).get_str();
    }
    return item;
}

/// Runs fn(i) for i in [0, n) on up to `workers` threads.
template <class Fn>
void parallel_for(std::size_t n, unsigned workers, Fn fn) {
    workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(n, 1))));
    if (workers == 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < n; i = next++) {
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard lock(failure_mutex);
                    if (!failure) failure = std::current_exception();
                }
            }
        });
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
}

/// Real roots of x^3 - p x^2 + q x - r, ascending; empty unless all three are real.
std::optional<std::array<HighFloat, 3>> real_cubic_roots(const HighFloat& p, const HighFloat& q, const HighFloat& r) {
    const HighFloat B = -p, C = q, D = -r;
    const HighFloat P = C - B * B / 3;
    const HighFloat Q = 2 * B * B * B / 27 - B * C / 3 + D;
    const HighFloat disc = 4 * P * P * P + 27 * Q * Q;  // negative of the discriminant
    const HighFloat scale = mp::abs(4 * P * P * P) + 27 * Q * Q;
    if (disc > HighFloat("1e-40") * scale || P >= 0) return std::nullopt;
    const HighFloat m = 2 * mp::sqrt(-P / 3);
    HighFloat arg = 3 * Q / (2 * P) * mp::sqrt(-3 / P);
    arg = std::clamp<HighFloat>(arg, HighFloat(-1), HighFloat(1));
    const HighFloat base = mp::acos(arg) / 3;
    const HighFloat two_pi_3 = 2 * boost::math::constants::pi<HighFloat>() / 3;
    std::array<HighFloat, 3> x;
    for (int k = 0; k < 3; ++k) {
        HighFloat v = m * mp::cos(base - two_pi_3 * k) - B / 3;
        for (int it = 0; it < 4; ++it) {
            const HighFloat f = ((v - p) * v + q) * v - r;
            const HighFloat df = (3 * v - 2 * p) * v + q;
            if (df == 0) break;
            v -= f / df;
        }
        x[static_cast<std::size_t>(k)] = v;
    }
    std::sort(x.begin(), x.end());
    return x;
}

struct HighState {
    HighFloat t, p, q, r;
    SymmetricState<HighFloat> abcd() const { return SymmetricState<HighFloat>::from_triple(t, p, q, r); }
};

HighFloat max_abs_F(const SymmetricState<HighFloat>& s) {
    HighFloat m = 0;
    for (const auto& v : s.F_values()) m = std::max<HighFloat>(m, mp::abs(v));
    return m;
}

/// Gauss-Newton on F1..F4 as functions of (p, q, r) at fixed t. Steps that
/// do not reduce the residual are rejected.
void polish(HighState& s) {
    const auto& grad = gradients();
    HighFloat res = max_abs_F(s.abcd());
    for (int it = 0; it < 8 && res > HighFloat("1e-45"); ++it) {
        const auto st = s.abcd();
        const std::array<HighFloat, 4> point{st.a, st.b, st.c, st.d};
        const auto F = st.F_values();
        // d(a,b,c,d)/d(p,q,r)
        const HighFloat M[4][3] = {{1, 0, 0}, {s.t, 1, 0}, {0, s.t, 1}, {0, 0, s.t}};
        HighFloat J[4][3];
        for (int i = 0; i < 4; ++i) {
            HighFloat dF[4];
            for (int v = 0; v < 4; ++v)
                dF[v] = grad.d[static_cast<std::size_t>(i)][static_cast<std::size_t>(v)](std::span<const HighFloat>(point));
            for (int k = 0; k < 3; ++k) {
                J[i][k] = 0;
                for (int v = 0; v < 4; ++v) J[i][k] += dF[v] * M[v][k];
            }
        }
        HighFloat A[3][4];
        for (int r = 0; r < 3; ++r) {
            for (int c = 0; c < 3; ++c) {
                A[r][c] = 0;
                for (int i = 0; i < 4; ++i) A[r][c] += J[i][r] * J[i][c];
            }
            A[r][3] = 0;
            for (int i = 0; i < 4; ++i) A[r][3] -= J[i][r] * F[static_cast<std::size_t>(i)];
        }
        bool singular = false;
        for (int c = 0; c < 3 && !singular; ++c) {
            int piv = c;
            for (int r = c + 1; r < 3; ++r)
                if (mp::abs(A[r][c]) > mp::abs(A[piv][c])) piv = r;
            if (A[piv][c] == 0) {
                singular = true;
                break;
            }
            for (int k = 0; k < 4; ++k) std::swap(A[c][k], A[piv][k]);
            for (int r = 0; r < 3; ++r) {
                if (r == c) continue;
                const HighFloat f = A[r][c] / A[c][c];
                for (int k = c; k < 4; ++k) A[r][k] -= f * A[c][k];
            }
        }
        if (singular) break;
        HighState next = s;
        next.p += A[0][3] / A[0][0];
        next.q += A[1][3] / A[1][1];
        next.r += A[2][3] / A[2][2];
        const HighFloat nres = max_abs_F(next.abcd());
        if (!(nres < res)) break;
        s = next;
        res = nres;
    }
}

int case_iv_count(const BigRational& t) { return static_cast<int>(case_iv_solutions(t).size()); }

/// Durand-Kerner on a monic quartic given ascending coefficients.
std::vector<std::complex<double>> quartic_roots(const std::array<double, 5>& c) {
    std::vector<std::complex<double>> z(4);
    const std::complex<double> seed(0.4, 0.9);
    for (std::size_t i = 0; i < 4; ++i) z[i] = std::pow(seed, static_cast<double>(i));
    auto eval = [&](std::complex<double> x) {
        std::complex<double> acc = 0;
        for (int k = 4; k >= 0; --k) acc = acc * x + c[static_cast<std::size_t>(k)];
        return acc;
    };
    for (int it = 0; it < 2000; ++it) {
        double delta = 0;
        for (std::size_t i = 0; i < 4; ++i) {
            std::complex<double> den = 1;
            for (std::size_t j = 0; j < 4; ++j)
                if (j != i) den *= z[i] - z[j];
            if (std::abs(den) == 0) den = 1e-300;
            const auto step = eval(z[i]) / den;
            z[i] -= step;
            delta = std::max(delta, std::abs(step));
        }
        if (delta < 1e-15) break;
    }
    std::sort(z.begin(), z.end(), [](auto a, auto b) { return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag(); });
    return z;
}

CaseState make_state(std::string label, std::string branch, const SymmetricState<HighFloat>& s, std::string disposition) {
    CaseState out;
    out.label = std::move(label);
    out.branch = std::move(branch);
    out.state = {to_d(s.a), to_d(s.b), to_d(s.c), to_d(s.d)};
    const auto q = out.state.quartic();
    out.quartic_roots = quartic_roots(q);
    for (const auto& z : out.quartic_roots)
        if (std::fabs(z.imag()) < 1e-6) ++out.real_roots;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j)
            if (std::abs(out.quartic_roots[i] - out.quartic_roots[j]) < 1e-5) out.repeated_root = true;
    out.root_at_inv_sqrt3 = mp::abs(s.G()) < HighFloat("1e-30");
    out.residual = to_d(max_abs_F(s));
    out.satisfies_system = out.residual <= 1e-9;
    out.disposition = std::move(disposition);
    return out;
}

}  // namespace

// ---------------------------------------------------------------- tables

const MultiPoly& F_poly() {
    static const MultiPoly p = parse_poly(data::F_text, triple_vars());
    return p;
}

const MultiPoly& F_i_poly(int i) {
    static const std::array<MultiPoly, 4> p{parse_poly(data::F1_text, quad_vars()), parse_poly(data::F2_text, quad_vars()),
                                            parse_poly(data::F3_text, quad_vars()), parse_poly(data::F4_text, quad_vars())};
    if (i < 1 || i > 4) throw std::out_of_range("F_i_poly: index must be 1..4");
    return p[static_cast<std::size_t>(i - 1)];
}

const MultiPoly& G_poly() {
    static const MultiPoly p = parse_poly(data::G_text, quad_vars());
    return p;
}

const MultiPoly& f_xyz_poly() {
    static const MultiPoly p = expand_elementary(F_poly(), xyz);
    return p;
}

template <class T>
T F_of(const T& p, const T& q, const T& r) {
    const std::array<T, 3> v{p, q, r};
    return compiled<T>().polys[0](std::span<const T>(v));
}

template <class T>
T F_i_of(int i, const T& a, const T& b, const T& c, const T& d) {
    if (i < 1 || i > 4) throw std::out_of_range("F_i_of: index must be 1..4");
    const std::array<T, 4> v{a, b, c, d};
    return compiled<T>().polys[static_cast<std::size_t>(i)](std::span<const T>(v));
}

template <class T>
T G_of(const T& a, const T& b, const T& c, const T& d) {
    const std::array<T, 4> v{a, b, c, d};
    return compiled<T>().polys[5](std::span<const T>(v));
}

template <class T>
T f_of(const T& x, const T& y, const T& z) {
    const std::array<T, 3> v{x, y, z};
    return compiled<T>().polys[6](std::span<const T>(v));
}

#define SICP_INSTANTIATE(T)                                               \
    template T F_of<T>(const T&, const T&, const T&);                     \
    template T F_i_of<T>(int, const T&, const T&, const T&, const T&);    \
    template T G_of<T>(const T&, const T&, const T&, const T&);           \
    template T f_of<T>(const T&, const T&, const T&);                     \
    template std::vector<Key5Condition> key5_check<T>(const SymmetricState<T>&, double);

// ------------------------------------------------------------ derivation

bool DerivationReport::all_match() const {
    return !items.empty() && std::all_of(items.begin(), items.end(), [](const auto& i) { return i.match; });
}

MultiPoly cleared_cosine_identity() {
    const MultiPoly Nxy = cosine_numerator(xyz, "x", "y"), Nyz = cosine_numerator(xyz, "y", "z"),
                    Nzx = cosine_numerator(xyz, "z", "x");
    const MultiPoly Dxy = cosine_denominator(xyz, "x", "y"), Dyz = cosine_denominator(xyz, "y", "z"),
                    Dzx = cosine_denominator(xyz, "z", "x");
    const MultiPoly Dxy2 = Dxy * Dxy, Dyz2 = Dyz * Dyz, Dzx2 = Dzx * Dzx;
    const MultiPoly DDD = Dxy * Dyz * Dzx;
    MultiPoly sum = Nxy * Nxy * Dyz2 * Dzx2 + Nyz * Nyz * Dxy2 * Dzx2 + Nzx * Nzx * Dxy2 * Dyz2;
    return BigRational(16) * sum - BigRational(4096) * DDD * DDD - BigRational(2) * Nxy * Nyz * Nzx * DDD;
}

DerivationReport verify_derivations(const ListedTables& listed) {
    const auto start = std::chrono::steady_clock::now();
    DerivationReport report;

    const MultiPoly cleared = cleared_cosine_identity();
    report.cleared_content = cleared.content();
    const MultiPoly f = cleared * BigRational(1 / report.cleared_content);
    report.items.push_back(compare("F", symmetric_reduce(f, triple_vars()), listed.F, triple_vars()));

    auto fe = [&](const std::string& u, const std::string& v, const std::string& w) { return instantiate(f, {u, v, w}, txyz); };
    const MultiPoly F1 = fe("x", "y", "z") + fe("t", "y", "z") + fe("t", "x", "z") + fe("t", "x", "y");

    const MultiPoly gsym = divided_difference(fe("t", "x", "y"), "y", "z", DifferenceMode::substitute);
    auto g = [&](const std::string& A, const std::string& B, const std::string& C, const std::string& D) {
        return instantiate(gsym, {A, B, C, D}, txyz);
    };
    const MultiPoly F2 = g("t", "x", "y", "z") + g("t", "y", "z", "x") + g("t", "z", "x", "y") + g("x", "y", "t", "z") +
                         g("x", "z", "t", "y") + g("y", "z", "x", "t");

    const MultiPoly hsym = divided_difference(gsym, "x", "y", DifferenceMode::swap);
    auto h = [&](const std::string& A, const std::string& B, const std::string& C, const std::string& D) {
        return instantiate(hsym, {A, B, C, D}, txyz);
    };
    const MultiPoly F3 = h("t", "x", "y", "z") + h("t", "y", "z", "x") + h("t", "z", "x", "y") + h("x", "y", "t", "z") +
                         h("x", "z", "t", "y") + h("y", "x", "t", "z") + h("z", "x", "y", "t") + h("x", "y", "z", "t") +
                         h("y", "z", "x", "t") + h("z", "y", "t", "x") + h("y", "z", "t", "x") + h("z", "x", "t", "y");
    const MultiPoly F4 = divided_difference(hsym, "t", "x", DifferenceMode::swap);

    const std::array<std::pair<const MultiPoly*, const std::string*>, 4> rest{
        {{&F1, &listed.F1}, {&F2, &listed.F2}, {&F3, &listed.F3}, {&F4, &listed.F4}}};
    for (std::size_t i = 0; i < rest.size(); ++i)
        report.items.push_back(compare("F" + std::to_string(i + 1), symmetric_reduce(*rest[i].first, quad_vars()),
                                       *rest[i].second, quad_vars()));

    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

// ------------------------------------------------------------ identities

double trig_identity_residual(double A, double B) {
    const double C = -A - B;
    const double a = std::cos(A), b = std::cos(B), c = std::cos(C);
    return a * a + b * b + c * c - 1 - 2 * a * b * c;
}

double sid_identity_residual(double a, double b, double c) {
    const double s1 = a + b + c;
    const double s2 = a * a + b * b + c * c;
    const double s4 = a * a * a * a + b * b * b * b + c * c * c * c;
    return s1 * (-a + b + c) * (a - b + c) * (a + b - c) - (s2 * s2 - 2 * s4);
}

// ---------------------------------------------------------- factor tests

template <class T>
std::vector<Key5Condition> key5_check(const SymmetricState<T>& s, double tol) {
    const std::array<std::pair<const char*, T>, 6> conditions{{
        {"d - 1", s.d - T(1)},
        {"3d - 1", T(3) * s.d - T(1)},
        {"9d - 1", T(9) * s.d - T(1)},
        {"b + 3d + 3", s.b + T(3) * s.d + T(3)},
        {"3b + 9d + 1", T(3) * s.b + T(9) * s.d + T(1)},
        {"9b + 27d + 19", T(9) * s.b + T(27) * s.d + T(19)},
    }};
    std::vector<Key5Condition> out;
    for (const auto& [name, value] : conditions) {
        const double v = to_d(T(value));
        bool zero;
        if constexpr (std::is_same_v<T, BigRational>)
            zero = value == 0;
        else
            zero = std::fabs(v) <= tol;
        if (zero) out.push_back({name, v});
    }
    return out;
}

SICP_INSTANTIATE(double)
SICP_INSTANTIATE(HighFloat)
SICP_INSTANTIATE(BigRational)

// --------------------------------------------------------------- case iv

bool case_iv_excluded(const BigRational& t) {
    if (t == 0) return true;
    return std::fabs(std::fabs(t.get_d()) - 1 / std::sqrt(3.0)) < 1e-9;
}

UniPoly<BigRational> case_iv_resultant(const BigRational& t) {
    if (case_iv_excluded(t)) throw CaseIVError("case iv: t = " + to_string(t) + " is excluded (t = 0 or |t| = 1/sqrt3)");
    const auto& vars = triple_vars();
    const MultiPoly p = var(vars, "p"), r = var(vars, "r");
    const MultiPoly T = num(vars, t);
    // 19 + 9b + 27d = 0 with b = tp + q, d = tr.
    const MultiPoly q = (num(vars, 19) + BigRational(9) * T * p + BigRational(27) * T * r) * BigRational(-1, 9);
    const std::vector<MultiPoly> abcd{T + p, T * p + q, T * q + r, T * r};
    const MultiPoly e2 = compose(parse_poly(data::case_iv_quadric_text, quad_vars()), abcd);
    const MultiPoly e3 = compose(parse_poly(data::case_iv_sextic_text, quad_vars()), abcd);
    const MultiPoly R = resultant(e2, e3, "p");
    if (R.is_zero()) throw CaseIVError("case iv: resultant vanishes identically at t = " + to_string(t));
    return to_univariate(R, "r");
}

UniPoly<BigRational> case_iv_univariate(const BigRational& t) {
    const UniPoly<BigRational> raw = case_iv_resultant(t);
    const UniPoly<BigRational> clean = primitive_part(square_free_part(primitive_part(raw)));
    if (clean.degree() != 6)
        throw CaseIVError("case iv: expected degree 6 after cleanup, got " + std::to_string(clean.degree()),
                          unipoly_text(raw, "r"));
    return clean;
}

std::vector<CaseIVSolution> case_iv_solutions(const BigRational& t, bool square_free) {
    const UniPoly<BigRational> U = square_free ? case_iv_univariate(t) : case_iv_resultant(t);
    const auto& vars = triple_vars();
    const MultiPoly P = var(vars, "p"), R = var(vars, "r"), T = num(vars, t);
    const MultiPoly Q = (num(vars, 19) + BigRational(9) * T * P + BigRational(27) * T * R) * BigRational(-1, 9);
    const std::vector<MultiPoly> abcd{T + P, T * P + Q, T * Q + R, T * R};
    const MultiPoly e2 = compose(parse_poly(data::case_iv_quadric_text, quad_vars()), abcd);
    const MultiPoly e3 = compose(parse_poly(data::case_iv_sextic_text, quad_vars()), abcd);
    const CompiledPoly<HighFloat> e3c(e3);
    std::array<CompiledPoly<HighFloat>, 3> e2c;
    for (unsigned k = 0; k <= 2; ++k) e2c[k] = CompiledPoly<HighFloat>(e2.coefficient_in("p", k));

    const HighFloat th = rational_cast<HighFloat>(t);
    const HighFloat inv_sqrt3 = 1 / mp::sqrt(HighFloat(3));
    std::vector<CaseIVSolution> out;
    for (const HighFloat& r : real_roots_high(U)) {
        const std::array<HighFloat, 3> at_r{0, 0, r};
        const HighFloat A = e2c[2](at_r), B = e2c[1](at_r), C = e2c[0](at_r);
        std::vector<HighFloat> ps;
        if (mp::abs(A) <= HighFloat("1e-40") * (mp::abs(B) + mp::abs(C))) {
            if (B != 0) ps.push_back(-C / B);
        } else {
            HighFloat disc = B * B - 4 * A * C;
            if (disc < 0 && disc > -HighFloat("1e-40") * B * B) disc = 0;
            if (disc >= 0) {
                const HighFloat s = mp::sqrt(disc);
                const HighFloat qq = -(B + (B >= 0 ? s : HighFloat(-s))) / 2;
                if (qq != 0) ps.push_back(C / qq);
                ps.push_back(qq / A);
                if (qq == 0) ps.push_back(HighFloat(0));
            }
        }
        for (const HighFloat& p : ps) {
            const std::array<HighFloat, 3> at{p, 0, r};
            if (mp::abs(e3c(at)) > HighFloat("1e-30") * (1 + e3c.magnitude(at))) continue;
            HighState s{th, p, -(19 + 9 * th * p + 27 * th * r) / 9, r};
            polish(s);
            const auto roots = real_cubic_roots(s.p, s.q, s.r);
            if (!roots) continue;
            const auto st = s.abcd();
            const HighFloat G = st.G();
            if (mp::abs(G) <= HighFloat("1e-9")) continue;
            bool near_pole = false;
            for (const auto& x : *roots) near_pole |= mp::abs(mp::abs(x) - inv_sqrt3) < HighFloat("1e-9");
            if (near_pole) continue;

            CaseIVSolution sol;
            sol.t = to_d(th);
            for (std::size_t i = 0; i < 3; ++i) sol.triple[i] = to_d((*roots)[i]);
            sol.p = to_d(s.p);
            sol.q = to_d(s.q);
            sol.r = to_d(s.r);
            sol.residual = to_d(max_abs_F(st));
            const auto& [x, y, z] = *roots;
            HighFloat fr = 0;
            for (const auto& v : {f_of<HighFloat>(x, y, z), f_of<HighFloat>(th, y, z), f_of<HighFloat>(th, x, z),
                                  f_of<HighFloat>(th, x, y)})
                fr = std::max<HighFloat>(fr, mp::abs(v));
            sol.f_residual = to_d(fr);
            sol.G = to_d(G);

            const bool duplicate = std::any_of(out.begin(), out.end(), [&](const CaseIVSolution& o) {
                for (std::size_t i = 0; i < 3; ++i)
                    if (std::fabs(o.triple[i] - sol.triple[i]) > 1e-6) return false;
                return true;
            });
            if (!duplicate) out.push_back(sol);
        }
    }
    return out;
}

std::vector<BigRational> make_grid(const BigRational& from, const BigRational& to, const BigRational& step) {
    if (step <= 0) throw std::invalid_argument("make_grid: step must be positive");
    std::vector<BigRational> out;
    const BigRational limit = to + step / 1000;
    for (BigRational t = from; t <= limit; t += step) {
        BigRational v = t;
        v.canonicalize();
        out.push_back(v);
    }
    return out;
}

ScanResult scan_table(const std::vector<BigRational>& grid, unsigned workers, int bisection_steps) {
    ScanResult result;
    result.rows.resize(grid.size());
    parallel_for(grid.size(), workers, [&](std::size_t i) {
        ScanRow& row = result.rows[i];
        row.t = grid[i];
        row.t_value = grid[i].get_d();
        if (case_iv_excluded(grid[i])) {
            row.skipped = true;
            row.note = "excluded: t = 0 or |t| = 1/sqrt3";
            return;
        }
        try {
            row.count = case_iv_count(grid[i]);
        } catch (const CaseIVError& e) {
            row.skipped = true;
            row.note = e.what();
        }
    });

    struct Pending {
        BigRational lo, hi;
        int count_lo, count_hi;
    };
    std::vector<Pending> pending;
    const ScanRow* prev = nullptr;
    for (const auto& row : result.rows) {
        if (row.skipped) continue;
        if (prev && prev->count != row.count) pending.push_back({prev->t, row.t, prev->count, row.count});
        prev = &row;
    }
    result.breakpoints.resize(pending.size());
    parallel_for(pending.size(), workers, [&](std::size_t i) {
        Pending b = pending[i];
        for (int step = 0; step < bisection_steps; ++step) {
            BigRational mid = (b.lo + b.hi) / 2;
            if (case_iv_excluded(mid)) mid = (b.lo + 3 * b.hi) / 4;
            mid.canonicalize();
            int c;
            try {
                c = case_iv_count(mid);
            } catch (const CaseIVError&) {
                break;
            }
            if (c == b.count_lo)
                b.lo = mid;
            else
                b.hi = mid;
        }
        result.breakpoints[i] = {b.lo.get_d(), b.hi.get_d(), b.count_lo, b.count_hi};
    });
    return result;
}

// -------------------------------------------------------------- fake SIC

FakeSic fake_sic(double tol) {
    FakeSic out;
    const double s = std::sqrt(26 - 2 * std::sqrt(97.0));
    out.c = -8.0 / 27.0 * s;
    out.vieta_b = BigRational(-66, 27);
    out.vieta_d = BigRational(3, 27);
    out.vieta_b.canonicalize();
    out.vieta_d.canonicalize();
    const auto roots = real_roots(UniPoly<double>({3.0, 8 * s, -66.0, 0.0, 27.0}), 1e-14);
    if (roots.size() != 4) throw std::runtime_error("fake_sic: expected four real roots, found " + std::to_string(roots.size()));
    std::copy(roots.begin(), roots.end(), out.roots.begin());

    const double phi3 = std::atan(out.roots[0]);
    std::vector<ProjectivePoint> pts{base_point_1(), base_point_2(), z_of(0.0, phi3)};
    for (std::size_t i = 1; i < 4; ++i) {
        const double phi = std::atan(out.roots[i]);
        const SigmaSet set = sigma_solutions(phi, phi3, 0.0);
        if (set.unconstrained || set.values.empty())
            throw std::runtime_error("fake_sic: no admissible phase for root " + std::to_string(out.roots[i]));
        const double sigma = std::fabs(set.values.back());
        out.sigmas[i - 1] = sigma;
        pts.push_back(z_of(sigma, phi));
        pts.push_back(z_of(-sigma, phi));
    }
    out.config = Configuration(std::move(pts));
    for (std::size_t i = 0; i < out.config.size(); ++i)
        for (std::size_t j = i + 1; j < out.config.size(); ++j)
            if (is_correctly_separated(out.config[i], out.config[j], tol)) {
                out.separated.emplace_back(i, j);
                if (i >= 3) out.extra_pairs.emplace_back(i, j);
            }
    return out;
}

// -------------------------------------------------------- cases i - iii

std::vector<CaseState> case_i_analysis() {
    using S = SymmetricState<HighFloat>;
    const HighFloat r3 = mp::sqrt(HighFloat(3));
    std::vector<CaseState> out;
    const HighFloat t = 2;
    out.push_back(make_state("b = (27c^2 - 8)/12, a + 3c = 0 (roots t, t, -1/3t, -1/3t at t = 2)", "i",
                             S::from_roots(t, t, -1 / (3 * t), -1 / (3 * t)), "pair of double roots; discarded"));
    out.push_back(make_state("b = -2/3", "i", S{0, HighFloat(-2) / 3, 0, HighFloat(1) / 9},
                             "all roots are +-1/sqrt3; isometric to the one-parameter family"));
    for (int sign : {1, -1})
        out.push_back(make_state(sign > 0 ? "b = -10/3, c = 8/(3 sqrt3)" : "b = -10/3, c = -8/(3 sqrt3)", "i",
                                 S{0, HighFloat(-10) / 3, sign * 8 / (3 * r3), HighFloat(1) / 9},
                                 "one root is +-1/sqrt3; isometric to the one-parameter family"));
    const HighFloat c = -HighFloat(8) / 27 * mp::sqrt(26 - 2 * mp::sqrt(HighFloat(97)));
    out.push_back(make_state("b = -22/9, c = -(8/27) sqrt(26 - 2 sqrt97)", "i", S{0, HighFloat(-22) / 9, c, HighFloat(1) / 9},
                             "four distinct real roots; the fake SIC configuration"));
    return out;
}

std::vector<CaseState> case_ii_iii_solutions() {
    using S = SymmetricState<HighFloat>;
    const HighFloat r3 = mp::sqrt(HighFloat(3));
    std::vector<CaseState> out;
    out.push_back(make_state("(0, -10/3, 0, 1)", "ii", S{0, HighFloat(-10) / 3, 0, 1},
                             "roots +-sqrt3, +-1/sqrt3 (each simple); +-1/sqrt3 is a root"));
    for (int sign : {1, -1}) {
        const std::string sg = sign > 0 ? "" : "-";
        out.push_back(make_state("(" + sg + "8/sqrt3, -6, 0, 1)", "iii", S{sign * 8 / r3, -6, 0, 1},
                                 "+-1/sqrt3 is a root"));
        out.push_back(make_state("(" + sg + "8/sqrt3, 0, 0, -1)", "iii", S{sign * 8 / r3, 0, 0, -1},
                                 "two non-real roots; does not solve the system"));
        out.push_back(make_state("(" + sg + "10/sqrt3, 0, " + (sign > 0 ? "-" : "") + "2 sqrt3, -1)", "iii",
                                 S{sign * 10 / r3, 0, -sign * 2 * r3, -1},
                                 "solves the system on the same line; +-1/sqrt3 is a root"));
    }
    return out;
}

// ---------------------------------------------------- necessity and search

NecessityReport necessity_check(const Configuration& c, double tol) {
    const ProjectivePoint z1 = base_point_1(), z2 = base_point_2();
    std::vector<double> tangents;
    bool has1 = false, has2 = false;
    for (const auto& p : c) {
        if (p.same_as(z1, tol)) {
            has1 = true;
            continue;
        }
        if (p.same_as(z2, tol)) {
            has2 = true;
            continue;
        }
        const TorusCoord tc = torus_coord_of(p, tol);
        if (tc.is_pinch()) throw std::domain_error("necessity_check: configuration contains the pinch point");
        tangents.push_back(std::tan(tc.phi()));
    }
    if (!has1 || !has2) throw std::invalid_argument("necessity_check: both base points must be present");

    NecessityReport rep;
    rep.tangents = tangents;
    const std::size_t n = tangents.size();
    std::vector<HighFloat> x;
    for (double v : tangents) x.emplace_back(v);
    HighFloat mF = 0, mFi = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) {
                const auto tr = TripleState<HighFloat>::from_roots(x[i], x[j], x[k]);
                mF = std::max<HighFloat>(mF, mp::abs(F_of<HighFloat>(tr.p, tr.q, tr.r)));
                ++rep.triples;
                for (std::size_t l = k + 1; l < n; ++l) {
                    mFi = std::max<HighFloat>(mFi, max_abs_F(SymmetricState<HighFloat>::from_roots(x[i], x[j], x[k], x[l])));
                    ++rep.quadruples;
                }
            }
    rep.max_F = to_d(mF);
    rep.max_F_i = to_d(mFi);
    return rep;
}

std::vector<std::size_t> max_separated_clique(const Configuration& c, double tol) {
    const std::size_t n = c.size();
    if (n > 20) throw std::invalid_argument("max_separated_clique: at most 20 points");
    std::vector<std::uint32_t> adj(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (is_correctly_separated(c[i], c[j], tol)) {
                adj[i] |= 1u << j;
                adj[j] |= 1u << i;
            }
    std::uint32_t best = 0;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        if (std::popcount(mask) <= std::popcount(best)) continue;
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i)
            if ((mask >> i) & 1u) ok = (mask & ~(1u << i) & ~adj[i]) == 0;
        if (ok) best = mask;
    }
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < n; ++i)
        if ((best >> i) & 1u) out.push_back(i);
    return out;
}

Configuration extension_candidates(const CaseIVSolution& s) {
    const double phi3 = std::atan(s.t);
    std::vector<ProjectivePoint> pts{base_point_1(), base_point_2(), z_of(0.0, phi3)};
    for (double x : s.triple) {
        const double phi = std::atan(x);
        const SigmaSet set = sigma_solutions(phi, phi3, 0.0);
        if (set.unconstrained) {
            // Every phase is allowed; sample the circle.
            for (int k = 0; k < 12; ++k) pts.push_back(z_of(-std::numbers::pi + (k + 0.5) * std::numbers::pi / 6, phi));
        } else {
            for (double sigma : set.values) pts.push_back(z_of(sigma, phi));
        }
    }
    return Configuration(std::move(pts));
}

ExtensionReport no_sic_extension(const std::vector<CaseIVSolution>& sols, double tol) {
    ExtensionReport rep;
    for (const auto& s : sols) {
        ++rep.solutions;
        rep.max_clique = std::max(rep.max_clique, max_separated_clique(extension_candidates(s), tol).size());
    }
    rep.sic_found = rep.max_clique >= 9;
    return rep;
}

}  // namespace sicp
