#pragma once

// Polynomial conditions on the vertical tangents x = tan(phi) of points of a
// SIC set in CP^2 that contains the two base points, and the analysis of
// their solutions.

#include "sicp/poly/multipoly.hpp"
#include "sicp/poly/univariate.hpp"
#include "sicp/projective.hpp"

#include <array>
#include <complex>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sicp {

namespace data {
extern const char* const F_text;   // F(p, q, r)
extern const char* const F1_text;  // F1..F4 in (a, b, c, d)
extern const char* const F2_text;
extern const char* const F3_text;
extern const char* const F4_text;
extern const char* const G_text;                // 81 g(1/sqrt3) g(-1/sqrt3)
extern const char* const case_iv_quadric_text;  // 16 + 9a^2 + 27ac - 144d
extern const char* const case_iv_sextic_text;
}  // namespace data

inline const std::vector<std::string>& triple_vars() {
    static const std::vector<std::string> v{"p", "q", "r"};
    return v;
}
inline const std::vector<std::string>& quad_vars() {
    static const std::vector<std::string> v{"a", "b", "c", "d"};
    return v;
}

/// Parsed transcriptions, cached.
const MultiPoly& F_poly();
const MultiPoly& F_i_poly(int i);  // i = 1..4
const MultiPoly& G_poly();
/// F(p, q, r) expanded back into x, y, z.
const MultiPoly& f_xyz_poly();

template <class T>
T F_of(const T& p, const T& q, const T& r);
template <class T>
T F_i_of(int i, const T& a, const T& b, const T& c, const T& d);
template <class T>
T G_of(const T& a, const T& b, const T& c, const T& d);
template <class T>
T f_of(const T& x, const T& y, const T& z);

/// Elementary symmetric values: (a, b, c, d) of four tangents and the
/// triple values (p, q, r). T = BigRational for exact work, double or HighFloat otherwise.
template <class T>
struct SymmetricState {
    T a{}, b{}, c{}, d{};

    static SymmetricState from_roots(const T& t, const T& x, const T& y, const T& z) {
        return {t + x + y + z, t * x + t * y + t * z + x * y + y * z + z * x,
                x * y * z + t * y * z + t * x * z + t * x * y, t * x * y * z};
    }
    /// a = t + p, b = t p + q, c = t q + r, d = t r.
    static SymmetricState from_triple(const T& t, const T& p, const T& q, const T& r) {
        return {t + p, t * p + q, t * q + r, t * r};
    }
    /// g(x) = x^4 - a x^3 + b x^2 - c x + d, ascending.
    std::array<T, 5> quartic() const { return {d, -c, b, -a, T(1)}; }

    std::array<T, 4> F_values() const {
        return {F_i_of<T>(1, a, b, c, d), F_i_of<T>(2, a, b, c, d), F_i_of<T>(3, a, b, c, d),
                F_i_of<T>(4, a, b, c, d)};
    }
    T G() const { return G_of<T>(a, b, c, d); }
};

template <class T>
struct TripleState {
    T p{}, q{}, r{};
    static TripleState from_roots(const T& x, const T& y, const T& z) {
        return {x + y + z, x * y + y * z + z * x, x * y * z};
    }
};

// ---------------------------------------------------------------- derivation

struct ListedTables {
    std::string F = data::F_text;
    std::string F1 = data::F1_text;
    std::string F2 = data::F2_text;
    std::string F3 = data::F3_text;
    std::string F4 = data::F4_text;
};

struct DerivationItem {
    std::string name;
    bool match = false;
    std::size_t derived_terms = 0;
    std::size_t listed_terms = 0;
    std::size_t mismatched_monomials = 0;
    std::string first_mismatch;  // empty when matched
};

struct DerivationReport {
    BigRational cleared_content;  // content of the cleared-denominator numerator
    std::vector<DerivationItem> items;
    double seconds = 0.0;
    bool all_match() const;
};

/// Rebuilds f from the separation cosine, reduces it to F(p, q, r), builds
/// F1..F4 by symmetrization and divided differences, reduces them to
/// (a, b, c, d) and compares each with the listed table. A table that fails
/// to parse is reported as a mismatch.
DerivationReport verify_derivations(const ListedTables& listed = {});

/// The cleared numerator 16(Nxy^2 Dyz^2 Dzx^2 + ...) - 4096 (Dxy Dyz Dzx)^2 - 2 Nxy Nyz Nzx Dxy Dyz Dzx
/// of c(x,y)^2 + c(y,z)^2 + c(z,x)^2 - 1 - 2 c(x,y) c(y,z) c(z,x), over x, y, z.
MultiPoly cleared_cosine_identity();

// -------------------------------------------------------------- identities

/// cos^2 A + cos^2 B + cos^2 C - 1 - 2 cos A cos B cos C with C = -A - B.
double trig_identity_residual(double A, double B);
/// s1 (-a+b+c)(a-b+c)(a+b-c) - (s2^2 - 2 s4), s_k = a^k + b^k + c^k.
double sid_identity_residual(double a, double b, double c);

// ------------------------------------------------------------ factor tests

struct Key5Condition {
    std::string name;
    double value = 0.0;
};

/// The six factor conditions, evaluated; those vanishing within tol are returned.
template <class T>
std::vector<Key5Condition> key5_check(const SymmetricState<T>& s, double tol = 1e-9);

// ------------------------------------------------------------------ case iv

class CaseIVError : public std::runtime_error {
public:
    CaseIVError(const std::string& what, std::string raw = {})
        : std::runtime_error(what), raw_(std::move(raw)) {}
    const std::string& raw_polynomial() const { return raw_; }

private:
    std::string raw_;
};

/// Eliminates q and p from 19 + 9b + 27d and the quadric and sextic under
/// a = t + p, b = t p + q, c = t q + r, d = t r. Returns the primitive,
/// square-free resultant in r (degree 6). Throws for t = 0 or |t| = 1/sqrt3.
UniPoly<BigRational> case_iv_univariate(const BigRational& t);

/// Raw resultant before cleanup, as a polynomial in r.
UniPoly<BigRational> case_iv_resultant(const BigRational& t);

struct CaseIVSolution {
    double t = 0.0;
    std::array<double, 3> triple{};  // ascending
    double p = 0.0, q = 0.0, r = 0.0;
    double residual = 0.0;    // max |F_i|, i = 1..4
    double f_residual = 0.0;  // max |f| over the four triples drawn from (t, x, y, z)
    double G = 0.0;
};

/// With square_free = false the raw resultant is solved instead of its
/// square-free part; the surviving solutions are the same.
std::vector<CaseIVSolution> case_iv_solutions(const BigRational& t, bool square_free = true);

struct ScanRow {
    BigRational t;
    double t_value = 0.0;
    int count = 0;
    bool skipped = false;
    std::string note;
};

struct Breakpoint {
    double lo = 0.0, hi = 0.0;  // count changes inside (lo, hi)
    int count_lo = 0, count_hi = 0;
    double estimate() const { return 0.5 * (lo + hi); }
};

struct ScanResult {
    std::vector<ScanRow> rows;
    std::vector<Breakpoint> breakpoints;
};

/// True for t = 0 and |t| within 1e-9 of 1/sqrt3.
bool case_iv_excluded(const BigRational& t);

/// Solution counts over the grid, computed by `workers` threads; rows keep
/// grid order. Each count change between neighbouring rows is localized by
/// `bisection_steps` rounds of bisection.
ScanResult scan_table(const std::vector<BigRational>& grid, unsigned workers = 1, int bisection_steps = 12);

/// from, from + step, ... up to and including `to` (within step/1000), exact.
std::vector<BigRational> make_grid(const BigRational& from, const BigRational& to, const BigRational& step);

// ----------------------------------------------------------------- fake SIC

struct FakeSic {
    std::array<double, 4> roots{};  // of 27x^4 - 66x^2 + 8 sqrt(26 - 2 sqrt 97) x + 3
    BigRational vieta_b, vieta_d;   // from the rational coefficients
    double c = 0.0;
    std::array<double, 3> sigmas{};  // positive phases for roots 2..4
    /// [z1], [z2], z[0, phi3], then z[s4, phi4], z[-s4, phi4], ... z[-s6, phi6].
    Configuration config;
    std::vector<std::pair<std::size_t, std::size_t>> separated;
    std::vector<std::pair<std::size_t, std::size_t>> extra_pairs;  // among the last six
};

FakeSic fake_sic(double tol = default_tolerances.geometric);

// ------------------------------------------------------------ cases i - iii

struct CaseState {
    std::string label;
    std::string branch;
    SymmetricState<double> state;
    std::vector<std::complex<double>> quartic_roots;
    int real_roots = 0;
    bool root_at_inv_sqrt3 = false;
    bool repeated_root = false;
    double residual = 0.0;  // max |F_i| in 50-digit arithmetic
    bool satisfies_system = false;
    std::string disposition;
};

std::vector<CaseState> case_i_analysis();
std::vector<CaseState> case_ii_iii_solutions();

// ------------------------------------------------------ necessity and search

struct NecessityReport {
    std::size_t triples = 0;
    std::size_t quadruples = 0;
    double max_F = 0.0;
    double max_F_i = 0.0;
    std::vector<double> tangents;
};

/// For a configuration containing both base points: the tangents of the
/// other points, and the largest |F| over their triples and |F_i| over their
/// quadruples, evaluated in 50-digit arithmetic. Throws if a point is the pinch.
NecessityReport necessity_check(const Configuration& c, double tol = default_tolerances.geometric);

/// Largest set of mutually correctly separated points (exhaustive).
std::vector<std::size_t> max_separated_clique(const Configuration& c, double tol = default_tolerances.geometric);

struct ExtensionReport {
    std::size_t solutions = 0;
    std::size_t max_clique = 0;
    bool sic_found = false;
};

/// For each solution, the base points, z[0, atan t] and every phase choice
/// for x, y, z allowed by separation from z[0, atan t]; reports the largest
/// mutually separated subset found.
ExtensionReport no_sic_extension(const std::vector<CaseIVSolution>& sols, double tol = default_tolerances.geometric);

/// The candidate configuration used by no_sic_extension for one solution.
Configuration extension_candidates(const CaseIVSolution& s);

}  // namespace sicp
