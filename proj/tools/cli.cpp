#include "cli.hpp"

#include "sicp/classification.hpp"
#include "sicp/config_json.hpp"
#include "sicp/heisenberg.hpp"
#include "sicp/pinched_torus.hpp"

#include <CLI11.hpp>

#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>

namespace sicp::cli {

namespace {

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

std::string fmt(const char* f, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, v);
    return buf;
}

class RealParser {
public:
    explicit RealParser(std::string_view s) : s_(s) {}

    double run() {
        const double v = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected trailing text");
        return v;
    }

private:
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    bool eat(std::string_view w) {
        skip();
        if (s_.substr(pos_, w.size()) == w) {
            pos_ += w.size();
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& what) const {
        throw UsageError("cannot read '" + std::string(s_) + "' as a number: " + what);
    }

    double expr() {
        double sign = 1;
        if (eat('-'))
            sign = -1;
        else
            eat('+');
        double v = product();
        for (;;) {
            if (eat('/')) {
                const double d = product();
                if (d == 0) fail("division by zero");
                v /= d;
            } else if (eat('*')) {
                v *= product();
            } else {
                return sign * v;
            }
        }
    }

    // Implicit multiplication: "3pi", "2sqrt3".
    double product() {
        double v = factor();
        for (;;) {
            skip();
            if (pos_ < s_.size() && (s_.substr(pos_, 2) == "pi" || s_.substr(pos_, 4) == "sqrt" || s_[pos_] == '('))
                v *= factor();
            else
                return v;
        }
    }

    double factor() {
        skip();
        if (eat("pi")) return std::numbers::pi;
        if (eat("sqrt")) {
            const double a = eat('(') ? paren_rest() : number();
            if (a < 0) fail("square root of a negative number");
            return std::sqrt(a);
        }
        if (eat('(')) return paren_rest();
        return number();
    }

    double paren_rest() {
        const double v = expr();
        if (!eat(')')) fail("missing ')'");
        return v;
    }

    double number() {
        skip();
        const std::size_t start = pos_;
        while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.')) ++pos_;
        if (pos_ < s_.size() && (s_[pos_] == 'e' || s_[pos_] == 'E') && pos_ > start) {
            std::size_t p = pos_ + 1;
            if (p < s_.size() && (s_[p] == '-' || s_[p] == '+')) ++p;
            if (p < s_.size() && std::isdigit(static_cast<unsigned char>(s_[p]))) {
                pos_ = p;
                while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            }
        }
        if (pos_ == start) fail("expected a number");
        try {
            return std::stod(std::string(s_.substr(start, pos_ - start)));
        } catch (const std::exception&) {
            fail("bad number");
        }
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream in(s);
    for (std::string item; std::getline(in, item, sep);) out.push_back(item);
    return out;
}

cplx parse_entry(const std::string& s) {
    const auto parts = split(s, ':');
    if (parts.empty() || parts.size() > 2) throw UsageError("fiducial entries are 're' or 're:im', got '" + s + "'");
    return {parse_real(parts[0]), parts.size() == 2 ? parse_real(parts[1]) : 0.0};
}

void report_verdict(const Configuration& c, double tol, std::ostream& out, bool& is_sic) {
    const std::size_t n = c.dim();
    double lo = 1, hi = 0;
    for (std::size_t i = 0; i < c.size(); ++i)
        for (std::size_t j = i + 1; j < c.size(); ++j) {
            lo = std::min(lo, c.gram(i, j));
            hi = std::max(hi, c.gram(i, j));
        }
    out << "points: " << c.size() << " in CP^" << n - 1 << "\n";
    if (c.size() != n * n) {
        out << "verdict: not a SIC (a SIC set has " << n * n << " points)\n";
        is_sic = false;
        return;
    }
    const SicReport r = verify_sic(c, tol);
    out << "kappa: min " << fmt("%.12f", lo) << ", max " << fmt("%.12f", hi) << ", target "
        << fmt("%.12f", 1.0 / static_cast<double>(n + 1)) << "\n";
    out << "max deviation: " << fmt("%.3e", r.max_deviation) << "\n";
    out << "resolution defect: " << fmt("%.3e", r.resolution_defect) << "\n";
    out << r.separated_pairs << "/" << r.total_pairs << " pairs separated\n";
    out << "verdict: " << (r.is_sic ? "SIC" : "not a SIC") << "\n";
    is_sic = r.is_sic;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
    const Configuration c = read_config(cfg.input);
    bool sic = false;
    if (c.size() != c.dim() * c.dim())
        throw UsageError("expected " + std::to_string(c.dim() * c.dim()) + " points in CP^" + std::to_string(c.dim() - 1) +
                         ", found " + std::to_string(c.size()));
    report_verdict(c, cfg.tolerance.value_or(default_tolerances.geometric), out, sic);
    return sic ? 0 : 1;
}

Configuration build(const RunConfig& cfg) {
    const std::string& k = cfg.kind;
    if (k == "wh-orbit") {
        if (cfg.fiducial.empty()) throw UsageError("construct: --fiducial is required for wh-orbit");
        std::vector<cplx> v;
        for (const auto& e : split(cfg.fiducial, ',')) v.push_back(parse_entry(e));
        return wh_orbit(ProjectivePoint(ComplexVector(std::move(v))));
    }
    if (k == "midpoint") {
        const auto s = split(cfg.sigmas, ',');
        if (s.size() != 3) throw UsageError("construct: --sigmas s1,s2,s3 is required for midpoint");
        return midpoint_solution(parse_real(s[0]), parse_real(s[1]), parse_real(s[2]));
    }
    if (k == "s-theta") {
        if (!cfg.theta) throw UsageError("construct: --theta is required for s-theta");
        return s_theta(*cfg.theta);
    }
    if (k == "cp3") return wh_orbit(cp3_fiducial());
    if (k == "tetrahedron") {
        if (cfg.index != 0 && cfg.index != 1) throw UsageError("construct: --index must be 0 or 1 for tetrahedron");
        const auto [a, b] = tetrahedra_cp1();
        return cfg.index == 0 ? a : b;
    }
    if (k == "m-eigen") {
        if (cfg.index < 0 || cfg.index > 2) throw UsageError("construct: --index must be 0, 1 or 2 for m-eigen");
        return m_eigen_config(cfg.index).config;
    }
    if (k == "fake-sic") return fake_sic().config;
    throw UsageError("construct: unknown kind '" + k + "'");
}

int cmd_construct(const RunConfig& cfg, std::ostream& out) {
    const Configuration c = build(cfg);
    write_config(cfg.output, c);
    out << "wrote " << c.size() << " points to " << cfg.output.string() << "\n";
    bool sic = false;
    report_verdict(read_config(cfg.output), cfg.tolerance.value_or(default_tolerances.geometric), out, sic);
    return 0;
}

int cmd_curves(const RunConfig& cfg, std::ostream& out) {
    double sigma = 0, phi = 0;
    if (!cfg.anchor.empty()) {
        const auto parts = split(cfg.anchor, ',');
        if (parts.size() != 2) throw UsageError("curves: --anchor takes sigma,phi");
        sigma = parse_real(parts[0]);
        phi = parse_real(parts[1]);
    } else if (cfg.theta) {
        phi = *cfg.theta;
    } else {
        throw UsageError("curves: give --theta or --anchor");
    }
    if (cfg.resolution <= 0) throw UsageError("curves: --resolution must be positive");
    const TorusCoord anchor(sigma, phi);
    if (anchor.is_pinch()) throw UsageError("curves: the anchor is the pinch point");
    const SeparationCurve curve = separation_curve(anchor, cfg.resolution);

    std::ostringstream csv;
    csv << "sigma,phi,component\n";
    for (const auto& s : curve.samples) csv << fmt("%.12g", s.sigma) << "," << fmt("%.12g", s.phi) << "," << s.component << "\n";
    if (cfg.output.empty()) {
        out << csv.str();
    } else {
        std::ofstream f(cfg.output);
        if (!f) throw std::runtime_error("cannot write " + cfg.output.string());
        f << csv.str();
    }
    out << "anchor: sigma " << fmt("%.12g", anchor.sigma()) << ", phi " << fmt("%.12g", anchor.phi()) << "\n";
    out << "samples: " << curve.samples.size() << "\n";
    out << "components: " << curve.components << "\n";
    return 0;
}

int cmd_scan(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    std::vector<BigRational> grid;
    if (!cfg.t_values.empty()) {
        for (const auto& t : cfg.t_values) grid.push_back(parse_t(t));
    } else {
        const BigRational step = parse_t(cfg.step);
        if (step <= 0) throw UsageError("scan-table: --step must be positive");
        grid = make_grid(parse_t(cfg.from), parse_t(cfg.to), step);
    }
    const ScanResult r = scan_table(grid, std::max(1u, cfg.workers), cfg.bisection_steps);

    std::ostringstream csv;
    csv << "t,count\n";
    for (const auto& row : r.rows) {
        if (row.skipped) {
            err << "warning: t = " << fmt("%.12g", row.t_value) << " skipped (" << row.note << ")\n";
            continue;
        }
        csv << fmt("%.10g", row.t_value) << "," << row.count << "\n";
    }
    for (const auto& b : r.breakpoints)
        csv << "# breakpoint," << fmt("%.8f", b.lo) << "," << fmt("%.8f", b.hi) << "," << b.count_lo << "," << b.count_hi
            << "\n";
    if (cfg.output.empty()) {
        out << csv.str();
    } else {
        std::ofstream f(cfg.output);
        if (!f) throw std::runtime_error("cannot write " + cfg.output.string());
        f << csv.str();
        std::size_t n = 0;
        for (const auto& row : r.rows) n += !row.skipped;
        out << "rows: " << n << "\n";
        for (const auto& b : r.breakpoints)
            out << "breakpoint: " << b.count_lo << " -> " << b.count_hi << " at t in (" << fmt("%.6f", b.lo) << ", "
                << fmt("%.6f", b.hi) << ")\n";
    }
    return 0;
}

int cmd_selftest(const RunConfig& cfg, std::ostream& out) {
    int passed = 0, failed = 0;
    auto record = [&](bool ok, const std::string& name, const std::string& detail = {}) {
        (ok ? passed : failed)++;
        out << (ok ? "PASS " : "FAIL ") << name;
        if (!detail.empty()) out << ": " << detail;
        out << "\n";
    };

    ListedTables listed;
    if (!cfg.f1_override.empty()) {
        std::ifstream f(cfg.f1_override);
        if (!f) throw UsageError("selftest: cannot read " + cfg.f1_override.string());
        listed.F1.assign(std::istreambuf_iterator<char>(f), {});
    }
    const DerivationReport d = verify_derivations(listed);
    for (const auto& item : d.items)
        record(item.match, "derivation " + item.name,
               item.match ? std::to_string(item.derived_terms) + " terms" : item.first_mismatch);

    std::mt19937_64 rng(20240611);
    std::uniform_real_distribution<double> unit(-1.0, 1.0), angle(-std::numbers::pi, std::numbers::pi);
    double sid = 0, trig = 0;
    for (int i = 0; i < 100; ++i) {
        const double a = unit(rng), b = unit(rng), c = unit(rng);
        sid = std::max(sid, std::fabs(sid_identity_residual(a, b, c)));
        const double A = angle(rng), B = angle(rng);
        trig = std::max(trig, std::fabs(trig_identity_residual(A, B)));
    }
    record(sid <= 1e-12, "incircle side identity", "max residual " + fmt("%.2e", sid));
    record(trig <= 1e-12, "cosine identity", "max residual " + fmt("%.2e", trig));

    const CliffordReport cl = clifford_relations();
    record(cl.cube <= 1e-13, "M^3 = i w^2 I", fmt("%.2e", cl.cube));
    record(cl.shift_relation <= 1e-13, "M A M^-1 = w B", fmt("%.2e", cl.shift_relation));
    record(cl.clock_relation_alt <= 1e-13, "M B M^-1 = w A^-1 B^-1", fmt("%.2e", cl.clock_relation_alt));

    int on_ok = 0, off_ok = 0;
    for (int i = 0; i < 32; ++i) {
        const std::vector<double> phases{angle(rng), angle(rng), angle(rng)};
        const double theta = angle(rng);
        if (clock_orbit_separated(point_over(incircle_point(theta), phases))) ++on_ok;
        auto mu = incircle_point(theta);
        const double s = 0.3 + 0.6 * (unit(rng) + 1) / 2;  // radius ratio in [0.3, 0.9]
        for (auto& m : mu) m = 1.0 / 3 + s * (m - 1.0 / 3);
        if (!clock_orbit_separated(point_over(mu, phases))) ++off_ok;
    }
    record(on_ok == 32 && off_ok == 32, "clock orbits over the incircle",
           std::to_string(on_ok) + "/32 on, " + std::to_string(off_ok) + "/32 off");

    const FakeSic fake = fake_sic();
    record(fake.separated.size() == 27, "nine-point near miss", std::to_string(fake.separated.size()) + "/36 pairs separated");

    out << "selftest: " << passed << " passed, " << failed << " failed\n";
    return failed == 0 ? 0 : 1;
}

}  // namespace

double parse_real(std::string_view text) { return RealParser(text).run(); }

BigRational parse_t(std::string_view text) {
    if (text.find_first_of("pisqrt()*") == std::string_view::npos) {
        try {
            return parse_rational(text);
        } catch (const std::invalid_argument&) {
            throw UsageError("cannot read '" + std::string(text) + "' as a number");
        }
    }
    const double v = parse_real(text);
    if (!std::isfinite(v)) throw UsageError("not a finite number: " + std::string(text));
    return rational_from_double(v);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    CLI::App app{"SIC sets in complex projective space: constructions, verification and classification", "sicp"};
    app.require_subcommand(1);

    std::string theta_text;
    auto angle_check = [](const std::string& s) -> std::string {
        try {
            parse_real(s);
            return {};
        } catch (const std::exception& e) {
            return e.what();
        }
    };

    auto* verify = app.add_subcommand("verify", "Check whether a configuration file is a SIC set");
    verify->add_option("--in", cfg.input, "Configuration JSON")->required()->check(CLI::ExistingFile);
    verify->add_option("--tol", cfg.tolerance, "Separation tolerance");

    auto* construct = app.add_subcommand("construct", "Build a configuration and write it as JSON");
    construct->add_option("--kind", cfg.kind, "wh-orbit, midpoint, s-theta, cp3, tetrahedron, m-eigen or fake-sic")
        ->required()
        ->check(CLI::IsMember({"wh-orbit", "midpoint", "s-theta", "cp3", "tetrahedron", "m-eigen", "fake-sic"}));
    construct->add_option("--theta", theta_text, "Angle in radians; 'pi/16' style accepted")->check(angle_check);
    construct->add_option("--fiducial", cfg.fiducial, "Comma-separated entries, each 're' or 're:im'");
    construct->add_option("--sigmas", cfg.sigmas, "Three phases s1,s2,s3 for a midpoint solution");
    construct->add_option("--index", cfg.index, "Tetrahedron (0, 1) or eigenvector (0, 1, 2)");
    construct->add_option("--out", cfg.output, "Output JSON")->required();
    construct->add_option("--tol", cfg.tolerance, "Separation tolerance");

    auto* curves = app.add_subcommand("curves", "Sample the points of the pinched torus separated from an anchor");
    curves->add_option("--theta", theta_text, "Anchor z[0, theta]")->check(angle_check);
    curves->add_option("--anchor", cfg.anchor, "Anchor sigma,phi");
    curves->add_option("--resolution", cfg.resolution, "Number of phi cells");
    curves->add_option("--out", cfg.output, "Output CSV (stdout when omitted)");

    auto* scan = app.add_subcommand("scan-table", "Count the real solutions of the generic case over a grid of t");
    scan->add_option("--from", cfg.from, "First t");
    scan->add_option("--to", cfg.to, "Last t");
    scan->add_option("--step", cfg.step, "Grid step");
    scan->add_option("--t", cfg.t_values, "Explicit t values instead of a grid");
    scan->add_option("--workers", cfg.workers, "Worker threads")->check(CLI::Range(1u, 256u));
    scan->add_option("--bisection-steps", cfg.bisection_steps, "Bisection rounds per breakpoint")->check(CLI::Range(0, 60));
    scan->add_option("--out", cfg.output, "Output CSV (stdout when omitted)");

    auto* selftest = app.add_subcommand("selftest", "Re-derive the polynomial tables and run identity checks");
    selftest->add_option("--f1", cfg.f1_override, "Replace the listed F1 table by this file")->check(CLI::ExistingFile);

    std::vector<const char*> argv{"sicp"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (!theta_text.empty()) cfg.theta = parse_real(theta_text);
        if (verify->parsed()) return cmd_verify(cfg, out);
        if (construct->parsed()) return cmd_construct(cfg, out);
        if (curves->parsed()) return cmd_curves(cfg, out);
        if (scan->parsed()) return cmd_scan(cfg, out, err);
        return cmd_selftest(cfg, out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace sicp::cli
