// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include "sicp/classification.hpp"
#include "sicp/heisenberg.hpp"
#include "sicp/pinched_torus.hpp"
#include "sicp/projective.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>

using namespace sicp;

namespace {

const double pi = std::numbers::pi;

struct Outcome {
    bool pass = true;
    std::string detail;
};

std::string fmt(const char* f, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, v);
    return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

double max_pair_deviation(const Configuration& c, double target) {
    double m = 0;
    for (std::size_t i = 0; i < c.size(); ++i)
        for (std::size_t j = i + 1; j < c.size(); ++j) m = std::max(m, std::abs(c.gram(i, j) - target));
    return m;
}

std::mt19937_64& rng() {
    static std::mt19937_64 g(5150);
    return g;
}
double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng()); }

ProjectivePoint random_point(std::size_t n) {
    std::normal_distribution<double> gauss;
    std::vector<cplx> v;
    for (std::size_t i = 0; i < n; ++i) v.emplace_back(gauss(rng()), gauss(rng()));
    return ProjectivePoint(ComplexVector(std::move(v)));
}

Outcome sic_constructions() {
    const auto t0 = std::chrono::steady_clock::now();
    const auto orbit = wh_orbit(ProjectivePoint{0.0, 1.0, 1.0});
    const auto rep = verify_sic(orbit);
    const double d2 = max_pair_deviation(orbit, 0.25);
    const auto cp3 = wh_orbit(cp3_fiducial());
    const double d3 = max_pair_deviation(cp3, 0.2);
    const auto [t1, t2] = tetrahedra_cp1();
    const double d1 = std::max(max_pair_deviation(t1, 1.0 / 3), max_pair_deviation(t2, 1.0 / 3));
    const double secs = seconds_since(t0);
    Outcome o;
    o.pass = orbit.size() == 9 && d2 <= 1e-12 && rep.resolution_defect <= 1e-12 && cp3.size() == 16 && d3 <= 1e-11 &&
             d1 <= 1e-12 && secs < 1.0;
    o.detail = "CP2 dev " + fmt("%.1e", d2) + ", defect " + fmt("%.1e", rep.resolution_defect) + "; CP3 dev " +
               fmt("%.1e", d3) + "; CP1 dev " + fmt("%.1e", d1) + "; " + fmt("%.3f", secs) + " s";
    return o;
}

Outcome s_theta_family() {
    const auto t0 = std::chrono::steady_clock::now();
    const CMatrix M = clifford_M().matrix();
    double worst = 0;
    bool all_sic = true, all_mid = true;
    for (int s = 0; s < 32; ++s) {
        const double theta = -pi / 2 + s * pi / 32;
        const auto c = s_theta(theta);
        const auto rep = verify_sic(c);
        all_sic &= rep.is_sic && rep.max_deviation <= 1e-10;
        worst = std::max(worst, rep.max_deviation);
        all_mid &= on_midpoint_circles(transform(M, c), 1e-10);
    }
    const double secs = seconds_since(t0);
    return {all_sic && all_mid && secs < 1.0, "32 values, max deviation " + fmt("%.1e", worst) +
                                                  (all_mid ? ", M-images on midpoint circles" : ", M-image off midpoints") +
                                                  "; " + fmt("%.3f", secs) + " s"};
}

Outcome clifford() {
    const auto r = clifford_relations();
    Outcome o;
    o.pass = r.cube <= 1e-13 && r.shift_relation <= 1e-13 && r.clock_relation <= 1e-13;
    o.detail = "M^3 " + fmt("%.1e", r.cube) + ", MAM^-1 " + fmt("%.1e", r.shift_relation) + ", MBM^-1 vs w^2 A^-1 B^-1 " +
               fmt("%.3g", r.clock_relation) + " (informational: vs w A^-1 B^-1 " + fmt("%.1e", r.clock_relation_alt) + ")";
    return o;
}

Outcome eigen() {
    Outcome o;
    for (int index = 0; index < 3; ++index) {
        const auto e = m_eigen_config(index);
        const bool ok = e.third_pairs == 27 && e.orthogonal_pairs == 9 && e.lines.count == 9;
        o.pass &= ok;
        o.detail += (index ? "; " : "") + std::string("eigenvector ") + std::to_string(index) + ": " +
                    std::to_string(e.third_pairs) + " third, " + std::to_string(e.orthogonal_pairs) + " orthogonal, " +
                    std::to_string(e.lines.count) + " lines";
    }
    return o;
}

Outcome derivations() {
    const auto rep = verify_derivations();
    std::size_t mismatched = 0;
    for (const auto& i : rep.items) mismatched += i.mismatched_monomials + (i.match ? 0 : 1);
    return {rep.all_match() && mismatched == 0 && rep.seconds < 30.0,
            std::to_string(rep.items.size()) + " tables, " + std::to_string(mismatched) + " mismatches, " +
                fmt("%.2f", rep.seconds) + " s"};
}

Outcome necessity() {
    // Away from the three values of theta at which the moving triple meets the pinch.
    const std::vector<double> thetas{-pi / 3 - 0.2, -pi / 3, -pi / 3 + 0.15, -0.25, -0.1, 0.0, 0.12, 0.27, pi / 3, pi / 3 + 0.2};
    double mF = 0, mFi = 0;
    bool counts = true;
    for (double theta : thetas) {
        const auto rep = necessity_check(s_theta(theta));
        counts &= rep.triples == 35 && rep.quadruples == 35;
        mF = std::max(mF, rep.max_F);
        mFi = std::max(mFi, rep.max_F_i);
    }
    return {counts && mF <= 1e-7 && mFi <= 1e-7,
            "10 sets, 35 triples and 35 quadruples each, max |F| " + fmt("%.1e", mF) + ", max |F_i| " + fmt("%.1e", mFi)};
}

Outcome table(std::vector<CaseIVSolution>* all_solutions) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto grid = make_grid(BigRational(5, 100), BigRational(140, 100), BigRational(1, 100));
    const auto scan = scan_table(grid, 4, 14);
    const double secs = seconds_since(t0);

    Outcome o;
    const std::vector<std::pair<double, int>> expect{{0.1, 2}, {0.3, 3}, {0.5, 5}, {0.7, 4}, {1.2, 3}};
    for (const auto& [t, n] : expect) {
        const auto it = std::find_if(scan.rows.begin(), scan.rows.end(),
                                     [&](const ScanRow& r) { return std::abs(r.t_value - t) < 1e-12; });
        const bool ok = it != scan.rows.end() && !it->skipped && it->count == n;
        o.pass &= ok;
        o.detail += fmt("%.1f", t) + "->" + (it == scan.rows.end() ? "?" : std::to_string(it->count)) + " ";
    }
    const std::vector<double> targets{0.1898, 0.4386, 1 / std::sqrt(3.0), 1.1546};
    for (double target : targets) {
        const auto it = std::find_if(scan.breakpoints.begin(), scan.breakpoints.end(),
                                     [&](const Breakpoint& b) { return std::abs(b.estimate() - target) <= 1e-3; });
        o.pass &= it != scan.breakpoints.end();
        o.detail += "| " + (it == scan.breakpoints.end() ? std::string("missing ") + fmt("%.4f", target)
                                                          : fmt("%.5f", it->estimate()));
    }
    o.pass &= scan.breakpoints.size() == targets.size() && secs < 60.0;
    o.detail += " | " + std::to_string(scan.breakpoints.size()) + " breakpoints, " + fmt("%.1f", secs) + " s";

    for (const auto& row : scan.rows) {
        if (row.skipped) continue;
        auto sols = case_iv_solutions(row.t);
        all_solutions->insert(all_solutions->end(), sols.begin(), sols.end());
    }
    return o;
}

Outcome fake() {
    const auto f = fake_sic();
    const std::array<double, 4> expect{-1.687, -0.109, 0.442, 1.354};
    double dev = 0;
    for (std::size_t i = 0; i < 4; ++i) dev = std::max(dev, std::abs(f.roots[i] - expect[i]));
    const bool vieta = f.vieta_d == BigRational(1, 9) && f.vieta_b == BigRational(-22, 9);
    return {dev <= 1e-3 && f.separated.size() == 27 && vieta,
            "roots within " + fmt("%.1e", dev) + ", " + std::to_string(f.separated.size()) + "/36 separated, Vieta " +
                (vieta ? "d = 1/9, b = -22/9" : "mismatch")};
}

Outcome properties() {
    Outcome o;
    double sym = 0, inv = 0;
    for (int i = 0; i < 500; ++i) {
        const auto p = random_point(3), q = random_point(3);
        sym = std::max(sym, std::abs(cross_ratio(p, q) - cross_ratio(q, p)));
        std::vector<cplx> scaled(p.rep().begin(), p.rep().end());
        const cplx s = std::polar(uniform(0.1, 10.0), uniform(-pi, pi));
        for (auto& x : scaled) x *= s;
        inv = std::max(inv, std::abs(cross_ratio(scaled, q.rep()) - cross_ratio(p, q)));
    }
    int triangle_failures = 0;
    for (int i = 0; i < 1000; ++i) {
        const auto p = random_point(3), q = random_point(3), r = random_point(3);
        triangle_failures += fs_distance(p, r) > fs_distance(p, q) + fs_distance(q, r) + 1e-12;
    }
    double sid = 0, trig = 0;
    for (int i = 0; i < 100; ++i) {
        sid = std::max(sid, std::abs(sid_identity_residual(uniform(-1, 1), uniform(-1, 1), uniform(-1, 1))));
        trig = std::max(trig, std::abs(trig_identity_residual(uniform(-pi, pi), uniform(-pi, pi))));
    }
    int on = 0, off = 0;
    for (int i = 0; i < 64; ++i) {
        const double theta = uniform(-pi / 2, pi / 2);
        const std::vector<double> phases{uniform(-pi, pi), uniform(-pi, pi), uniform(-pi, pi)};
        on += clock_orbit_separated(point_over(incircle_point(theta), phases));
        auto mu = incircle_point(theta);
        const double scale = uniform(0.2, 0.95);
        for (auto& m : mu) m = 1.0 / 3 + scale * (m - 1.0 / 3);
        off += !clock_orbit_separated(point_over(mu, phases));
    }
    const double threshold = std::atan(std::sqrt(5.0 / 27.0));
    const int resolution = 1440;
    const double step = pi / resolution;
    bool transition = true;
    for (double sign : {1.0, -1.0}) {
        transition &= separation_curve(TorusCoord(0, sign * (threshold - 2 * step)), resolution).components == 1;
        transition &= separation_curve(TorusCoord(0, sign * (threshold + 2 * step)), resolution).components == 2;
    }
    o.pass = sym == 0 && inv <= 1e-12 && triangle_failures == 0 && sid <= 1e-12 && trig <= 1e-12 && on == 64 &&
             off == 64 && transition;
    o.detail = "symmetry " + fmt("%.1e", sym) + ", invariance " + fmt("%.1e", inv) + ", triangle failures " +
               std::to_string(triangle_failures) + "/1000, side identity " + fmt("%.1e", sid) + ", cosine identity " +
               fmt("%.1e", trig) + ", fibres " + std::to_string(on) + "/64 on + " + std::to_string(off) +
               "/64 off, transition " + (transition ? "at the threshold" : "misplaced");
    return o;
}

Outcome no_extension(const std::vector<CaseIVSolution>& sols) {
    const auto rep = no_sic_extension(sols);
    return {!sols.empty() && !rep.sic_found && rep.max_clique < 9,
            std::to_string(rep.solutions) + " solutions, largest separated set " + std::to_string(rep.max_clique)};
}

}  // namespace

int main() {
    int failed = 0;
    auto report = [&](int n, const std::string& name, const std::function<Outcome()>& check) {
        Outcome o;
        try {
            o = check();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failed += !o.pass;
        std::printf("%s %2d %s: %s\n", o.pass ? "PASS" : "FAIL", n, name.c_str(), o.detail.c_str());
        std::fflush(stdout);
    };

    std::vector<CaseIVSolution> solutions;
    report(1, "SIC constructions", sic_constructions);
    report(2, "one-parameter family", s_theta_family);
    report(3, "Clifford relations", clifford);
    report(4, "eigenvector configuration", eigen);
    report(5, "symbolic derivation", derivations);
    report(6, "necessity system", necessity);
    report(7, "table reproduction", [&] { return table(&solutions); });
    report(8, "fake SIC", fake);
    report(9, "property suites", properties);
    report(10, "no extension to a SIC", [&] { return no_extension(solutions); });
    std::printf("acceptance: %d passed, %d failed\n", 10 - failed, failed);
    return failed == 0 ? 0 : 1;
}
