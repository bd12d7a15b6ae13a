#include "sicp/pinched_torus.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace sicp {

namespace {
constexpr double pi = std::numbers::pi;
}

double wrap_pi(double a) {
    double r = std::remainder(a, 2.0 * pi);  // [-pi, pi]
    if (r <= -pi) r += 2.0 * pi;
    return r;
}

TorusCoord::TorusCoord(double sigma, double phi) {
    if (!std::isfinite(sigma) || !std::isfinite(phi)) throw std::invalid_argument("TorusCoord: non-finite angle");
    // phi lives in (-pi/2, pi/2]; shifting phi by pi flips the sign of the vector.
    double p = std::remainder(phi, pi);  // [-pi/2, pi/2]
    if (p <= -pi / 2) p += pi;
    phi_ = p;
    sigma_ = wrap_pi(sigma);
    if (is_pinch()) {
        phi_ = pi / 2;
        sigma_ = 0.0;
    }
}

bool TorusCoord::is_pinch() const { return std::abs(phi_ - pi / 2) <= 1e-12; }

CVector torus_vector(double sigma, double phi) {
    const double s = std::sqrt(2.0 / 3.0);
    return {s * std::polar(std::cos(phi), sigma), cplx{s * std::cos(phi + 2.0 * pi / 3.0), 0.0},
            cplx{s * std::cos(phi + 4.0 * pi / 3.0), 0.0}};
}

ProjectivePoint z_of(const TorusCoord& c) {
    return ProjectivePoint(ComplexVector(torus_vector(c.sigma(), c.phi())));
}

ProjectivePoint base_point_1() {
    return ProjectivePoint{0.0, 1.0, -root_of_unity(3, 1)};
}
ProjectivePoint base_point_2() {
    return ProjectivePoint{0.0, 1.0, -root_of_unity(3, 2)};
}
ProjectivePoint pinch_point() {
    return ProjectivePoint{0.0, 1.0, -1.0};
}

TorusCoord torus_coord_of(const ProjectivePoint& p, double tol) {
    if (p.dim() != 3) throw std::invalid_argument("torus_coord_of: need a point of CP^2");
    const cplx sum = p[1] + p[2];
    const cplx diff = p[1] - p[2];
    if (std::abs(sum) <= tol) {
        if (!p.same_as(pinch_point(), tol)) throw std::domain_error("torus_coord_of: point is not on the torus");
        return TorusCoord(0.0, pi / 2);
    }
    const cplx ratio = diff / (std::sqrt(3.0) * sum);
    const double phi = std::atan(ratio.real());
    const double sigma = std::arg(p[0] / -sum);
    TorusCoord c(std::abs(p[0]) <= tol ? 0.0 : sigma, phi);
    if (std::abs(ratio.imag()) > std::sqrt(tol) || !z_of(c).same_as(p, tol))
        throw std::domain_error("torus_coord_of: point is not on the torus");
    return c;
}

std::vector<double> incircle_point(double theta) {
    auto sq = [](double v) { return v * v; };
    return {2.0 / 3.0 * sq(std::cos(theta)), 2.0 / 3.0 * sq(std::cos(theta + 2.0 * pi / 3.0)),
            2.0 / 3.0 * sq(std::cos(theta + 4.0 * pi / 3.0))};
}

std::optional<double> separation_cos(double x, double y, double tol) {
    const double den = 1.0 + 3.0 * x * y;
    if (std::abs(den) <= tol) return std::nullopt;
    const double num = -11.0 + 9.0 * x * x + 9.0 * y * y - 27.0 * x * x * y * y - 24.0 * x * y;
    return num / (16.0 * den);
}

double separation_cos_trig(double phi, double psi) {
    const double rhs = 9.0 * (1.0 + 2.0 * std::cos(2.0 * (phi - psi))) / (std::cos(phi) * std::cos(psi)) /
                       (16.0 * (std::cos(phi) * std::cos(psi) + 3.0 * std::sin(phi) * std::sin(psi)));
    return 1.0 - rhs;
}

SigmaSet sigma_solutions(double phi, double psi, double tau) {
    if (std::abs(std::cos(phi)) <= 1e-12 || std::abs(std::cos(psi)) <= 1e-12)
        throw std::domain_error("sigma_solutions: the pinch point has no phase");
    const double x = std::tan(phi);
    const double y = std::tan(psi);
    SigmaSet out;
    const auto c = separation_cos(x, y);
    if (!c) {
        // Singular denominator: solvable only if the numerator vanishes too,
        // and then every phase works.
        const double num = -11.0 + 9.0 * x * x + 9.0 * y * y - 27.0 * x * x * y * y - 24.0 * x * y;
        out.unconstrained = std::abs(num) <= 1e-9 * (1.0 + 9.0 * x * x + 9.0 * y * y);
        return out;
    }
    double v = *c;
    if (v > 1.0 + 1e-12 || v < -1.0 - 1e-12) return out;
    v = std::clamp(v, -1.0, 1.0);
    const double a = std::acos(v);
    out.values.push_back(wrap_pi(tau + a));
    // Tangency is judged on the cosine, since acos amplifies rounding near +-1.
    if (1.0 - std::abs(v) > 1e-12) out.values.push_back(wrap_pi(tau - a));
    std::sort(out.values.begin(), out.values.end());
    return out;
}

SeparationCurve separation_curve(const TorusCoord& anchor, int resolution) {
    if (resolution <= 0) throw std::invalid_argument("separation_curve: resolution must be positive");
    if (anchor.is_pinch()) throw std::domain_error("separation_curve: anchor is the pinch point");

    const double step = pi / resolution;
    struct Row {
        int k;
        SigmaSet sig;
    };
    std::vector<Row> rows;
    for (int k = 0; k < resolution; ++k) {
        const double phi = -pi / 2 + (k + 0.5) * step;
        SigmaSet s = sigma_solutions(phi, anchor.phi(), anchor.sigma());
        if (s.unconstrained || !s.values.empty()) rows.push_back({k, std::move(s)});
    }

    // Group rows into runs separated by phi gaps of more than two steps.
    std::vector<int> run_of(rows.size(), 0);
    int runs = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i == 0 || rows[i].k - rows[i - 1].k > 2) ++runs;
        run_of[i] = runs - 1;
    }
    // Both ends of the phi range meet at the pinch.
    if (runs > 1 && rows.front().k <= 2 && rows.back().k >= resolution - 3) {
        const int last = runs - 1;
        for (auto& r : run_of)
            if (r == last) r = 0;
        --runs;
    }

    SeparationCurve curve{anchor, {}, runs};
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const double phi = -pi / 2 + (rows[i].k + 0.5) * step;
        if (rows[i].sig.unconstrained) {
            for (int j = 0; j < resolution; ++j)
                curve.samples.push_back({wrap_pi(-pi + (j + 0.5) * 2.0 * step), phi, run_of[i]});
        } else {
            for (double s : rows[i].sig.values) curve.samples.push_back({s, phi, run_of[i]});
        }
    }
    return curve;
}

PinchVerdict pinch_rule(const Configuration& partial, double phi, double tol) {
    if (partial.dim() != 3) throw std::invalid_argument("pinch_rule: need points of CP^2");
    auto contains = [&](const ProjectivePoint& q) {
        return std::any_of(partial.begin(), partial.end(), [&](const ProjectivePoint& p) { return p.same_as(q, tol); });
    };
    if (!contains(base_point_1()) || !contains(base_point_2()))
        throw std::invalid_argument("pinch_rule: configuration must contain both base points");
    PinchVerdict v;
    v.pinch_present = contains(pinch_point());
    if (v.pinch_present) {
        v.admissible_phis = {-pi / 6, pi / 6};
        v.admissible = std::abs(std::abs(std::sin(phi)) - 0.5) <= tol;
    }
    return v;
}

}  // namespace sicp
