#include "sicp/heisenberg.hpp"

#include "sicp/pinched_torus.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace sicp {

namespace {
constexpr double pi = std::numbers::pi;

cplx w3(int k) { return root_of_unity(3, k); }
}  // namespace

UnitaryMatrix::UnitaryMatrix(CMatrix m, std::string label, double tol) : m_(std::move(m)), label_(std::move(label)) {
    if ((m_.adjoint() * m_).max_abs_diff(CMatrix::identity(m_.size())) > tol)
        throw std::invalid_argument("UnitaryMatrix: " + label_ + " is not unitary");
}

CMatrix shift_matrix(std::size_t n) {
    CMatrix s(n);
    for (std::size_t i = 0; i < n; ++i) s(i, (i + n - 1) % n) = 1.0;
    return s;
}

CMatrix clock_matrix(std::size_t n) {
    CVector d(n);
    for (std::size_t i = 0; i < n; ++i) d[i] = root_of_unity(static_cast<int>(n), static_cast<int>(i));
    return CMatrix::diagonal(d);
}

WHGroupElement wh_element(std::size_t n, int j, int k) {
    const int nn = static_cast<int>(n);
    j = ((j % nn) + nn) % nn;
    k = ((k % nn) + nn) % nn;
    return {j, k, matrix_power(shift_matrix(n), j) * matrix_power(clock_matrix(n), k)};
}

Configuration wh_orbit(const ProjectivePoint& fiducial) {
    const std::size_t n = fiducial.dim();
    std::vector<ProjectivePoint> pts;
    pts.reserve(n * n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
            pts.push_back(transform(wh_element(n, static_cast<int>(j), static_cast<int>(k)).matrix, fiducial));
    return Configuration(std::move(pts));
}

cplx fiducial_delta(const ProjectivePoint& z) {
    if (z.dim() != 3) throw std::invalid_argument("fiducial_delta: need a point of CP^2");
    const cplx a = z[0], b = z[1], c = z[2];
    return a * a * std::conj(b * c) + b * b * std::conj(c * a) + c * c * std::conj(a * b);
}

FiducialVerdict classify_fiducial(const ProjectivePoint& z, double tol) {
    if (z.dim() != 3) throw std::invalid_argument("classify_fiducial: need a point of CP^2");
    FiducialVerdict v;
    const auto mu = moment_map(z);
    const double delta = std::abs(fiducial_delta(z));
    if (!on_incircle(mu, tol)) {
        v.reason = "moment image is off the incircle";
    } else if (delta > tol) {
        v.reason = "delta = " + std::to_string(delta) + " does not vanish";
    } else {
        v.is_fiducial = true;
        const bool zero_coord =
            std::any_of(z.rep().begin(), z.rep().end(), [&](const cplx& c) { return std::abs(c) <= tol; });
        v.reason = zero_coord ? "a coordinate vanishes and the moment image is a side midpoint"
                              : "moment image on the incircle and delta = 0";
    }
    v.orbit_is_sic = verify_sic(wh_orbit(z), tol).is_sic;
    return v;
}

ProjectivePoint incircle_fiducial(double theta, int j, int k) {
    return ProjectivePoint{std::cos(theta), w3(j) * std::cos(theta + 2.0 * pi / 3.0),
                           w3(k) * std::cos(theta + 4.0 * pi / 3.0)};
}

Configuration midpoint_solution(double sigma1, double sigma2, double sigma3) {
    std::vector<ProjectivePoint> pts;
    pts.reserve(9);
    for (int k = 0; k < 3; ++k) pts.push_back(ProjectivePoint{0.0, std::polar(1.0, sigma1), w3(k)});
    for (int k = 0; k < 3; ++k) pts.push_back(ProjectivePoint{w3(k), 0.0, std::polar(1.0, sigma2)});
    for (int k = 0; k < 3; ++k) pts.push_back(ProjectivePoint{std::polar(1.0, sigma3), w3(k), 0.0});
    return Configuration(std::move(pts));
}

Configuration s_theta(double theta) {
    std::vector<ProjectivePoint> pts{
        base_point_1(),
        base_point_2(),
        ProjectivePoint{1.0, 0.0, -w3(1)},
        ProjectivePoint{1.0, 0.0, -w3(2)},
        ProjectivePoint{1.0, -w3(1), 0.0},
        ProjectivePoint{1.0, -w3(2), 0.0},
    };
    for (double shift : {-pi / 3.0, 0.0, pi / 3.0})
        pts.emplace_back(ComplexVector(torus_vector(0.0, theta + shift)));
    return Configuration(std::move(pts));
}

UnitaryMatrix clifford_M() {
    const double s = 1.0 / std::sqrt(3.0);
    CMatrix m{{w3(2), w3(1), 1.0}, {1.0, w3(1), w3(2)}, {1.0, 1.0, 1.0}};
    return UnitaryMatrix(m * cplx{s, 0.0}, "M");
}

CliffordReport clifford_relations() {
    const CMatrix M = clifford_M().matrix();
    const CMatrix Minv = M.adjoint();
    const CMatrix A = shift_matrix(3).inverse();
    const CMatrix B = clock_matrix(3);
    const CMatrix AiBi = A.inverse() * B.inverse();
    const CMatrix I = CMatrix::identity(3);
    const cplx i{0.0, 1.0};

    CliffordReport r;
    r.cube = (M * M * M).max_abs_diff(I * (i * w3(2)));
    r.shift_relation = (M * A * Minv).max_abs_diff(B * w3(1));
    r.clock_relation = (M * B * Minv).max_abs_diff(AiBi * w3(2));
    r.clock_relation_alt = (M * B * Minv).max_abs_diff(AiBi * w3(1));
    return r;
}

bool on_midpoint_circles(const Configuration& c, double tol) {
    static const std::vector<std::vector<double>> mids{{0.0, 0.5, 0.5}, {0.5, 0.0, 0.5}, {0.5, 0.5, 0.0}};
    for (const auto& p : c) {
        const auto mu = moment_map(p);
        const bool hit = std::any_of(mids.begin(), mids.end(), [&](const std::vector<double>& m) {
            for (std::size_t i = 0; i < 3; ++i)
                if (std::abs(mu[i] - m[i]) > tol) return false;
            return true;
        });
        if (!hit) return false;
    }
    return true;
}

bool clock_orbit_separated(const ProjectivePoint& z, double tol) {
    const CMatrix B = clock_matrix(z.dim());
    std::vector<ProjectivePoint> orbit{z};
    for (std::size_t k = 1; k < z.dim(); ++k) orbit.push_back(transform(B, orbit.back()));
    for (std::size_t i = 0; i < orbit.size(); ++i)
        for (std::size_t j = i + 1; j < orbit.size(); ++j)
            if (!is_correctly_separated(orbit[i], orbit[j], tol)) return false;
    return true;
}

ProjectivePoint point_over(const std::vector<double>& mu, const std::vector<double>& phases) {
    if (mu.size() != phases.size()) throw std::invalid_argument("point_over: size mismatch");
    std::vector<cplx> v;
    for (std::size_t i = 0; i < mu.size(); ++i) {
        if (mu[i] < 0) throw std::invalid_argument("point_over: negative moment coordinate");
        v.push_back(std::polar(std::sqrt(mu[i]), phases[i]));
    }
    return ProjectivePoint(ComplexVector(std::move(v)));
}

std::vector<std::pair<cplx, CVector>> eigen3(const CMatrix& m) {
    if (m.size() != 3) throw std::invalid_argument("eigen3: need a 3x3 matrix");
    // Characteristic polynomial l^3 - c2 l^2 + c1 l - c0.
    const cplx c2 = m.trace();
    const cplx c1 = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0) + m(0, 0) * m(2, 2) - m(0, 2) * m(2, 0) +
                    m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1);
    const cplx c0 = m.determinant();
    auto chi = [&](cplx l) { return ((l - c2) * l + c1) * l - c0; };

    // Durand-Kerner on the monic cubic.
    std::array<cplx, 3> roots{cplx{0.4, 0.9}, cplx{0.4, 0.9} * cplx{0.4, 0.9},
                              cplx{0.4, 0.9} * cplx{0.4, 0.9} * cplx{0.4, 0.9}};
    for (int it = 0; it < 500; ++it) {
        double move = 0.0;
        for (std::size_t i = 0; i < 3; ++i) {
            cplx den{1.0, 0.0};
            for (std::size_t j = 0; j < 3; ++j)
                if (j != i) den *= roots[i] - roots[j];
            const cplx step = chi(roots[i]) / den;
            roots[i] -= step;
            move = std::max(move, std::abs(step));
        }
        if (move < 1e-15) break;
    }
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = i + 1; j < 3; ++j)
            if (std::abs(roots[i] - roots[j]) < 1e-6) throw std::domain_error("eigen3: repeated eigenvalue");
    std::sort(roots.begin(), roots.end(), [](cplx a, cplx b) { return std::arg(a) < std::arg(b); });

    std::vector<std::pair<cplx, CVector>> out;
    for (const cplx l : roots) {
        const CMatrix s = m - CMatrix::identity(3) * l;
        // Null vector from the best-conditioned cross product of two rows.
        CVector best;
        double best_norm = -1.0;
        for (std::size_t a = 0; a < 3; ++a)
            for (std::size_t b = a + 1; b < 3; ++b) {
                CVector v{s(a, 1) * s(b, 2) - s(a, 2) * s(b, 1), s(a, 2) * s(b, 0) - s(a, 0) * s(b, 2),
                          s(a, 0) * s(b, 1) - s(a, 1) * s(b, 0)};
                const double nv = norm2(v);
                if (nv > best_norm) {
                    best_norm = nv;
                    best = v;
                }
            }
        // One step of inverse iteration with a slightly shifted eigenvalue.
        const CMatrix shifted = m - CMatrix::identity(3) * (l + cplx{1e-10, 1e-10});
        CVector v = shifted.inverse().apply(best);
        const double nv = std::sqrt(norm2(v));
        for (auto& e : v) e /= nv;
        out.emplace_back(l, std::move(v));
    }
    return out;
}

EigenConfiguration m_eigen_config(int index, double tol) {
    if (index < 0 || index > 2) throw std::invalid_argument("m_eigen_config: index must be 0, 1 or 2");
    const auto pairs = eigen3(clifford_M().matrix());
    const auto& [lambda, vec] = pairs[static_cast<std::size_t>(index)];
    ProjectivePoint z{ComplexVector(vec)};
    Configuration config = wh_orbit(z);

    EigenConfiguration e{lambda, z, config, {}, 0, 0, collinear_triples(config, tol), {}};
    for (std::size_t i = 0; i < config.size(); ++i)
        for (std::size_t j = i + 1; j < config.size(); ++j) {
            const double k = config.gram(i, j);
            e.pair_ratios.push_back(k);
            if (std::abs(k - 1.0 / 3.0) <= tol) ++e.third_pairs;
            if (k <= tol) ++e.orthogonal_pairs;
        }
    for (std::size_t i = 0; i < config.size(); ++i)
        for (std::size_t j = i + 1; j < config.size(); ++j)
            for (std::size_t k = j + 1; k < config.size(); ++k)
                if (config.gram(i, j) <= tol && config.gram(j, k) <= tol && config.gram(i, k) <= tol)
                    e.orthonormal_triples.push_back({i, j, k});
    return e;
}

std::pair<Configuration, Configuration> tetrahedra_cp1() {
    const double r2 = std::sqrt(2.0);
    Configuration first({ProjectivePoint{0.0, 1.0}, ProjectivePoint{r2, 1.0}, ProjectivePoint{r2, w3(1)},
                         ProjectivePoint{r2, w3(2)}});
    const cplx v = cplx{1.0, 1.0} / (1.0 + std::sqrt(3.0));
    Configuration second({ProjectivePoint{1.0, v}, ProjectivePoint{v, 1.0}, ProjectivePoint{1.0, -v},
                          ProjectivePoint{v, -1.0}});
    return {std::move(first), std::move(second)};
}

ProjectivePoint cp3_fiducial() {
    const double r = std::sqrt(2.0);
    const double s = std::sqrt(2.0 + std::sqrt(5.0));
    return ProjectivePoint{cplx{-s, -(r + s)}, cplx{1.0 - r, 1.0}, cplx{s, s - r}, cplx{1.0 + r, 1.0}};
}

}  // namespace sicp
