#include "sicp/projective.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace sicp {

ComplexVector::ComplexVector(std::vector<cplx> entries, double zero_tol) : entries_(std::move(entries)) {
    if (entries_.size() < 2 || entries_.size() > 4)
        throw std::invalid_argument("ComplexVector: dimension " + std::to_string(entries_.size()) +
                                    " not supported (need 2, 3 or 4)");
    for (const auto& v : entries_)
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
            throw std::invalid_argument("ComplexVector: non-finite entry");
    if (sicp::norm2(entries_) <= zero_tol) throw std::invalid_argument("ComplexVector: zero vector");
}

ProjectivePoint::ProjectivePoint(const ComplexVector& v) : rep_(v.entries().begin(), v.entries().end()) {
    const double nrm = std::sqrt(sicp::norm2(rep_));
    cplx phase{1.0 / nrm, 0.0};
    for (const auto& c : rep_) {
        if (std::abs(c) > 1e-9) {
            phase = std::conj(c) / (std::abs(c) * nrm);
            break;
        }
    }
    for (auto& c : rep_) c *= phase;
    // The pivot is real by construction; drop the rounding residue.
    for (auto& c : rep_) {
        if (std::abs(c) > 1e-9) {
            c = cplx{std::abs(c), 0.0};
            break;
        }
    }
}

bool ProjectivePoint::same_as(const ProjectivePoint& o, double tol) const {
    return dim() == o.dim() && std::abs(cross_ratio(*this, o) - 1.0) <= tol;
}

HermitianProjector::HermitianProjector(CMatrix m, double tol) : m_(std::move(m)) {
    if (m_.max_abs_diff(m_.adjoint()) > tol) throw std::invalid_argument("HermitianProjector: not Hermitian");
    if (m_.max_abs_diff(m_ * m_) > tol) throw std::invalid_argument("HermitianProjector: not idempotent");
    if (std::abs(m_.trace() - 1.0) > tol) throw std::invalid_argument("HermitianProjector: trace is not 1");
}

Configuration::Configuration(std::vector<ProjectivePoint> points) : points_(std::move(points)) {
    const std::size_t m = points_.size();
    for (const auto& p : points_)
        if (p.dim() != points_.front().dim()) throw std::invalid_argument("Configuration: mixed dimensions");
    gram_.assign(m * m, 0.0);
    for (std::size_t i = 0; i < m; ++i) {
        gram_[i * m + i] = 1.0;
        for (std::size_t j = i + 1; j < m; ++j) {
            const double k = cross_ratio(points_[i], points_[j]);
            gram_[i * m + j] = k;
            gram_[j * m + i] = k;
        }
    }
}

double cross_ratio(std::span<const cplx> w, std::span<const cplx> z) {
    if (w.size() != z.size()) throw std::invalid_argument("cross_ratio: dimension mismatch");
    const double k = std::norm(inner(w, z)) / (norm2(w) * norm2(z));
    return std::clamp(k, 0.0, 1.0);
}

double cross_ratio(const ProjectivePoint& p, const ProjectivePoint& q) {
    // Order the arguments so that the computation is bitwise symmetric.
    const auto a = p.rep();
    const auto b = q.rep();
    const bool swap = std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end(),
                                                   [](const cplx& x, const cplx& y) {
                                                       return x.real() < y.real() ||
                                                              (x.real() == y.real() && x.imag() < y.imag());
                                                   });
    return swap ? cross_ratio(b, a) : cross_ratio(a, b);
}

double fs_distance(const ProjectivePoint& p, const ProjectivePoint& q) {
    return 2.0 * std::acos(std::sqrt(cross_ratio(p, q)));
}

HermitianProjector projector_of(const ProjectivePoint& p) {
    return HermitianProjector(CMatrix::outer(p.rep(), p.rep()));
}

std::vector<double> moment_map(const ProjectivePoint& p) {
    std::vector<double> x;
    x.reserve(p.dim());
    for (const auto& c : p.rep()) x.push_back(std::norm(c));
    return x;
}

bool on_incircle(std::span<const double> x, double tol) {
    if (x.size() != 3) throw std::invalid_argument("on_incircle: need a 3-vector");
    double s1 = 0.0, s2 = 0.0;
    for (double v : x) {
        s1 += v;
        s2 += v * v;
    }
    return std::abs(s1 - 1.0) <= tol && std::abs(s2 - 0.5) <= tol;
}

bool is_correctly_separated(const ProjectivePoint& p, const ProjectivePoint& q, double tol) {
    if (p.dim() != q.dim()) throw std::invalid_argument("is_correctly_separated: dimension mismatch");
    return std::abs(cross_ratio(p, q) - 1.0 / static_cast<double>(p.dim() + 1)) <= tol;
}

SicReport verify_sic(const Configuration& c, double tol) {
    const std::size_t n = c.dim();
    if (n == 0 || c.size() != n * n)
        throw std::invalid_argument("verify_sic: expected n^2 = " + std::to_string(n * n) + " points, got " +
                                    std::to_string(c.size()));
    const double target = 1.0 / static_cast<double>(n + 1);
    SicReport r;
    for (std::size_t i = 0; i < c.size(); ++i)
        for (std::size_t j = i + 1; j < c.size(); ++j) {
            const double dev = std::abs(c.gram(i, j) - target);
            r.max_deviation = std::max(r.max_deviation, dev);
            ++r.total_pairs;
            if (dev <= tol) ++r.separated_pairs;
        }
    CMatrix sum(n);
    for (const auto& p : c) sum = sum + projector_of(p).matrix();
    r.resolution_defect = (sum * cplx{1.0 / static_cast<double>(n), 0.0}).max_abs_diff(CMatrix::identity(n));
    r.is_sic = r.separated_pairs == r.total_pairs;
    return r;
}

CollinearTriples collinear_triples(const Configuration& c, double tol) {
    if (c.dim() != 3) throw std::invalid_argument("collinear_triples: only defined in CP^2");
    CollinearTriples out;
    for (std::size_t i = 0; i < c.size(); ++i)
        for (std::size_t j = i + 1; j < c.size(); ++j)
            for (std::size_t k = j + 1; k < c.size(); ++k)
                if (std::abs(det3(c[i].rep(), c[j].rep(), c[k].rep())) <= tol) out.triples.push_back({i, j, k});
    out.count = out.triples.size();
    return out;
}

ProjectivePoint transform(const CMatrix& u, const ProjectivePoint& p) {
    return ProjectivePoint(ComplexVector(u.apply(p.rep())));
}

Configuration transform(const CMatrix& u, const Configuration& c) {
    std::vector<ProjectivePoint> pts;
    pts.reserve(c.size());
    for (const auto& p : c) pts.push_back(transform(u, p));
    return Configuration(std::move(pts));
}

ProjectivePoint conjugate(const ProjectivePoint& p) {
    std::vector<cplx> v(p.rep().begin(), p.rep().end());
    for (auto& c : v) c = std::conj(c);
    return ProjectivePoint(ComplexVector(std::move(v)));
}

}  // namespace sicp
