#pragma once

#include "sicp/linalg.hpp"

#include <array>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace sicp {

struct Tolerances {
    double geometric = 1e-9;   // predicates on points: separation, collinearity, incircle
    double algebraic = 1e-12;  // identities expected to hold to rounding
};

inline constexpr Tolerances default_tolerances{};

/// A nonzero vector in C^n, n in {2,3,4}.
class ComplexVector {
public:
    explicit ComplexVector(std::vector<cplx> entries, double zero_tol = 1e-12);
    ComplexVector(std::initializer_list<cplx> entries) : ComplexVector(std::vector<cplx>(entries)) {}

    std::size_t dim() const { return entries_.size(); }
    std::span<const cplx> entries() const { return entries_; }
    const cplx& operator[](std::size_t i) const { return entries_[i]; }
    double norm2() const { return sicp::norm2(entries_); }

private:
    std::vector<cplx> entries_;
};

/// A ray [z] in CP^{n-1}, stored as its canonical representative: unit norm,
/// with the first coordinate of modulus > 1e-9 rotated onto the positive real axis.
class ProjectivePoint {
public:
    explicit ProjectivePoint(const ComplexVector& v);
    ProjectivePoint(std::initializer_list<cplx> entries) : ProjectivePoint(ComplexVector(entries)) {}

    std::size_t dim() const { return rep_.size(); }
    std::span<const cplx> rep() const { return rep_; }
    const cplx& operator[](std::size_t i) const { return rep_[i]; }

    /// Same ray, i.e. cross ratio 1 within tol.
    bool same_as(const ProjectivePoint& o, double tol = default_tolerances.geometric) const;
    friend bool operator==(const ProjectivePoint& a, const ProjectivePoint& b) { return a.same_as(b); }

private:
    std::vector<cplx> rep_;
};

class HermitianProjector {
public:
    explicit HermitianProjector(CMatrix m, double tol = default_tolerances.algebraic);
    const CMatrix& matrix() const { return m_; }

private:
    CMatrix m_;
};

/// Ordered point list with the pairwise cross-ratio matrix computed once.
class Configuration {
public:
    Configuration() = default;
    explicit Configuration(std::vector<ProjectivePoint> points);

    std::size_t size() const { return points_.size(); }
    std::size_t dim() const { return points_.empty() ? 0 : points_.front().dim(); }
    const ProjectivePoint& operator[](std::size_t i) const { return points_[i]; }
    const std::vector<ProjectivePoint>& points() const { return points_; }
    double gram(std::size_t i, std::size_t j) const { return gram_[i * points_.size() + j]; }

    auto begin() const { return points_.begin(); }
    auto end() const { return points_.end(); }

private:
    std::vector<ProjectivePoint> points_;
    std::vector<double> gram_;
};

double cross_ratio(const ProjectivePoint& p, const ProjectivePoint& q);
/// Same quantity on raw representatives (no canonicalization needed).
double cross_ratio(std::span<const cplx> w, std::span<const cplx> z);
double fs_distance(const ProjectivePoint& p, const ProjectivePoint& q);

HermitianProjector projector_of(const ProjectivePoint& p);
std::vector<double> moment_map(const ProjectivePoint& p);
bool on_incircle(std::span<const double> x, double tol = default_tolerances.geometric);
bool is_correctly_separated(const ProjectivePoint& p, const ProjectivePoint& q,
                            double tol = default_tolerances.geometric);

struct SicReport {
    bool is_sic = false;
    double max_deviation = 0.0;      // max |kappa_ij - 1/(n+1)| over i<j
    double resolution_defect = 0.0;  // max entry of |(1/n) sum P_i - I|
    std::size_t separated_pairs = 0;
    std::size_t total_pairs = 0;
};

/// Throws std::invalid_argument unless the configuration has n^2 points.
SicReport verify_sic(const Configuration& c, double tol = default_tolerances.geometric);

struct CollinearTriples {
    std::size_t count = 0;
    std::vector<std::array<std::size_t, 3>> triples;
};

/// Unordered triples lying on a projective line of CP^2 (|det| <= tol on unit representatives).
CollinearTriples collinear_triples(const Configuration& c, double tol = default_tolerances.geometric);

/// Apply a matrix to every point, re-canonicalizing.
ProjectivePoint transform(const CMatrix& u, const ProjectivePoint& p);
Configuration transform(const CMatrix& u, const Configuration& c);
ProjectivePoint conjugate(const ProjectivePoint& p);

}  // namespace sicp
