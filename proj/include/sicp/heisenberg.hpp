#pragma once

// Explicit SIC sets and near-misses built from the Weyl-Heisenberg group and
// one Clifford element in dimension 3.

#include "sicp/projective.hpp"

#include <string>
#include <utility>
#include <vector>

namespace sicp {

class UnitaryMatrix {
public:
    UnitaryMatrix(CMatrix m, std::string label, double tol = default_tolerances.algebraic);
    const CMatrix& matrix() const { return m_; }
    const std::string& label() const { return label_; }

private:
    CMatrix m_;
    std::string label_;
};

/// Cyclic shift [z_1, ..., z_n] -> [z_n, z_1, ..., z_{n-1}].
CMatrix shift_matrix(std::size_t n);
/// Clock diag(1, w, ..., w^{n-1}) with w = e^{2 pi i / n}.
CMatrix clock_matrix(std::size_t n);

struct WHGroupElement {
    int j = 0;
    int k = 0;
    CMatrix matrix;  // shift^j * clock^k
};

WHGroupElement wh_element(std::size_t n, int j, int k);

/// The n^2 points [shift^j clock^k z], j-major. Repeated points are kept.
Configuration wh_orbit(const ProjectivePoint& fiducial);

/// z1^2 conj(z2 z3) + z2^2 conj(z3 z1) + z3^2 conj(z1 z2) on the unit representative.
cplx fiducial_delta(const ProjectivePoint& z);

struct FiducialVerdict {
    bool is_fiducial = false;
    std::string reason;
    bool orbit_is_sic = false;  // independent check on the orbit itself
    bool consistent() const { return is_fiducial == orbit_is_sic; }
};

/// A point of CP^2 is fiducial iff its moment image lies on the incircle and delta vanishes.
FiducialVerdict classify_fiducial(const ProjectivePoint& z, double tol = default_tolerances.geometric);

/// [cos t, w^j cos(t + 2pi/3), w^k cos(t + 4pi/3)].
ProjectivePoint incircle_fiducial(double theta, int j, int k);

/// Three points on each midpoint circle, phases given per circle:
/// [0, e^{i s1}, w^k], [w^k, 0, e^{i s2}], [e^{i s3}, w^k, 0] for k = 0, 1, 2.
Configuration midpoint_solution(double sigma1, double sigma2, double sigma3);

/// Six fixed points then z[0, t - pi/3], z[0, t], z[0, t + pi/3].
Configuration s_theta(double theta);

/// (1/sqrt 3) [[w^2, w, 1], [1, w, w^2], [1, 1, 1]].
UnitaryMatrix clifford_M();

struct CliffordReport {
    double cube = 0.0;               // |M^3 - i w^2 I|
    double shift_relation = 0.0;     // |M A M^-1 - w B|
    double clock_relation = 0.0;     // |M B M^-1 - w^2 A^-1 B^-1|
    double clock_relation_alt = 0.0; // |M B M^-1 - w A^-1 B^-1|
};

/// Residuals (max entry) of the conjugation identities. Here A is the shift
/// z -> (z2, z3, z1), the inverse of shift_matrix(3), and B = clock_matrix(3).
CliffordReport clifford_relations();

/// True when every moment image is a side midpoint of the simplex within tol.
bool on_midpoint_circles(const Configuration& c, double tol = default_tolerances.geometric);

/// True when z, Bz, B^2 z (B the clock) are pairwise correctly separated.
bool clock_orbit_separated(const ProjectivePoint& z, double tol = default_tolerances.geometric);

/// A point with moment image `mu` and coordinate phases `phases`.
ProjectivePoint point_over(const std::vector<double>& mu, const std::vector<double>& phases);

struct EigenConfiguration {
    cplx eigenvalue;
    ProjectivePoint eigenvector;
    Configuration config;
    std::vector<double> pair_ratios;  // i < j, row-major
    std::size_t third_pairs = 0;      // kappa = 1/3
    std::size_t orthogonal_pairs = 0; // kappa = 0
    CollinearTriples lines;
    std::vector<std::array<std::size_t, 3>> orthonormal_triples;
};

/// Orbit of an eigenvector of M. index 0..2 in order of ascending eigenvalue phase.
EigenConfiguration m_eigen_config(int index = 0, double tol = default_tolerances.geometric);

/// Eigenpairs of a 3x3 matrix with distinct eigenvalues, ascending by phase.
std::vector<std::pair<cplx, CVector>> eigen3(const CMatrix& m);

/// The two explicit tetrahedra in CP^1.
std::pair<Configuration, Configuration> tetrahedra_cp1();

/// The CP^3 fiducial with r = sqrt 2, s = sqrt(2 + sqrt 5).
ProjectivePoint cp3_fiducial();

}  // namespace sicp
