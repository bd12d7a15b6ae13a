#pragma once

#include "sicp/projective.hpp"

#include <numbers>
#include <random>

namespace sicp::testing {

inline std::mt19937_64& rng() {
    static std::mt19937_64 g(987654321);
    return g;
}

inline double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng()); }

inline ProjectivePoint random_point(std::size_t n) {
    std::normal_distribution<double> gauss;
    std::vector<cplx> v;
    for (std::size_t i = 0; i < n; ++i) v.emplace_back(gauss(rng()), gauss(rng()));
    return ProjectivePoint(ComplexVector(std::move(v)));
}

/// Haar-ish unitary from Gram-Schmidt on a Gaussian matrix, scaled to det 1.
inline CMatrix random_special_unitary(std::size_t n) {
    std::normal_distribution<double> gauss;
    std::vector<CVector> cols;
    for (std::size_t j = 0; j < n; ++j) {
        CVector v(n);
        for (auto& x : v) x = {gauss(rng()), gauss(rng())};
        for (const auto& c : cols) {
            const cplx proj = inner(c, v);
            for (std::size_t i = 0; i < n; ++i) v[i] -= proj * c[i];
        }
        const double nv = std::sqrt(norm2(v));
        for (auto& x : v) x /= nv;
        cols.push_back(v);
    }
    CMatrix u(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) u(i, j) = cols[j][i];
    const cplx det = u.determinant();
    const cplx fix = std::pow(det, -1.0 / static_cast<double>(n));
    return u * fix;
}

}  // namespace sicp::testing
