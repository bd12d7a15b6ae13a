#pragma once

// Small dense complex matrices for n <= 4. Nothing here tries to be a
// general linear algebra package.

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <numbers>
#include <span>
#include <vector>

namespace sicp {

using cplx = std::complex<double>;
using CVector = std::vector<cplx>;

/// e^{2 pi i k / n}
inline cplx root_of_unity(int n, int k = 1) {
    return std::polar(1.0, 2.0 * std::numbers::pi * k / n);
}

/// Hermitian inner product <w, z> = sum conj(w_i) z_i.
cplx inner(std::span<const cplx> w, std::span<const cplx> z);
double norm2(std::span<const cplx> z);

class CMatrix {
public:
    CMatrix() = default;
    explicit CMatrix(std::size_t n) : n_(n), a_(n * n) {}
    CMatrix(std::initializer_list<std::initializer_list<cplx>> rows);

    static CMatrix identity(std::size_t n);
    static CMatrix diagonal(std::span<const cplx> d);
    static CMatrix outer(std::span<const cplx> u, std::span<const cplx> v);  // u v^dagger

    std::size_t size() const { return n_; }
    cplx& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
    const cplx& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

    CMatrix adjoint() const;
    CMatrix inverse() const;  // Gauss-Jordan with partial pivoting; throws if singular
    cplx trace() const;
    cplx determinant() const;
    CVector apply(std::span<const cplx> v) const;

    CMatrix operator*(const CMatrix& o) const;
    CMatrix operator+(const CMatrix& o) const;
    CMatrix operator-(const CMatrix& o) const;
    CMatrix operator*(cplx s) const;

    /// Largest entrywise modulus of (this - o).
    double max_abs_diff(const CMatrix& o) const;

private:
    std::size_t n_ = 0;
    std::vector<cplx> a_;
};

CMatrix matrix_power(const CMatrix& m, int k);  // k may be negative

/// Determinant of the 3x3 matrix whose rows are u, v, w.
cplx det3(std::span<const cplx> u, std::span<const cplx> v, std::span<const cplx> w);

}  // namespace sicp
