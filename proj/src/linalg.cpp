#include "sicp/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace sicp {

cplx inner(std::span<const cplx> w, std::span<const cplx> z) {
    if (w.size() != z.size()) throw std::invalid_argument("inner: dimension mismatch");
    cplx s{0.0, 0.0};
    for (std::size_t i = 0; i < w.size(); ++i) s += std::conj(w[i]) * z[i];
    return s;
}

double norm2(std::span<const cplx> z) {
    double s = 0.0;
    for (const auto& v : z) s += std::norm(v);
    return s;
}

CMatrix::CMatrix(std::initializer_list<std::initializer_list<cplx>> rows) : n_(rows.size()), a_() {
    a_.reserve(n_ * n_);
    for (const auto& r : rows) {
        if (r.size() != n_) throw std::invalid_argument("CMatrix: rows must form a square matrix");
        a_.insert(a_.end(), r.begin(), r.end());
    }
}

CMatrix CMatrix::identity(std::size_t n) {
    CMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

CMatrix CMatrix::diagonal(std::span<const cplx> d) {
    CMatrix m(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
}

CMatrix CMatrix::outer(std::span<const cplx> u, std::span<const cplx> v) {
    if (u.size() != v.size()) throw std::invalid_argument("outer: dimension mismatch");
    CMatrix m(u.size());
    for (std::size_t i = 0; i < u.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) m(i, j) = u[i] * std::conj(v[j]);
    return m;
}

CMatrix CMatrix::adjoint() const {
    CMatrix m(n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) m(j, i) = std::conj((*this)(i, j));
    return m;
}

CMatrix CMatrix::inverse() const {
    CMatrix a = *this;
    CMatrix inv = identity(n_);
    for (std::size_t col = 0; col < n_; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < n_; ++r)
            if (std::abs(a(r, col)) > std::abs(a(piv, col))) piv = r;
        if (std::abs(a(piv, col)) < 1e-300) throw std::domain_error("CMatrix::inverse: singular matrix");
        if (piv != col) {
            for (std::size_t j = 0; j < n_; ++j) {
                std::swap(a(piv, j), a(col, j));
                std::swap(inv(piv, j), inv(col, j));
            }
        }
        const cplx p = a(col, col);
        for (std::size_t j = 0; j < n_; ++j) {
            a(col, j) /= p;
            inv(col, j) /= p;
        }
        for (std::size_t r = 0; r < n_; ++r) {
            if (r == col) continue;
            const cplx f = a(r, col);
            if (f == cplx{}) continue;
            for (std::size_t j = 0; j < n_; ++j) {
                a(r, j) -= f * a(col, j);
                inv(r, j) -= f * inv(col, j);
            }
        }
    }
    return inv;
}

cplx CMatrix::trace() const {
    cplx s{};
    for (std::size_t i = 0; i < n_; ++i) s += (*this)(i, i);
    return s;
}

cplx CMatrix::determinant() const {
    CMatrix a = *this;
    cplx det{1.0, 0.0};
    for (std::size_t col = 0; col < n_; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < n_; ++r)
            if (std::abs(a(r, col)) > std::abs(a(piv, col))) piv = r;
        if (a(piv, col) == cplx{}) return cplx{};
        if (piv != col) {
            for (std::size_t j = 0; j < n_; ++j) std::swap(a(piv, j), a(col, j));
            det = -det;
        }
        det *= a(col, col);
        for (std::size_t r = col + 1; r < n_; ++r) {
            const cplx f = a(r, col) / a(col, col);
            for (std::size_t j = col; j < n_; ++j) a(r, j) -= f * a(col, j);
        }
    }
    return det;
}

CVector CMatrix::apply(std::span<const cplx> v) const {
    if (v.size() != n_) throw std::invalid_argument("CMatrix::apply: dimension mismatch");
    CVector out(n_);
    for (std::size_t i = 0; i < n_; ++i) {
        cplx s{};
        for (std::size_t j = 0; j < n_; ++j) s += (*this)(i, j) * v[j];
        out[i] = s;
    }
    return out;
}

CMatrix CMatrix::operator*(const CMatrix& o) const {
    if (o.n_ != n_) throw std::invalid_argument("CMatrix: size mismatch");
    CMatrix m(n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t k = 0; k < n_; ++k) {
            const cplx f = (*this)(i, k);
            for (std::size_t j = 0; j < n_; ++j) m(i, j) += f * o(k, j);
        }
    return m;
}

CMatrix CMatrix::operator+(const CMatrix& o) const {
    if (o.n_ != n_) throw std::invalid_argument("CMatrix: size mismatch");
    CMatrix m = *this;
    for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] += o.a_[i];
    return m;
}

CMatrix CMatrix::operator-(const CMatrix& o) const {
    if (o.n_ != n_) throw std::invalid_argument("CMatrix: size mismatch");
    CMatrix m = *this;
    for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] -= o.a_[i];
    return m;
}

CMatrix CMatrix::operator*(cplx s) const {
    CMatrix m = *this;
    for (auto& v : m.a_) v *= s;
    return m;
}

double CMatrix::max_abs_diff(const CMatrix& o) const {
    if (o.n_ != n_) throw std::invalid_argument("CMatrix: size mismatch");
    double d = 0.0;
    for (std::size_t i = 0; i < a_.size(); ++i) d = std::max(d, std::abs(a_[i] - o.a_[i]));
    return d;
}

CMatrix matrix_power(const CMatrix& m, int k) {
    CMatrix base = k < 0 ? m.inverse() : m;
    CMatrix out = CMatrix::identity(m.size());
    for (int i = 0; i < std::abs(k); ++i) out = out * base;
    return out;
}

cplx det3(std::span<const cplx> u, std::span<const cplx> v, std::span<const cplx> w) {
    if (u.size() != 3 || v.size() != 3 || w.size() != 3) throw std::invalid_argument("det3: need 3-vectors");
    return u[0] * (v[1] * w[2] - v[2] * w[1]) - u[1] * (v[0] * w[2] - v[2] * w[0]) +
           u[2] * (v[0] * w[1] - v[1] * w[0]);
}

}  // namespace sicp
