// Copyright 2026 The Symgate Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "symgate/linalg.h"

#include <algorithm>
#include <cmath>
#include <string>

#include <fmt/format.h>

namespace symgate {

namespace {

void check_dim(std::size_t dim) {
    if (dim == 0 || dim > kMaxDim) {
        throw DimensionError(fmt::format("matrix dimension {} outside 1..{}", dim, kMaxDim));
    }
}

void check_same(const Matrix &a, const Matrix &b, const char *op) {
    if (a.dim() != b.dim()) {
        throw DimensionError(fmt::format("{}: dimension mismatch ({} vs {})", op, a.dim(), b.dim()));
    }
}

double off_diagonal_norm(const Matrix &a) {
    double s = 0;
    for (std::size_t r = 0; r < a.dim(); ++r) {
        for (std::size_t c = 0; c < a.dim(); ++c) {
            if (r != c) {
                s += std::norm(a(r, c));
            }
        }
    }
    return std::sqrt(s);
}

}  // namespace

Matrix::Matrix(std::size_t dim) : dim_(dim), data_(dim * dim) { check_dim(dim); }

Matrix::Matrix(std::initializer_list<std::initializer_list<Complex>> rows) : Matrix(rows.size()) {
    std::size_t r = 0;
    for (const auto &row : rows) {
        if (row.size() != dim_) {
            throw DimensionError(fmt::format("row {} has {} entries, expected {}", r, row.size(), dim_));
        }
        std::copy(row.begin(), row.end(), data_.begin() + r * dim_);
        ++r;
    }
}

Matrix Matrix::identity(std::size_t dim) {
    Matrix m(dim);
    for (std::size_t k = 0; k < dim; ++k) {
        m(k, k) = 1.0;
    }
    return m;
}

Matrix Matrix::diagonal(std::span<const Complex> diag) {
    Matrix m(diag.size());
    for (std::size_t k = 0; k < diag.size(); ++k) {
        m(k, k) = diag[k];
    }
    return m;
}

Matrix Matrix::diagonal(std::initializer_list<Complex> diag) {
    return diagonal(std::span<const Complex>(diag.begin(), diag.size()));
}

Matrix Matrix::adjoint() const {
    Matrix m(dim_);
    for (std::size_t r = 0; r < dim_; ++r) {
        for (std::size_t c = 0; c < dim_; ++c) {
            m(c, r) = std::conj((*this)(r, c));
        }
    }
    return m;
}

Matrix Matrix::transpose() const {
    Matrix m(dim_);
    for (std::size_t r = 0; r < dim_; ++r) {
        for (std::size_t c = 0; c < dim_; ++c) {
            m(c, r) = (*this)(r, c);
        }
    }
    return m;
}

Matrix Matrix::conj() const {
    Matrix m = *this;
    for (auto &z : m.data_) {
        z = std::conj(z);
    }
    return m;
}

Complex Matrix::trace() const {
    Complex t = 0;
    for (std::size_t k = 0; k < dim_; ++k) {
        t += (*this)(k, k);
    }
    return t;
}

Complex Matrix::det() const {
    // LU with partial pivoting.
    Matrix lu = *this;
    Complex result = 1.0;
    for (std::size_t col = 0; col < dim_; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < dim_; ++r) {
            if (std::abs(lu(r, col)) > std::abs(lu(pivot, col))) {
                pivot = r;
            }
        }
        if (lu(pivot, col) == 0.0) {
            return 0.0;
        }
        if (pivot != col) {
            for (std::size_t c = 0; c < dim_; ++c) {
                std::swap(lu(pivot, c), lu(col, c));
            }
            result = -result;
        }
        result *= lu(col, col);
        for (std::size_t r = col + 1; r < dim_; ++r) {
            Complex f = lu(r, col) / lu(col, col);
            for (std::size_t c = col; c < dim_; ++c) {
                lu(r, c) -= f * lu(col, c);
            }
        }
    }
    return result;
}

Matrix &Matrix::operator+=(const Matrix &other) {
    check_same(*this, other, "add");
    for (std::size_t k = 0; k < data_.size(); ++k) {
        data_[k] += other.data_[k];
    }
    return *this;
}

Matrix &Matrix::operator-=(const Matrix &other) {
    check_same(*this, other, "subtract");
    for (std::size_t k = 0; k < data_.size(); ++k) {
        data_[k] -= other.data_[k];
    }
    return *this;
}

Matrix &Matrix::operator*=(Complex scalar) {
    for (auto &z : data_) {
        z *= scalar;
    }
    return *this;
}

Matrix operator*(const Matrix &a, const Matrix &b) {
    check_same(a, b, "mat_mul");
    const std::size_t n = a.dim();
    Matrix m(n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t k = 0; k < n; ++k) {
            const Complex ark = a(r, k);
            for (std::size_t c = 0; c < n; ++c) {
                m(r, c) += ark * b(k, c);
            }
        }
    }
    return m;
}

Vector operator*(const Matrix &a, std::span<const Complex> v) {
    if (v.size() != a.dim()) {
        throw DimensionError(fmt::format("matrix-vector: {}x{} matrix, vector of length {}", a.dim(),
                                         a.dim(), v.size()));
    }
    Vector out(a.dim());
    for (std::size_t r = 0; r < a.dim(); ++r) {
        for (std::size_t c = 0; c < a.dim(); ++c) {
            out[r] += a(r, c) * v[c];
        }
    }
    return out;
}

Matrix mat_mul(const Matrix &a, const Matrix &b) { return a * b; }

Matrix commutator(const Matrix &a, const Matrix &b) {
    check_same(a, b, "commutator");
    return a * b - b * a;
}

Matrix anticommutator(const Matrix &a, const Matrix &b) {
    check_same(a, b, "anticommutator");
    return a * b + b * a;
}

Complex trace(const Matrix &a) { return a.trace(); }
Complex det(const Matrix &a) { return a.det(); }
Matrix adjoint(const Matrix &a) { return a.adjoint(); }

Matrix kron(const Matrix &a, const Matrix &b) {
    const std::size_t na = a.dim();
    const std::size_t nb = b.dim();
    Matrix m(na * nb);
    for (std::size_t i = 0; i < na; ++i) {
        for (std::size_t j = 0; j < na; ++j) {
            for (std::size_t k = 0; k < nb; ++k) {
                for (std::size_t l = 0; l < nb; ++l) {
                    m(i * nb + k, j * nb + l) = a(i, j) * b(k, l);
                }
            }
        }
    }
    return m;
}

Vector kron(std::span<const Complex> a, std::span<const Complex> b) {
    Vector out;
    out.reserve(a.size() * b.size());
    for (Complex x : a) {
        for (Complex y : b) {
            out.push_back(x * y);
        }
    }
    return out;
}

Complex hs_inner(const Matrix &a, const Matrix &b) {
    check_same(a, b, "hs_inner");
    Complex s = 0;
    for (std::size_t r = 0; r < a.dim(); ++r) {
        for (std::size_t c = 0; c < a.dim(); ++c) {
            s += std::conj(a(r, c)) * b(r, c);
        }
    }
    return s;
}

double max_abs_diff(const Matrix &a, const Matrix &b) {
    check_same(a, b, "max_abs_diff");
    double m = 0;
    for (std::size_t r = 0; r < a.dim(); ++r) {
        for (std::size_t c = 0; c < a.dim(); ++c) {
            m = std::max(m, std::abs(a(r, c) - b(r, c)));
        }
    }
    return m;
}

double max_abs_diff(std::span<const Complex> a, std::span<const Complex> b) {
    if (a.size() != b.size()) {
        throw DimensionError(fmt::format("vector lengths differ ({} vs {})", a.size(), b.size()));
    }
    double m = 0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        m = std::max(m, std::abs(a[k] - b[k]));
    }
    return m;
}

double max_abs(const Matrix &a) { return max_abs_diff(a, Matrix::zero(a.dim())); }

double norm(std::span<const Complex> v) {
    double s = 0;
    for (Complex z : v) {
        s += std::norm(z);
    }
    return std::sqrt(s);
}

bool is_hermitian(const Matrix &a, double tol) { return max_abs_diff(a, a.adjoint()) <= tol; }

double unitarity_residual(const Matrix &a) {
    return max_abs_diff(a.adjoint() * a, Matrix::identity(a.dim()));
}

bool is_unitary(const Matrix &a, double tol) { return unitarity_residual(a) <= tol; }

void require_hermitian(const Matrix &a, double tol, const char *what) {
    double worst = -1;
    std::size_t wr = 0;
    std::size_t wc = 0;
    for (std::size_t r = 0; r < a.dim(); ++r) {
        for (std::size_t c = r; c < a.dim(); ++c) {
            double d = std::abs(a(r, c) - std::conj(a(c, r)));
            if (d > worst) {
                worst = d;
                wr = r;
                wc = c;
            }
        }
    }
    if (worst > tol) {
        throw NotHermitianError(fmt::format(
            "{}: matrix is not Hermitian: entry ({}, {}) = {}{:+}i differs from conj of ({}, {}) by {:.3g}",
            what, wr, wc, a(wr, wc).real(), a(wr, wc).imag(), wc, wr, worst));
    }
}

HermitianEigen eigh(const Matrix &h) {
    constexpr double kOffDiagonalTol = 1e-14;
    constexpr int kMaxSweeps = 100;

    const std::size_t n = h.dim();
    Matrix a = h;
    Matrix v = Matrix::identity(n);
    for (std::size_t k = 0; k < n; ++k) {
        a(k, k) = a(k, k).real();
    }

    int sweep = 0;
    while (off_diagonal_norm(a) >= kOffDiagonalTol) {
        if (++sweep > kMaxSweeps) {
            throw std::runtime_error(fmt::format("eigh: Jacobi did not converge in {} sweeps", kMaxSweeps));
        }
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const Complex apq = a(p, q);
                const double g = std::abs(apq);
                if (g == 0.0) {
                    continue;
                }
                // Strip the phase of a_pq, then apply a real Givens rotation
                // that zeroes the now real symmetric 2x2 block.
                const Complex phase = apq / g;
                const double theta = 0.5 * std::atan2(2.0 * g, a(q, q).real() - a(p, p).real());
                const double c = std::cos(theta);
                const double s = std::sin(theta);
                Matrix rot = Matrix::identity(n);
                rot(p, p) = c;
                rot(p, q) = s;
                rot(q, p) = -s * std::conj(phase);
                rot(q, q) = c * std::conj(phase);
                a = rot.adjoint() * a * rot;
                v = v * rot;
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                a(p, p) = a(p, p).real();
                a(q, q) = a(q, q).real();
            }
        }
    }

    HermitianEigen out{std::vector<double>(n), v};
    for (std::size_t k = 0; k < n; ++k) {
        out.values[k] = a(k, k).real();
    }
    return out;
}

Matrix expm_hermitian(const Matrix &h, double t) {
    require_hermitian(h, 1e-12, "expm_hermitian");
    const HermitianEigen eig = eigh(h);
    const std::size_t n = h.dim();
    Matrix out(n);
    for (std::size_t k = 0; k < n; ++k) {
        const Complex phase = std::exp(kI * (eig.values[k] * t));
        for (std::size_t r = 0; r < n; ++r) {
            const Complex vrk = eig.vectors(r, k) * phase;
            for (std::size_t c = 0; c < n; ++c) {
                out(r, c) += vrk * std::conj(eig.vectors(c, k));
            }
        }
    }
    return out;
}

}  // namespace symgate
