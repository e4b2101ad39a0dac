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

#ifndef SYMGATE_LINALG_H
#define SYMGATE_LINALG_H

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <vector>

namespace symgate {

using Complex = std::complex<double>;
using Vector = std::vector<Complex>;

inline constexpr Complex kI{0.0, 1.0};
inline constexpr std::size_t kMaxDim = 6;

/// Raised when operand shapes do not agree.
class DimensionError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when an operation requiring a Hermitian argument gets something else.
class NotHermitianError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// Dense square complex matrix, row-major. Dimensions 1..6 cover every
/// operator in the library (spin j <= 5/2 and the 4x4 two-qubit space).
class Matrix {
   public:
    Matrix() = default;
    explicit Matrix(std::size_t dim);
    Matrix(std::initializer_list<std::initializer_list<Complex>> rows);

    static Matrix identity(std::size_t dim);
    static Matrix zero(std::size_t dim) { return Matrix(dim); }
    static Matrix diagonal(std::span<const Complex> diag);
    static Matrix diagonal(std::initializer_list<Complex> diag);

    std::size_t dim() const { return dim_; }

    Complex &operator()(std::size_t row, std::size_t col) { return data_[row * dim_ + col]; }
    const Complex &operator()(std::size_t row, std::size_t col) const {
        return data_[row * dim_ + col];
    }

    Matrix adjoint() const;
    Matrix transpose() const;
    Matrix conj() const;
    Complex trace() const;
    Complex det() const;

    Matrix &operator+=(const Matrix &other);
    Matrix &operator-=(const Matrix &other);
    Matrix &operator*=(Complex scalar);

    friend Matrix operator+(Matrix a, const Matrix &b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix &b) { return a -= b; }
    friend Matrix operator-(Matrix a) { return a *= -1.0; }
    friend Matrix operator*(Matrix a, Complex s) { return a *= s; }
    friend Matrix operator*(Complex s, Matrix a) { return a *= s; }
    friend Matrix operator/(Matrix a, Complex s) { return a *= 1.0 / s; }
    friend Matrix operator*(const Matrix &a, const Matrix &b);
    friend Vector operator*(const Matrix &a, std::span<const Complex> v);

    bool operator==(const Matrix &other) const = default;

   private:
    std::size_t dim_ = 0;
    std::vector<Complex> data_;
};

Matrix mat_mul(const Matrix &a, const Matrix &b);
Matrix commutator(const Matrix &a, const Matrix &b);
Matrix anticommutator(const Matrix &a, const Matrix &b);
Complex trace(const Matrix &a);
Complex det(const Matrix &a);
Matrix adjoint(const Matrix &a);

/// Kronecker product; the result dimension must stay within kMaxDim.
Matrix kron(const Matrix &a, const Matrix &b);
Vector kron(std::span<const Complex> a, std::span<const Complex> b);

/// Tr(a^dagger b).
Complex hs_inner(const Matrix &a, const Matrix &b);

/// Largest entrywise |a - b|.
double max_abs_diff(const Matrix &a, const Matrix &b);
double max_abs_diff(std::span<const Complex> a, std::span<const Complex> b);
double max_abs(const Matrix &a);
double norm(std::span<const Complex> v);

bool is_hermitian(const Matrix &a, double tol);
bool is_unitary(const Matrix &a, double tol);
/// max |a^dagger a - I|.
double unitarity_residual(const Matrix &a);

/// Throws NotHermitianError naming the worst offending entry when max |a - a^dagger| > tol.
void require_hermitian(const Matrix &a, double tol, const char *what);

struct HermitianEigen {
    std::vector<double> values;
    /// Columns are the eigenvectors.
    Matrix vectors;
};

/// Cyclic complex Jacobi. Converges when the off-diagonal Frobenius norm is
/// below 1e-14, within 100 sweeps; otherwise throws std::runtime_error.
HermitianEigen eigh(const Matrix &h);

/// e^{i h t} for Hermitian h (max |h - h^dagger| <= 1e-12), via eigh.
Matrix expm_hermitian(const Matrix &h, double t);

}  // namespace symgate

#endif  // SYMGATE_LINALG_H
