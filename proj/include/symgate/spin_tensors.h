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

#ifndef SYMGATE_SPIN_TENSORS_H
#define SYMGATE_SPIN_TENSORS_H

#include <string>
#include <vector>

#include "symgate/linalg.h"

namespace symgate {

/// Spin quantum number j = two_j / 2, limited to j <= 5/2.
class SpinLabel {
   public:
    static constexpr int kMaxTwoJ = 5;

    explicit SpinLabel(int two_j);

    int two_j() const { return two_j_; }
    double j() const { return two_j_ / 2.0; }
    std::size_t dim() const { return static_cast<std::size_t>(two_j_ + 1); }
    /// Largest tensor rank, 2j.
    int max_rank() const { return two_j_; }

    bool operator==(const SpinLabel &) const = default;

   private:
    int two_j_;
};

/// Parses "1", "3/2", "0.5" style spin labels.
SpinLabel parse_spin(const std::string &text);

/// Condon-Shortley Clebsch-Gordan coefficient <j1 m1; j2 m2 | J M>.
/// All arguments are doubled (two_j1 = 2*j1, ...). Returns 0 when the
/// projections do not add up or the triangle rule fails; throws
/// std::invalid_argument for |m| > j or mismatched integer/half-integer parity.
double clebsch_gordan(int two_j1, int two_m1, int two_j2, int two_m2, int two_J, int two_M);

/// Spin matrices in the |j m> basis ordered m = j, j-1, ..., -j.
struct SpinMatrices {
    Matrix jx, jy, jz, jplus, jminus;
};
SpinMatrices spin_matrices(SpinLabel j);

enum class TensorComponent { spherical, plus, minus, zero };

struct TensorOperator {
    SpinLabel j;
    int k;
    int q;
    TensorComponent component;
    Matrix matrix;
};

/// Spherical tensor operator tau^k_q with Tr(tau^dagger tau') = (2j+1) delta delta.
///
/// Matrix elements are <j m'|tau^k_q|j m> = c_k CG(j m; k q | j m'). The
/// real constant c_k is fixed by the trace norm, and its sign by requiring
/// <j, -j+k|tau^k_k|j, -j> to carry the sign (-1)^k, which is the sign of
/// r^k Y^k_k. For j = 1 this gives tau^1_0 = sqrt(3/2) J_z and
/// tau^2_2 = (sqrt(3)/2) J_+^2.
TensorOperator tau(SpinLabel j, int k, int q);

/// Orthonormal Hermitian basis (Tr(A B) = delta) of (2j+1)^2 operators, ordered
/// (T^0)^0_0, then for each rank k = 1..2j: (T^0)^k_0 followed by
/// (T^+)^k_q, (T^-)^k_q for q = 1..k.
std::vector<TensorOperator> hermitian_basis(SpinLabel j);

/// Spherical tensor parameters h^k_q of a Hermitian operator.
class TensorParams {
   public:
    explicit TensorParams(SpinLabel j);

    SpinLabel spin() const { return j_; }
    Complex &at(int k, int q);
    Complex at(int k, int q) const;

    /// sum_q |h^k_q|^2 for one rank.
    double rank_weight(int k) const;
    /// max |conj(h^k_q) - (-1)^q h^k_{-q}|, zero for a Hermitian operator.
    double hermiticity_residual() const;

   private:
    std::size_t index(int k, int q) const;

    SpinLabel j_;
    std::vector<Complex> coeffs_;
};

/// h^k_q = Tr(H tau^k_q). Throws NotHermitianError or DimensionError.
TensorParams decompose(const Matrix &h, SpinLabel j);
/// H = (1/(2j+1)) sum h^k_q tau^k_q^dagger.
Matrix reconstruct(const TensorParams &p);

class UnsupportedRankError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// Wigner small-d matrix d^k(beta) for rank k <= 2, rows and columns indexed
/// q = k, k-1, ..., -k. Real valued (imaginary parts are zero).
Matrix wigner_d(int k, double beta);
/// D^k_{q'q}(alpha beta gamma) = e^{-i q' alpha} d^k_{q'q}(beta) e^{-i q gamma}.
Matrix wigner_D(int k, double alpha, double beta, double gamma);

/// Coordinate rotation of tensor parameters: (h^k_q)^R = sum_{q'} D^k_{q'q} h^k_{q'}.
/// Only parameter sets with ranks <= 2 (j <= 1) are supported.
TensorParams rotate_params(const TensorParams &p, double alpha, double beta, double gamma);

}  // namespace symgate

#endif  // SYMGATE_SPIN_TENSORS_H
