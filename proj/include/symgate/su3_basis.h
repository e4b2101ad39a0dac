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

#ifndef SYMGATE_SU3_BASIS_H
#define SYMGATE_SU3_BASIS_H

#include <array>
#include <string>
#include <vector>

#include "symgate/linalg.h"

namespace symgate {

/// Index of one of the nine spin-1 basis matrices M_0..M_8.
class MIndex {
   public:
    explicit MIndex(int k);
    int value() const { return k_; }

   private:
    int k_;
};

/// The spin-1 basis matrix M_k in the |1 m> basis (m = 1, 0, -1).
/// Tr(M_k M_k') = 2 delta_kk'.
Matrix m_matrix(MIndex k);
const std::array<Matrix, 9> &m_matrices();

enum class Axis { x, y, z, plus, minus };

/// Spin-1 angular momentum matrices.
Matrix angular_momentum(Axis axis);

/// Coefficients c_k of X = sum_k c_k M_k, c_k = Tr(X M_k) / 2. X need not be Hermitian.
using MExpansion = std::array<Complex, 9>;
MExpansion expand_in_m_basis(const Matrix &x);
Matrix from_m_expansion(const MExpansion &c);

enum class TableKind { commutator, anticommutator };

/// Printed table of [M_k, M_k'] or {M_k, M_k'} for k, k' = 1..8, each entry
/// expanded over M_0..M_8.
struct AlgebraTable {
    TableKind kind;
    std::array<std::array<MExpansion, 8>, 8> entries;

    const MExpansion &at(int k, int kp) const { return entries[k - 1][kp - 1]; }
};

/// Literal commutator and anticommutator tables, including the composite
/// entries a, b and A, B, C, D.
const AlgebraTable &commutator_table();
const AlgebraTable &anticommutator_table();

/// A printed table entry known to be wrong, with the value the basis matrices give.
struct TableErratum {
    TableKind kind;
    int k;
    int kp;
    MExpansion corrected;
};

/// [M5, M7] and [M7, M5] are printed with the wrong sign (iM1 / -iM1); the
/// literal matrices, the J expressions and the Gell-Mann relations all give
/// [M5, M7] = -iM1.
const std::vector<TableErratum> &table_errata();

struct AlgebraMismatch {
    TableKind kind;
    int k;
    int kp;
    MExpansion expected;
    MExpansion computed;
    double residual;
    /// The computed value equals a listed erratum correction.
    bool known_erratum;
};

struct AlgebraReport {
    int entries_checked = 0;
    double max_residual = 0;
    /// As max_residual, but erratum entries are compared with their correction.
    double corrected_max_residual = 0;
    /// Largest |[M_3,M_8]|, |[M_4,M_8]|, |[M_7,M_8]| entry.
    double vanishing_residual = 0;
    int triplets_checked = 0;
    double triplet_residual = 0;
    std::vector<AlgebraMismatch> mismatches;
    std::vector<std::string> triplet_failures;

    /// Every entry equals the printed table.
    bool passed() const { return mismatches.empty() && triplet_failures.empty(); }
    /// Every entry equals the printed table or its listed erratum correction.
    bool consistent() const;
    int errata_confirmed() const;
};

/// Recomputes all 128 commutators/anticommutators and compares with the
/// literal tables coefficient by coefficient (tolerance 1e-13). Also checks
/// the vanishing commutators with M_8 and the vector triplets.
AlgebraReport verify_algebra_tables(double tol = 1e-13);

/// One-line description naming (k, k'), expected and computed expansions.
std::string describe(const AlgebraMismatch &m);

/// Standard Gell-Mann matrices Lambda_1..Lambda_8 (index 0 unused).
const std::array<Matrix, 9> &gellmann_matrices();

/// M_k = sum_l w_l Lambda_l for k = 1..8.
struct GellMannRelation {
    int k;
    std::array<Complex, 9> weights;
};
const std::vector<GellMannRelation> &gellmann_map();

struct GellMannReport {
    int relations_checked = 0;
    double max_residual = 0;
    std::vector<int> failed;

    bool passed() const { return failed.empty(); }
};
GellMannReport verify_gellmann(double tol = 1e-14);

/// Real coefficients of H = (1/2) sum_k h_k M_k.
struct HCoefficients {
    std::array<double, 9> h{};
};

/// h_k = Tr(H M_k). Throws NotHermitianError / DimensionError.
HCoefficients decompose_hamiltonian(const Matrix &h);
Matrix build_hamiltonian(const HCoefficients &c);

/// 4x4 map from product-basis coordinates (|uu>, |ud>, |du>, |dd>) to
/// angular-momentum coordinates (|11>, |10>, |1-1>, |00>).
const Matrix &qubit_to_angular_transform();

/// Embeds a 3x3 symmetric-subspace operator with the given singlet-sector value
/// and expresses it in the product basis. Use singlet 0 for observables and 1 for gates.
Matrix to_qubit_basis(const Matrix &op3, Complex singlet_value);

struct SymmetricBlock {
    Matrix op3;
    Complex singlet;
};
/// Inverse of to_qubit_basis; throws std::invalid_argument when the operator
/// couples the triplet and singlet sectors (tolerance 1e-12).
SymmetricBlock from_qubit_basis(const Matrix &op4);

}  // namespace symgate

#endif  // SYMGATE_SU3_BASIS_H
