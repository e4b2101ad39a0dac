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


#ifndef SYMGATE_ENTANGLEMENT_H
#define SYMGATE_ENTANGLEMENT_H

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "symgate/gates.h"
#include "symgate/linalg.h"

namespace symgate {

// Two-qubit amplitudes are always ordered |uu>, |ud>, |du>, |dd>.

/// The Bell transform U. It acts on angular-momentum coordinates
/// (|1 1>, |1 0>, |1 -1>, |0 0>).
const Matrix &bell_transform();

/// The four Bell states in angular-momentum coordinates, in the order that
/// matches the rows of bell_transform().
const std::array<Vector, 4> &bell_states();

/// Max over rows r of min over s = +-1 of |s conj(U_r) - bell_r|.
double bell_transform_residual();

/// G1 = tr^2(m) / (16 det u4) with m = B_B^T B_B. Throws std::invalid_argument
/// if u4 is not unitary within 1e-10, DimensionError if it is not 4x4.
Complex makhlin_g1(const Matrix &u4);

enum class EntanglerClass { local, entangling, perfect, special_perfect };

std::string class_name(EntanglerClass c);

inline constexpr double kClassifyTol = 1e-9;
inline constexpr double kMaxEntanglingPower = 2.0 / 9.0;
inline constexpr double kPerfectThreshold = 1.0 / 6.0;

struct EntanglementReport {
    Complex g1;
    double g1_abs;
    double ep;
    EntanglerClass classification;
    GateLabel label;
    double theta;
};

/// (2/9)(1 - |G1|), the only route from G1 to entangling power.
double entangling_power_from_g1(double g1_abs);

EntanglerClass classify(double ep);

EntanglementReport entangling_power(const Matrix &u4);
EntanglementReport entangling_power(const SymmetricGate &g);

/// 2|ad - bc|. Inputs off unit norm by more than 1e-10 are normalized first.
/// Throws std::invalid_argument on a zero vector and DimensionError unless size is 4.
double concurrence(std::span<const Complex> psi);

struct ConcurrenceResult {
    double value;
    bool renormalized;
};

ConcurrenceResult concurrence_checked(std::span<const Complex> psi);

struct SeparableSymmetricState {
    double alpha;
    double phi;
    Vector vec3;
    Vector vec4;
};

/// (cos(a/2)|u> + sin(a/2) e^{i phi}|d>)^(x)2. Angles are folded into
/// alpha in [0, pi], phi in [0, 2 pi) without changing the state.
SeparableSymmetricState separable_state(double alpha, double phi);

struct GateAction {
    Vector out4;
    /// Spin-1 part of the output (|1 1>, |1 0>, |1 -1>).
    Vector out3;
    double concurrence;
};

GateAction apply_gate(const SymmetricGate &g, const SeparableSymmetricState &s);

struct ProductBasis {
    /// a, b, c, d, e, f
    std::array<Complex, 6> params;
    std::array<Vector, 4> vectors;
};

/// The general orthonormal product basis built from (a, b), (c, d), (e, f).
/// Each pair must be normalized within 1e-12.
ProductBasis product_basis(Complex a, Complex b, Complex c, Complex d, Complex e, Complex f);

enum class SpeFamily { b4_b7_b8, b5_b6 };

struct SpeConditionResult {
    SpeFamily family;
    /// The product-basis condition as printed for the family.
    bool condition;
    std::array<double, 4> concurrences;
    bool all_maximal;
    bool agree;
    /// For B5 only: the sign variant |(a^2 - b^2)(c^2 - d^2)| = |(e^2 - f^2)(c^2 - d^2)| = 1.
    std::optional<bool> sign_variant;
};

/// Checks whether the gate maximally entangles every vector of the basis.
/// The gate must be one of B4..B8 at an entangling power of 2/9.
SpeConditionResult spe_condition(const SymmetricGate &g, const ProductBasis &basis);

/// pi/2 for k = 4..7, sqrt3 pi/2 for k = 8.
double spe_theta(int k);

/// Golden-section minimization of |G1(B_k(theta))| around the special point.
double locate_spe_theta(int k, double tol = 1e-10);

/// The literal two-qubit forms of B4..B8 at entangling power 2/9.
Matrix printed_spe_matrix(int k);

struct LmgPoint {
    double t;
    double ep;
    double concurrence;
};

/// e_p of B_L(t) and the concurrence of B_L|uu> on an ascending finite grid.
std::vector<LmgPoint> lmg_entanglement_profile(double g1, double g2, std::span<const double> t_grid);

}  // namespace symgate

#endif  // SYMGATE_ENTANGLEMENT_H
