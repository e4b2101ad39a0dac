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


#ifndef SYMGATE_GATES_H
#define SYMGATE_GATES_H

#include <optional>
#include <string>

#include "symgate/linalg.h"

namespace symgate {

enum class GateLabel { b1, b2, b3, b4, b5, b6, b7, b8, bl, custom };

std::string gate_name(GateLabel label);

/// Couplings and time for the LMG gate; xi and beta are the rescaled angles.
class LMGParams {
   public:
    LMGParams(double g1, double g2, double t);

    double g1() const { return g1_; }
    double g2() const { return g2_; }
    double t() const { return t_; }
    /// xi = 2 g1 t
    double xi() const { return xi_; }
    /// beta = (2/sqrt3) g2 t
    double beta() const { return beta_; }

   private:
    double g1_;
    double g2_;
    double t_;
    double xi_;
    double beta_;
};

/// A gate on the spin-1 subspace together with its two-qubit form, which acts
/// as the identity on the singlet.
struct SymmetricGate {
    GateLabel label;
    double theta;
    std::optional<LMGParams> lmg;
    Matrix u3;
    Matrix u4;
};

/// Wraps an arbitrary 3x3 unitary; throws std::invalid_argument if it is not unitary.
SymmetricGate custom_gate(const Matrix &u3);

/// B_k = exp(i M_k theta) for k in 1..8. k = 0 is only a global phase and is rejected.
SymmetricGate gate(int k, double theta);

/// G1 (J+^2 + J-^2) + G2 (J+J- + J-J+), cross-checked against its M-basis form.
Matrix lmg_hamiltonian(double g1, double g2);

/// exp(i H_L t).
SymmetricGate lmg_gate(const LMGParams &p);

/// The analytic B_L in terms of xi and beta.
Matrix lmg_closed_form(const LMGParams &p);

struct LocalFactor {
    /// Best v with u4 ~ v (x) v.
    Matrix v;
    double residual;
};

/// Fits u4 by v (x) v for a single-qubit v. The residual is the max entry
/// deviation of v (x) v from u4 combined with the unitarity residual of v.
LocalFactor extract_local_factor(const Matrix &u4);

bool is_symmetric_local(const Matrix &u4, double tol = 1e-10);

}  // namespace symgate

#endif  // SYMGATE_GATES_H
