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


#include "symgate/gates.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include <fmt/format.h>

#include "symgate/su3_basis.h"

namespace symgate {

namespace {

constexpr double kSqrt3 = std::numbers::sqrt3;

}  // namespace

std::string gate_name(GateLabel label) {
    switch (label) {
        case GateLabel::bl:
            return "BL";
        case GateLabel::custom:
            return "custom";
        default:
            return fmt::format("B{}", static_cast<int>(label) + 1);
    }
}

LMGParams::LMGParams(double g1, double g2, double t)
    : g1_(g1), g2_(g2), t_(t), xi_(2 * g1 * t), beta_(2 / kSqrt3 * g2 * t) {}

SymmetricGate custom_gate(const Matrix &u3) {
    if (u3.dim() != 3) {
        throw DimensionError(fmt::format("custom gate must be 3x3, got {}x{}", u3.dim(), u3.dim()));
    }
    if (!is_unitary(u3, 1e-12)) {
        throw std::invalid_argument(
            fmt::format("custom gate is not unitary (residual {:.3g})", unitarity_residual(u3)));
    }
    return {GateLabel::custom, 0.0, std::nullopt, u3, to_qubit_basis(u3, 1.0)};
}

SymmetricGate gate(int k, double theta) {
    if (k == 0) {
        throw std::out_of_range("B_0 is a global phase and not a symmetric gate; use k in 1..8");
    }
    if (k < 1 || k > 8) {
        throw std::out_of_range(fmt::format("gate index {} out of range 1..8", k));
    }
    Matrix u3;
    if (k == 8) {
        // M8 has eigenvalues {1, -2, 1}/sqrt3, so the closed form below does not apply.
        Complex corner = std::exp(kI * theta / kSqrt3);
        u3 = Matrix::diagonal({corner, std::exp(-2.0 * kI * theta / kSqrt3), corner});
    } else {
        // Valid because M_k (k = 1..7) has spectrum {1, 0, -1}.
        const Matrix &m = m_matrix(MIndex(k));
        u3 = Matrix::identity(3) + (std::cos(theta) - 1) * (m * m) + kI * std::sin(theta) * m;
    }
    Matrix u4 = to_qubit_basis(u3, 1.0);
    return {static_cast<GateLabel>(k - 1), theta, std::nullopt, std::move(u3), std::move(u4)};
}

Matrix lmg_hamiltonian(double g1, double g2) {
    Matrix jp = angular_momentum(Axis::plus);
    Matrix jm = angular_momentum(Axis::minus);
    Matrix h = g1 * (jp * jp + jm * jm) + g2 * (jp * jm + jm * jp);

    double g1p = 2 * g1;
    double g2p = 2 / kSqrt3 * g2;
    Matrix from_m = g1p * m_matrix(MIndex(7)) +
                    g2p * (std::sqrt(8.0) * m_matrix(MIndex(0)) - m_matrix(MIndex(8)));
    double scale = std::max(1.0, std::abs(g1) + std::abs(g2));
    double residual = max_abs_diff(h, from_m);
    if (residual > 1e-12 * scale) {
        throw std::logic_error(
            fmt::format("LMG Hamiltonian disagrees with its M-basis form (residual {:.3g})", residual));
    }
    return h;
}

SymmetricGate lmg_gate(const LMGParams &p) {
    Matrix u3 = expm_hermitian(lmg_hamiltonian(p.g1(), p.g2()), p.t());
    Matrix u4 = to_qubit_basis(u3, 1.0);
    return {GateLabel::bl, p.t(), p, std::move(u3), std::move(u4)};
}

Matrix lmg_closed_form(const LMGParams &p) {
    Complex corner = std::exp(kI * kSqrt3 * p.beta());
    Complex c = corner * std::cos(p.xi());
    Complex s = kI * corner * std::sin(p.xi());
    return Matrix{{c, 0, s}, {0, std::exp(2.0 * kI * kSqrt3 * p.beta()), 0}, {s, 0, c}};
}

LocalFactor extract_local_factor(const Matrix &u4) {
    if (u4.dim() != 4) {
        throw DimensionError(fmt::format("expected a 4x4 matrix, got {}x{}", u4.dim(), u4.dim()));
    }
    // Reshuffle so that a product a (x) b becomes the rank-one matrix vec(a) vec(b)^T.
    Matrix r(4);
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) {
            for (std::size_t k = 0; k < 2; ++k) {
                for (std::size_t l = 0; l < 2; ++l) {
                    r(2 * i + j, 2 * k + l) = u4(2 * i + k, 2 * j + l);
                }
            }
        }
    }
    HermitianEigen eig = eigh(r * r.adjoint());
    std::size_t top = static_cast<std::size_t>(
        std::max_element(eig.values.begin(), eig.values.end()) - eig.values.begin());
    Matrix a{{eig.vectors(0, top), eig.vectors(1, top)}, {eig.vectors(2, top), eig.vectors(3, top)}};

    // Least-squares scale c for u4 ~ c (a (x) a), then v = sqrt(c) a.
    Matrix aa = kron(a, a);
    Complex c = hs_inner(aa, u4) / hs_inner(aa, aa);
    Matrix v = a * std::sqrt(c);
    double residual = std::max(max_abs_diff(kron(v, v), u4), unitarity_residual(v));
    return {std::move(v), residual};
}

bool is_symmetric_local(const Matrix &u4, double tol) { return extract_local_factor(u4).residual <= tol; }

}  // namespace symgate
