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

#include <cmath>
#include <random>

#include "gtest/gtest.h"
#include "symgate/su3_basis.h"
#include "test_util.h"

using namespace symgate;
using symgate::testing::kPi;

namespace {

const double kSqrt2 = std::sqrt(2.0);
const double kSqrt3 = std::sqrt(3.0);

// The explicit gate matrices printed alongside the closed form. B2 and B5 are
// printed with a stray factor i on two off-diagonal entries (the printed
// matrices are not unitary); those entries are made real here.
Matrix printed_gate(int k, double th) {
    double c = std::cos(th);
    double s = std::sin(th);
    double c2 = std::pow(std::cos(th / 2), 2);
    double s2 = std::pow(std::sin(th / 2), 2);
    double q = s / kSqrt2;
    Complex iq = kI * q;
    switch (k) {
        case 1:
            return Matrix{{c2, -iq, -s2}, {-iq, c, -iq}, {-s2, -iq, c2}};
        case 2:
            return Matrix{{c2, q, s2}, {-q, c, q}, {s2, -q, c2}};
        case 3:
            return Matrix::diagonal({std::exp(kI * th), 1.0, std::exp(-kI * th)});
        case 4:
            return Matrix{{c, 0, -s}, {0, 1, 0}, {s, 0, c}};
        case 5:
            return Matrix{{c2, q, -s2}, {-q, c, -q}, {-s2, q, c2}};
        case 6:
            return Matrix{{c2, -iq, s2}, {-iq, c, iq}, {s2, iq, c2}};
        case 7:
            return Matrix{{c, 0, kI * s}, {0, 1, 0}, {kI * s, 0, c}};
        default:
            return Matrix::diagonal(
                {std::exp(kI * th / kSqrt3), std::exp(-2.0 * kI * th / kSqrt3), std::exp(kI * th / kSqrt3)});
    }
}

TEST(gate, matches_printed_matrices) {
    for (int k = 1; k <= 8; ++k) {
        for (double th : {0.0, 0.3, 1.1, kPi / 2, 2.9, -0.8}) {
            EXPECT_LT(max_abs_diff(gate(k, th).u3, printed_gate(k, th)), 1e-15) << "k=" << k << " theta=" << th;
        }
    }
}

TEST(gate, printed_b2_b5_are_not_unitary) {
    double th = 0.7;
    double c2 = std::pow(std::cos(th / 2), 2);
    double s2 = std::pow(std::sin(th / 2), 2);
    Complex q = std::sin(th) / kSqrt2;
    Matrix b2{{c2, q, s2}, {-kI * q, std::cos(th), q}, {s2, -kI * q, c2}};
    Matrix b5{{c2, q, -s2}, {-kI * q, std::cos(th), -kI * q}, {-s2, q, c2}};
    EXPECT_GT(unitarity_residual(b2), 0.1);
    EXPECT_GT(unitarity_residual(b5), 0.1);
}

TEST(gate, closed_form_agrees_with_exponential) {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> angle(0.0, 2 * kPi);
    double worst = 0;
    for (int k = 1; k <= 8; ++k) {
        const Matrix &m = m_matrix(MIndex(k));
        for (int n = 0; n < 1000; ++n) {
            double th = angle(rng);
            worst = std::max(worst, max_abs_diff(gate(k, th).u3, expm_hermitian(m, th)));
        }
    }
    EXPECT_LT(worst, 1e-12);
}

TEST(gate, examples) {
    double th = 0.9;
    EXPECT_LT(max_abs_diff(gate(3, th).u3, Matrix::diagonal({std::exp(kI * th), 1.0, std::exp(-kI * th)})),
              1e-15);
    Matrix b4{{std::cos(th), 0, -std::sin(th)}, {0, 1, 0}, {std::sin(th), 0, std::cos(th)}};
    EXPECT_LT(max_abs_diff(gate(4, th).u3, b4), 1e-15);
    for (int k = 1; k <= 8; ++k) {
        EXPECT_LT(max_abs_diff(gate(k, 0).u3, Matrix::identity(3)), 1e-15);
        EXPECT_EQ(gate(k, 0.2).label, static_cast<GateLabel>(k - 1));
    }
    EXPECT_EQ(gate_name(GateLabel::b8), "B8");
    EXPECT_EQ(gate_name(GateLabel::bl), "BL");
}

TEST(gate, inverse_and_unitarity) {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> angle(-7.0, 7.0);
    for (int k = 1; k <= 8; ++k) {
        for (int n = 0; n < 50; ++n) {
            double th = angle(rng);
            SymmetricGate g = gate(k, th);
            EXPECT_LT(max_abs_diff(g.u3 * gate(k, -th).u3, Matrix::identity(3)), 1e-12);
            EXPECT_LT(unitarity_residual(g.u3), 1e-12);
            EXPECT_LT(unitarity_residual(g.u4), 1e-12);
            EXPECT_LT(max_abs_diff(g.u4, to_qubit_basis(g.u3, 1.0)), 1e-15);
        }
    }
}

TEST(gate, singlet_is_untouched) {
    Vector singlet{0.0, 1 / kSqrt2, -1 / kSqrt2, 0.0};
    for (int k = 1; k <= 8; ++k) {
        Vector out = gate(k, 1.3).u4 * singlet;
        EXPECT_LT(max_abs_diff(out, singlet), 1e-15);
    }
}

TEST(gate, rejects_bad_index) {
    EXPECT_THROW(gate(0, 1.0), std::out_of_range);
    EXPECT_THROW(gate(9, 1.0), std::out_of_range);
    EXPECT_THROW(gate(-1, 1.0), std::out_of_range);
}

TEST(gate, custom) {
    SymmetricGate g = custom_gate(gate(6, 0.4).u3);
    EXPECT_EQ(g.label, GateLabel::custom);
    EXPECT_THROW(custom_gate(m_matrix(MIndex(7))), std::invalid_argument);
    EXPECT_THROW(custom_gate(Matrix::identity(4)), DimensionError);
}

TEST(local_factor, rotation_gates_are_products) {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> angle(0.0, 2 * kPi);
    for (int k = 1; k <= 3; ++k) {
        for (int n = 0; n < 100; ++n) {
            double th = angle(rng);
            LocalFactor f = extract_local_factor(gate(k, th).u4);
            EXPECT_LT(f.residual, 1e-10) << "k=" << k << " theta=" << th;
        }
    }
}

TEST(local_factor, b3_factor_is_z_rotation) {
    double th = 0.8;
    LocalFactor f = extract_local_factor(gate(3, th).u4);
    // v is fixed up to a sign by v (x) v.
    Matrix expected = Matrix::diagonal({std::exp(kI * th / 2.0), std::exp(-kI * th / 2.0)});
    EXPECT_LT(std::min(max_abs_diff(f.v, expected), max_abs_diff(f.v, -expected)), 1e-12);
}

TEST(local_factor, entanglers_are_not_products) {
    for (int k = 4; k <= 8; ++k) {
        EXPECT_FALSE(is_symmetric_local(gate(k, 0.5).u4)) << "k=" << k;
    }
    EXPECT_TRUE(is_symmetric_local(Matrix::identity(4)));
    std::mt19937_64 rng(8);
    Matrix v = symgate::testing::random_qubit_unitary(rng);
    EXPECT_TRUE(is_symmetric_local(kron(v, v)));
    Matrix w = symgate::testing::random_qubit_unitary(rng);
    EXPECT_FALSE(is_symmetric_local(kron(v, w)));
}

TEST(lmg, params_derived_fields) {
    LMGParams p(0.7, -1.3, 2.5);
    EXPECT_NEAR(p.xi(), 2 * 0.7 * 2.5, 1e-14);
    EXPECT_NEAR(p.beta(), 2 / kSqrt3 * -1.3 * 2.5, 1e-14);
}

TEST(lmg, hamiltonian_examples) {
    EXPECT_LT(max_abs(lmg_hamiltonian(0, 0)), 1e-15);
    EXPECT_LT(max_abs_diff(lmg_hamiltonian(1, 0), 2.0 * m_matrix(MIndex(7))), 1e-14);
    EXPECT_LT(max_abs_diff(lmg_hamiltonian(0, 1), Matrix::diagonal({2.0, 4.0, 2.0})), 1e-14);
    std::mt19937_64 rng(21);
    std::normal_distribution<double> g(0.0, 3.0);
    for (int n = 0; n < 100; ++n) {
        Matrix h = lmg_hamiltonian(g(rng), g(rng));
        EXPECT_LT(max_abs(commutator(h, m_matrix(MIndex(8)))), 1e-13);
        EXPECT_TRUE(is_hermitian(h, 1e-15));
    }
}

TEST(lmg, gate_matches_closed_form) {
    std::mt19937_64 rng(22);
    std::normal_distribution<double> g(0.0, 1.5);
    std::uniform_real_distribution<double> time(0.0, 4.0);
    for (int n = 0; n < 200; ++n) {
        LMGParams p(g(rng), g(rng), time(rng));
        SymmetricGate b = lmg_gate(p);
        EXPECT_LT(max_abs_diff(b.u3, lmg_closed_form(p)), 1e-12);
        EXPECT_LT(unitarity_residual(b.u4), 1e-12);
        Matrix m8 = to_qubit_basis(m_matrix(MIndex(8)), 0.0);
        EXPECT_LT(max_abs(commutator(b.u4, m8)), 1e-12);
        EXPECT_EQ(b.label, GateLabel::bl);
        ASSERT_TRUE(b.lmg.has_value());
    }
}

TEST(lmg, printed_lower_left_entry_breaks_unitarity) {
    LMGParams p(0.6, 0.2, 1.0);
    Matrix printed = lmg_closed_form(p);
    printed(2, 0) = kI * std::exp(kI * kSqrt3 * p.beta()) * std::cos(p.xi());
    EXPECT_GT(unitarity_residual(printed), 0.1);
}

TEST(lmg, special_cases) {
    EXPECT_LT(max_abs_diff(lmg_gate(LMGParams(1.0, 2.0, 0.0)).u3, Matrix::identity(3)), 1e-15);
    LMGParams p(0.0, 0.9, 1.7);
    Matrix b = lmg_gate(p).u3;
    Complex corner = std::exp(kI * kSqrt3 * p.beta());
    EXPECT_LT(max_abs_diff(b, Matrix::diagonal({corner, corner * corner, corner})), 1e-12);
}

TEST(lmg, action_on_up_up) {
    for (double t : {0.0, 0.2, 0.7, 1.9}) {
        LMGParams p(1.0, 0.4, t);
        Vector out = lmg_gate(p).u4 * Vector{1.0, 0.0, 0.0, 0.0};
        Vector expected{std::cos(2 * t), 0.0, 0.0, kI * std::sin(2 * t)};
        Complex phase = std::exp(kI * kSqrt3 * p.beta());
        for (Complex &x : expected) {
            x *= phase;
        }
        EXPECT_LT(max_abs_diff(out, expected), 1e-12) << "t=" << t;
    }
}

}  // namespace
