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

#include "symgate/su3_basis.h"

#include <algorithm>
#include <cmath>
#include <utility>

#include <fmt/format.h>

namespace symgate {

namespace {

const double kSqrt2 = std::sqrt(2.0);
const double kSqrt3 = std::sqrt(3.0);

using Term = std::pair<int, Complex>;

MExpansion expansion(std::initializer_list<Term> terms) {
    MExpansion e{};
    for (const auto &[k, w] : terms) {
        e[k] += w;
    }
    return e;
}

MExpansion scaled(MExpansion e, Complex s) {
    for (auto &c : e) {
        c *= s;
    }
    return e;
}

std::string format_expansion(const MExpansion &e) {
    std::string out;
    for (int k = 0; k < 9; ++k) {
        if (std::abs(e[k]) < 1e-12) {
            continue;
        }
        out += fmt::format("{}({:.6g}{:+.6g}i)M{}", out.empty() ? "" : " + ", e[k].real(), e[k].imag(), k);
    }
    return out.empty() ? "0" : out;
}

AlgebraTable build_commutator_table() {
    const Complex i = kI;
    const Complex r3i = kSqrt3 * kI;
    // a = i(sqrt3 M8 + M7), b = i(sqrt3 M8 - M7)
    const MExpansion a = expansion({{8, r3i}, {7, i}});
    const MExpansion b = expansion({{8, r3i}, {7, -i}});
    const MExpansion zero{};
    auto t = [](int k, Complex w) { return expansion({{k, w}}); };

    AlgebraTable table{TableKind::commutator, {}};
    table.entries = {{
        {zero, t(3, -i), t(2, i), t(6, -i), scaled(a, -1.0), t(4, i), t(5, i), t(5, r3i)},
        {t(3, i), zero, t(1, -i), t(5, i), t(4, -i), b, t(6, i), t(6, -r3i)},
        {t(2, -i), t(1, i), zero, t(7, 2.0 * i), t(6, i), t(5, -i), t(4, -2.0 * i), zero},
        {t(6, i), t(5, -i), t(7, -2.0 * i), zero, t(2, i), t(1, -i), t(3, 2.0 * i), zero},
        {a, t(4, i), t(6, -i), t(2, -i), zero, t(3, i), t(1, i), t(1, -r3i)},
        {t(4, -i), scaled(b, -1.0), t(5, i), t(1, i), t(3, -i), zero, t(2, -i), t(2, r3i)},
        {t(5, -i), t(6, -i), t(4, 2.0 * i), t(3, -2.0 * i), t(1, -i), t(2, i), zero, zero},
        {t(5, -r3i), t(6, r3i), zero, zero, t(1, r3i), t(2, -r3i), zero, zero},
    }};
    return table;
}

AlgebraTable build_anticommutator_table() {
    const double m0w = 2.0 * std::sqrt(2.0 / 3.0);
    const double third = -1.0 / kSqrt3;
    const double two_thirds = 2.0 / kSqrt3;
    const MExpansion big_a = expansion({{0, m0w}, {7, 1.0}, {8, third}});
    const MExpansion big_b = expansion({{0, m0w}, {7, -1.0}, {8, third}});
    const MExpansion big_c = expansion({{0, m0w}, {8, two_thirds}});
    const MExpansion big_d = expansion({{0, m0w}, {8, -two_thirds}});
    const MExpansion zero{};
    auto t = [](int k, Complex w) { return expansion({{k, w}}); };

    AlgebraTable table{TableKind::anticommutator, {}};
    table.entries = {{
        {big_a, t(4, 1), t(6, 1), t(2, 1), zero, t(3, 1), t(1, 1), t(1, third)},
        {t(4, 1), big_b, t(5, 1), t(1, 1), t(3, 1), zero, t(2, -1), t(2, third)},
        {t(6, 1), t(5, 1), big_c, zero, t(2, 1), t(1, 1), zero, t(3, two_thirds)},
        {t(2, 1), t(1, 1), zero, big_c, t(6, -1), t(5, -1), zero, t(4, two_thirds)},
        {zero, t(3, 1), t(2, 1), t(6, -1), big_a, t(4, -1), t(5, 1), t(5, third)},
        {t(3, 1), zero, t(1, 1), t(5, -1), t(4, -1), big_b, t(6, -1), t(6, third)},
        {t(1, 1), t(2, -1), zero, zero, t(5, 1), t(6, -1), big_c, t(7, two_thirds)},
        {t(1, third), t(2, third), t(3, two_thirds), t(4, two_thirds), t(5, third), t(6, third),
         t(7, two_thirds), big_d},
    }};
    return table;
}

double expansion_residual(const MExpansion &a, const MExpansion &b) {
    double worst = 0;
    for (int k = 0; k < 9; ++k) {
        worst = std::max(worst, std::abs(a[k] - b[k]));
    }
    return worst;
}

}  // namespace

MIndex::MIndex(int k) : k_(k) {
    if (k < 0 || k > 8) {
        throw std::out_of_range(fmt::format("M index {} outside 0..8", k));
    }
}

const std::array<Matrix, 9> &m_matrices() {
    static const std::array<Matrix, 9> ms = [] {
        const Complex i = kI;
        const double s = 1.0 / kSqrt2;
        return std::array<Matrix, 9>{
            Matrix::identity(3) * std::sqrt(2.0 / 3.0),
            Matrix{{0, -1, 0}, {-1, 0, -1}, {0, -1, 0}} * s,
            Matrix{{0, -1, 0}, {1, 0, -1}, {0, 1, 0}} * (i * s),
            Matrix::diagonal({1.0, 0.0, -1.0}),
            Matrix{{0, 0, i}, {0, 0, 0}, {-i, 0, 0}},
            Matrix{{0, -1, 0}, {1, 0, 1}, {0, -1, 0}} * (i * s),
            Matrix{{0, -1, 0}, {-1, 0, 1}, {0, 1, 0}} * s,
            Matrix{{0, 0, 1}, {0, 0, 0}, {1, 0, 0}},
            Matrix::diagonal({1.0, -2.0, 1.0}) / kSqrt3,
        };
    }();
    return ms;
}

Matrix m_matrix(MIndex k) { return m_matrices()[k.value()]; }

Matrix angular_momentum(Axis axis) {
    const double s = 1.0 / kSqrt2;
    switch (axis) {
        case Axis::x:
            return Matrix{{0, 1, 0}, {1, 0, 1}, {0, 1, 0}} * s;
        case Axis::y:
            return Matrix{{0, 1, 0}, {-1, 0, 1}, {0, -1, 0}} * (-kI * s);
        case Axis::z:
            return Matrix::diagonal({1.0, 0.0, -1.0});
        case Axis::plus:
            return Matrix{{0, kSqrt2, 0}, {0, 0, kSqrt2}, {0, 0, 0}};
        case Axis::minus:
            return Matrix{{0, 0, 0}, {kSqrt2, 0, 0}, {0, kSqrt2, 0}};
    }
    throw std::invalid_argument("angular_momentum: unknown axis");
}

MExpansion expand_in_m_basis(const Matrix &x) {
    if (x.dim() != 3) {
        throw DimensionError(fmt::format("expand_in_m_basis: expected 3x3, got {}x{}", x.dim(), x.dim()));
    }
    MExpansion c{};
    for (int k = 0; k < 9; ++k) {
        c[k] = trace(x * m_matrices()[k]) / 2.0;
    }
    return c;
}

Matrix from_m_expansion(const MExpansion &c) {
    Matrix x(3);
    for (int k = 0; k < 9; ++k) {
        x += m_matrices()[k] * c[k];
    }
    return x;
}

const AlgebraTable &commutator_table() {
    static const AlgebraTable table = build_commutator_table();
    return table;
}

const AlgebraTable &anticommutator_table() {
    static const AlgebraTable table = build_anticommutator_table();
    return table;
}

const std::vector<TableErratum> &table_errata() {
    static const std::vector<TableErratum> errata = {
        {TableKind::commutator, 5, 7, expansion({{1, -kI}})},
        {TableKind::commutator, 7, 5, expansion({{1, kI}})},
    };
    return errata;
}

bool AlgebraReport::consistent() const {
    return triplet_failures.empty() &&
           std::all_of(mismatches.begin(), mismatches.end(), [](const AlgebraMismatch &m) { return m.known_erratum; });
}

int AlgebraReport::errata_confirmed() const {
    return static_cast<int>(
        std::count_if(mismatches.begin(), mismatches.end(), [](const AlgebraMismatch &m) { return m.known_erratum; }));
}

AlgebraReport verify_algebra_tables(double tol) {
    AlgebraReport report;
    const auto &ms = m_matrices();
    for (const AlgebraTable *table : {&commutator_table(), &anticommutator_table()}) {
        for (int k = 1; k <= 8; ++k) {
            for (int kp = 1; kp <= 8; ++kp) {
                Matrix product = table->kind == TableKind::commutator ? commutator(ms[k], ms[kp])
                                                                      : anticommutator(ms[k], ms[kp]);
                MExpansion computed = expand_in_m_basis(product);
                const MExpansion &expected = table->at(k, kp);
                // Residual on the matrix itself, so an incomplete expansion cannot hide.
                double residual = std::max(expansion_residual(computed, expected),
                                           max_abs_diff(product, from_m_expansion(expected)));
                report.max_residual = std::max(report.max_residual, residual);
                ++report.entries_checked;
                const TableErratum *erratum = nullptr;
                for (const TableErratum &e : table_errata()) {
                    if (e.kind == table->kind && e.k == k && e.kp == kp) {
                        erratum = &e;
                    }
                }
                double corrected = erratum == nullptr
                                       ? residual
                                       : std::max(expansion_residual(computed, erratum->corrected),
                                                  max_abs_diff(product, from_m_expansion(erratum->corrected)));
                report.corrected_max_residual = std::max(report.corrected_max_residual, corrected);
                if (residual > tol) {
                    bool known = erratum != nullptr && corrected <= tol;
                    report.mismatches.push_back({table->kind, k, kp, expected, computed, residual, known});
                }
            }
        }
    }

    for (int k : {3, 4, 7}) {
        report.vanishing_residual = std::max(report.vanishing_residual, max_abs(commutator(ms[k], ms[8])));
    }

    struct Triplet {
        int a, b, c;
        double scale;
    };
    const Triplet triplets[] = {{1, 2, 3, 1}, {1, 4, 6, 1}, {4, 2, 5, 1}, {5, 3, 6, 1}, {4, 3, 7, 2}};
    for (const Triplet &t : triplets) {
        // [M_a, M_b] = -i s M_c and cyclic.
        const int cyc[3][3] = {{t.a, t.b, t.c}, {t.b, t.c, t.a}, {t.c, t.a, t.b}};
        double worst = 0;
        for (const auto &c : cyc) {
            worst = std::max(worst, max_abs_diff(commutator(ms[c[0]], ms[c[1]]), ms[c[2]] * (-kI * t.scale)));
        }
        report.triplet_residual = std::max(report.triplet_residual, worst);
        ++report.triplets_checked;
        if (worst > tol) {
            report.triplet_failures.push_back(fmt::format("[M{}, M{}, M{}] residual {:.3g}", t.a, t.b, t.c, worst));
        }
    }
    if (report.vanishing_residual > tol) {
        report.triplet_failures.push_back(
            fmt::format("commutators with M8 do not vanish (residual {:.3g})", report.vanishing_residual));
    }
    return report;
}

std::string describe(const AlgebraMismatch &m) {
    return fmt::format("{}[M{}, M{}]: printed {}, computed {} (residual {:.3g}){}",
                       m.kind == TableKind::commutator ? "" : "anti", m.k, m.kp, format_expansion(m.expected),
                       format_expansion(m.computed), m.residual, m.known_erratum ? " [known erratum]" : "");
}

const std::array<Matrix, 9> &gellmann_matrices() {
    static const std::array<Matrix, 9> lambdas = [] {
        const Complex i = kI;
        return std::array<Matrix, 9>{
            Matrix::zero(3),
            Matrix{{0, 1, 0}, {1, 0, 0}, {0, 0, 0}},
            Matrix{{0, -i, 0}, {i, 0, 0}, {0, 0, 0}},
            Matrix::diagonal({1.0, -1.0, 0.0}),
            Matrix{{0, 0, 1}, {0, 0, 0}, {1, 0, 0}},
            Matrix{{0, 0, -i}, {0, 0, 0}, {i, 0, 0}},
            Matrix{{0, 0, 0}, {0, 0, 1}, {0, 1, 0}},
            Matrix{{0, 0, 0}, {0, 0, -i}, {0, i, 0}},
            Matrix::diagonal({1.0, 1.0, -2.0}) / kSqrt3,
        };
    }();
    return lambdas;
}

const std::vector<GellMannRelation> &gellmann_map() {
    static const std::vector<GellMannRelation> relations = [] {
        const double s = 1.0 / kSqrt2;
        auto w = [](std::initializer_list<Term> terms) {
            std::array<Complex, 9> out{};
            for (const auto &[l, c] : terms) {
                out[l] = c;
            }
            return out;
        };
        return std::vector<GellMannRelation>{
            {1, w({{1, -s}, {6, -s}})},
            {2, w({{2, s}, {7, s}})},
            {3, w({{3, 0.5}, {8, kSqrt3 / 2}})},
            {4, w({{5, -1.0}})},
            {5, w({{2, s}, {7, -s}})},
            {6, w({{6, s}, {1, -s}})},
            {7, w({{4, 1.0}})},
            {8, w({{3, kSqrt3 / 2}, {8, -0.5}})},
        };
    }();
    return relations;
}

GellMannReport verify_gellmann(double tol) {
    GellMannReport report;
    const auto &lambdas = gellmann_matrices();
    for (const GellMannRelation &rel : gellmann_map()) {
        Matrix rhs(3);
        for (int l = 1; l <= 8; ++l) {
            rhs += lambdas[l] * rel.weights[l];
        }
        double residual = max_abs_diff(m_matrices()[rel.k], rhs);
        report.max_residual = std::max(report.max_residual, residual);
        ++report.relations_checked;
        if (residual > tol) {
            report.failed.push_back(rel.k);
        }
    }
    return report;
}

HCoefficients decompose_hamiltonian(const Matrix &h) {
    if (h.dim() != 3) {
        throw DimensionError(fmt::format("decompose_hamiltonian: expected 3x3, got {}x{}", h.dim(), h.dim()));
    }
    require_hermitian(h, 1e-12, "decompose_hamiltonian");
    HCoefficients c;
    for (int k = 0; k < 9; ++k) {
        c.h[k] = trace(h * m_matrices()[k]).real();
    }
    return c;
}

Matrix build_hamiltonian(const HCoefficients &c) {
    Matrix h(3);
    for (int k = 0; k < 9; ++k) {
        h += m_matrices()[k] * (0.5 * c.h[k]);
    }
    return h;
}

const Matrix &qubit_to_angular_transform() {
    static const Matrix u = [] {
        const double s = 1.0 / kSqrt2;
        return Matrix{{1, 0, 0, 0}, {0, s, s, 0}, {0, 0, 0, 1}, {0, s, -s, 0}};
    }();
    return u;
}

Matrix to_qubit_basis(const Matrix &op3, Complex singlet_value) {
    if (op3.dim() != 3) {
        throw DimensionError(fmt::format("to_qubit_basis: expected 3x3, got {}x{}", op3.dim(), op3.dim()));
    }
    Matrix block(4);
    for (std::size_t r = 0; r < 3; ++r) {
        for (std::size_t c = 0; c < 3; ++c) {
            block(r, c) = op3(r, c);
        }
    }
    block(3, 3) = singlet_value;
    const Matrix &u = qubit_to_angular_transform();
    return u.adjoint() * block * u;
}

SymmetricBlock from_qubit_basis(const Matrix &op4) {
    if (op4.dim() != 4) {
        throw DimensionError(fmt::format("from_qubit_basis: expected 4x4, got {}x{}", op4.dim(), op4.dim()));
    }
    const Matrix &u = qubit_to_angular_transform();
    Matrix block = u * op4 * u.adjoint();
    for (std::size_t k = 0; k < 3; ++k) {
        if (std::abs(block(k, 3)) > 1e-12 || std::abs(block(3, k)) > 1e-12) {
            throw std::invalid_argument("from_qubit_basis: operator couples the triplet and singlet sectors");
        }
    }
    Matrix op3(3);
    for (std::size_t r = 0; r < 3; ++r) {
        for (std::size_t c = 0; c < 3; ++c) {
            op3(r, c) = block(r, c);
        }
    }
    return {op3, block(3, 3)};
}

}  // namespace symgate
