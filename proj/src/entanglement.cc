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


#include "symgate/entanglement.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include <fmt/format.h>

#include "symgate/su3_basis.h"

namespace symgate {

namespace {

const double kSqrt2 = std::numbers::sqrt2;
const double kSqrt3 = std::numbers::sqrt3;
constexpr double kPi = std::numbers::pi;

void require_four(std::span<const Complex> v, const char *what) {
    if (v.size() != 4) {
        throw DimensionError(fmt::format("{} needs 4 amplitudes, got {}", what, v.size()));
    }
}

double wrap(double x, double period) {
    double r = std::fmod(x, period);
    return r < 0 ? r + period : r;
}

Vector spinor_product(Complex p, Complex q, Complex r, Complex s) {
    // (p|u> + q|d>) (x) (r|u> + s|d>)
    return {p * r, p * s, q * r, q * s};
}

void require_normalized(Complex x, Complex y, const char *names) {
    double n = std::norm(x) + std::norm(y);
    if (std::abs(n - 1) > 1e-12) {
        throw std::invalid_argument(fmt::format("|{}|^2 sums to {:.15g}, expected 1", names, n));
    }
}

int gate_index(GateLabel label) {
    if (label == GateLabel::bl || label == GateLabel::custom) {
        return 0;
    }
    return static_cast<int>(label) + 1;
}

}  // namespace

const Matrix &bell_transform() {
    static const Matrix u = Matrix{{1, 0, 1, 0},
                                   {0, -kSqrt2 * kI, 0, 0},
                                   {0, 0, 0, kSqrt2},
                                   {-kI, 0, kI, 0}} /
                            kSqrt2;
    return u;
}

const std::array<Vector, 4> &bell_states() {
    // (|dd> + |uu>)/r2, i(|du> + |ud>)/r2, (|du> - |ud>)/r2, i(|dd> - |uu>)/r2
    static const std::array<Vector, 4> states = [] {
        const Matrix &q = qubit_to_angular_transform();
        std::array<Vector, 4> qubit = {
            Vector{1 / kSqrt2, 0, 0, 1 / kSqrt2},
            Vector{0, kI / kSqrt2, kI / kSqrt2, 0},
            Vector{0, -1 / kSqrt2, 1 / kSqrt2, 0},
            Vector{-kI / kSqrt2, 0, 0, kI / kSqrt2},
        };
        std::array<Vector, 4> out;
        for (std::size_t i = 0; i < 4; ++i) {
            out[i] = q * qubit[i];
        }
        return out;
    }();
    return states;
}

double bell_transform_residual() {
    const Matrix &u = bell_transform();
    double worst = 0;
    for (std::size_t r = 0; r < 4; ++r) {
        Vector row(4);
        for (std::size_t c = 0; c < 4; ++c) {
            row[c] = std::conj(u(r, c));
        }
        Vector flipped(row);
        for (Complex &x : flipped) {
            x = -x;
        }
        worst = std::max(worst, std::min(max_abs_diff(row, bell_states()[r]),
                                         max_abs_diff(flipped, bell_states()[r])));
    }
    return worst;
}

Complex makhlin_g1(const Matrix &u4) {
    if (u4.dim() != 4) {
        throw DimensionError(fmt::format("G1 needs a 4x4 gate, got {}x{}", u4.dim(), u4.dim()));
    }
    double residual = unitarity_residual(u4);
    if (residual > 1e-10) {
        throw std::invalid_argument(fmt::format("gate is not unitary (residual {:.3g})", residual));
    }
    const Matrix &q = qubit_to_angular_transform();
    const Matrix &u = bell_transform();
    Matrix bb = u * q * u4 * q.adjoint() * u.adjoint();
    Matrix m = bb.transpose() * bb;
    Complex tr = m.trace();
    return tr * tr / (16.0 * u4.det());
}

std::string class_name(EntanglerClass c) {
    switch (c) {
        case EntanglerClass::local:
            return "local (non-entangling)";
        case EntanglerClass::entangling:
            return "entangling, not a perfect entangler";
        case EntanglerClass::perfect:
            return "perfect entangler";
        case EntanglerClass::special_perfect:
            return "special perfect entangler";
    }
    return "unknown";
}

double entangling_power_from_g1(double g1_abs) { return kMaxEntanglingPower * (1 - g1_abs); }

EntanglerClass classify(double ep) {
    if (ep >= kMaxEntanglingPower - kClassifyTol) {
        return EntanglerClass::special_perfect;
    }
    if (ep >= kPerfectThreshold - kClassifyTol) {
        return EntanglerClass::perfect;
    }
    if (ep <= kClassifyTol) {
        return EntanglerClass::local;
    }
    return EntanglerClass::entangling;
}

EntanglementReport entangling_power(const Matrix &u4) {
    Complex g1 = makhlin_g1(u4);
    // Rounding can push |G1| a hair above 1 for local gates.
    double g1_abs = std::min(std::abs(g1), 1.0);
    double ep = entangling_power_from_g1(g1_abs);
    return {g1, g1_abs, ep, classify(ep), GateLabel::custom, 0.0};
}

EntanglementReport entangling_power(const SymmetricGate &g) {
    EntanglementReport r = entangling_power(g.u4);
    r.label = g.label;
    r.theta = g.theta;
    return r;
}

ConcurrenceResult concurrence_checked(std::span<const Complex> psi) {
    require_four(psi, "concurrence");
    double n = norm(psi);
    if (n == 0) {
        throw std::invalid_argument("concurrence of the zero vector is undefined");
    }
    bool renormalized = std::abs(n - 1) > 1e-10;
    double scale = renormalized ? 1 / (n * n) : 1.0;
    return {2 * std::abs(psi[0] * psi[3] - psi[1] * psi[2]) * scale, renormalized};
}

double concurrence(std::span<const Complex> psi) { return concurrence_checked(psi).value; }

SeparableSymmetricState separable_state(double alpha, double phi) {
    alpha = wrap(alpha, 2 * kPi);
    if (alpha > kPi) {
        // The single-qubit spinor at 2pi - alpha equals minus the one at alpha, phi + pi.
        alpha = 2 * kPi - alpha;
        phi += kPi;
    }
    phi = wrap(phi, 2 * kPi);
    double c = std::cos(alpha / 2);
    double s = std::sin(alpha / 2);
    Complex e = std::exp(kI * phi);
    Vector vec3{c * c, kSqrt2 * s * c * e, s * s * e * e};
    Vector vec4 = spinor_product(c, s * e, c, s * e);
    return {alpha, phi, std::move(vec3), std::move(vec4)};
}

GateAction apply_gate(const SymmetricGate &g, const SeparableSymmetricState &s) {
    Vector out4 = g.u4 * s.vec4;
    Vector ang = qubit_to_angular_transform() * out4;
    Vector out3(ang.begin(), ang.begin() + 3);
    double c = concurrence(out4);
    return {std::move(out4), std::move(out3), c};
}

ProductBasis product_basis(Complex a, Complex b, Complex c, Complex d, Complex e, Complex f) {
    require_normalized(a, b, "a|^2 + |b");
    require_normalized(c, d, "c|^2 + |d");
    require_normalized(e, f, "e|^2 + |f");
    ProductBasis basis;
    basis.params = {a, b, c, d, e, f};
    basis.vectors = {
        spinor_product(a, b, c, d),
        spinor_product(-std::conj(b), std::conj(a), c, d),
        spinor_product(e, f, -std::conj(d), std::conj(c)),
        spinor_product(-std::conj(f), std::conj(e), -std::conj(d), std::conj(c)),
    };
    return basis;
}

SpeConditionResult spe_condition(const SymmetricGate &g, const ProductBasis &basis) {
    int k = gate_index(g.label);
    if (k < 4 || k > 8) {
        throw std::invalid_argument(
            fmt::format("{} is not one of the special perfect entangler families B4..B8", gate_name(g.label)));
    }
    EntanglementReport report = entangling_power(g);
    if (report.classification != EntanglerClass::special_perfect) {
        throw std::invalid_argument(fmt::format("{} at theta = {:.15g} has e_p = {:.15g}, not 2/9",
                                                gate_name(g.label), g.theta, report.ep));
    }
    const auto &[a, b, c, d, e, f] = basis.params;
    constexpr double tol = 1e-9;
    SpeConditionResult r{};
    if (k == 5 || k == 6) {
        r.family = SpeFamily::b5_b6;
        Complex cd = c * c + d * d;
        r.condition = std::abs(std::abs((a * a + b * b) * cd) - 1) < tol &&
                      std::abs(std::abs((e * e + f * f) * cd) - 1) < tol;
        if (k == 5) {
            Complex cdm = c * c - d * d;
            r.sign_variant = std::abs(std::abs((a * a - b * b) * cdm) - 1) < tol &&
                             std::abs(std::abs((e * e - f * f) * cdm) - 1) < tol;
        }
    } else {
        r.family = SpeFamily::b4_b7_b8;
        r.condition = std::abs(std::abs(a * b * c * d) - 0.25) < tol && std::abs(std::abs(c * d * e * f) - 0.25) < tol;
    }
    r.all_maximal = true;
    for (std::size_t i = 0; i < 4; ++i) {
        r.concurrences[i] = concurrence(g.u4 * basis.vectors[i]);
        r.all_maximal = r.all_maximal && std::abs(r.concurrences[i] - 1) <= 1e-10;
    }
    r.agree = r.condition == r.all_maximal;
    return r;
}

double spe_theta(int k) {
    if (k >= 4 && k <= 7) {
        return kPi / 2;
    }
    if (k == 8) {
        return kSqrt3 * kPi / 2;
    }
    throw std::out_of_range(fmt::format("B{} has no special perfect entangler point", k));
}

double locate_spe_theta(int k, double tol) {
    double lo;
    double hi;
    if (k >= 4 && k <= 7) {
        lo = kPi / 4;
        hi = 3 * kPi / 4;
    } else if (k == 8) {
        lo = 2.4;
        hi = 3.0;
    } else {
        throw std::out_of_range(fmt::format("B{} has no special perfect entangler point", k));
    }
    auto f = [k](double th) { return std::abs(makhlin_g1(gate(k, th).u4)); };
    const double inv_phi = (std::sqrt(5.0) - 1) / 2;
    double x1 = hi - inv_phi * (hi - lo);
    double x2 = lo + inv_phi * (hi - lo);
    double f1 = f(x1);
    double f2 = f(x2);
    while (hi - lo > tol) {
        if (f1 < f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = f(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = f(x2);
        }
    }
    return (lo + hi) / 2;
}

Matrix printed_spe_matrix(int k) {
    switch (k) {
        case 4:
            return Matrix{{0, 0, 0, -1}, {0, 1, 0, 0}, {0, 0, 1, 0}, {1, 0, 0, 0}};
        case 5:
            return Matrix{{1, 1, 1, -1}, {-1, 1, -1, -1}, {-1, -1, 1, -1}, {-1, 1, 1, 1}} * 0.5;
        case 6:
            return Matrix{{1, -kI, -kI, 1}, {-kI, 1, -1, kI}, {-kI, -1, 1, kI}, {1, kI, kI, 1}} * 0.5;
        case 7:
            return Matrix{{0, 0, 0, kI}, {0, 1, 0, 0}, {0, 0, 1, 0}, {kI, 0, 0, 0}};
        case 8:
            return Matrix{{kI, 0, 0, 0}, {0, 0, -1, 0}, {0, -1, 0, 0}, {0, 0, 0, kI}};
        default:
            throw std::out_of_range(fmt::format("no printed two-qubit form for B{}", k));
    }
}

std::vector<LmgPoint> lmg_entanglement_profile(double g1, double g2, std::span<const double> t_grid) {
    for (std::size_t i = 0; i < t_grid.size(); ++i) {
        if (!std::isfinite(t_grid[i])) {
            throw std::invalid_argument(fmt::format("time grid entry {} is not finite", i));
        }
        if (i > 0 && !(t_grid[i] > t_grid[i - 1])) {
            throw std::invalid_argument(fmt::format("time grid is not ascending at entry {}", i));
        }
    }
    const Vector up_up{1.0, 0.0, 0.0, 0.0};
    std::vector<LmgPoint> out;
    out.reserve(t_grid.size());
    for (double t : t_grid) {
        SymmetricGate b = lmg_gate(LMGParams(g1, g2, t));
        out.push_back({t, entangling_power(b).ep, concurrence(b.u4 * up_up)});
    }
    return out;
}

}  // namespace symgate
