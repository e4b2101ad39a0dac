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

#include "symgate/spin_tensors.h"

#include <array>
#include <charconv>
#include <cmath>
#include <cstdlib>

#include <fmt/format.h>

namespace symgate {

namespace {

// n! for n <= 20 as doubles; the Racah sum here never needs more than 11!.
double factorial(int n) {
    static const std::array<double, 21> table = [] {
        std::array<double, 21> t{};
        t[0] = 1;
        for (int i = 1; i < 21; ++i) {
            t[i] = t[i - 1] * i;
        }
        return t;
    }();
    if (n < 0 || n > 20) {
        throw std::out_of_range(fmt::format("factorial({}) out of table range", n));
    }
    return table[n];
}

void check_pair(int two_j, int two_m, const char *name) {
    if (two_j < 0) {
        throw std::invalid_argument(fmt::format("clebsch_gordan: {} has negative j", name));
    }
    if (std::abs(two_m) > two_j) {
        throw std::invalid_argument(
            fmt::format("clebsch_gordan: |m| > j for {} (j = {}/2, m = {}/2)", name, two_j, two_m));
    }
    if ((two_j - two_m) % 2 != 0) {
        throw std::invalid_argument(
            fmt::format("clebsch_gordan: j and m of {} differ by a half-integer", name));
    }
}

void check_rank(SpinLabel j, int k, int q) {
    if (k < 0 || k > j.max_rank() || std::abs(q) > k) {
        throw std::out_of_range(
            fmt::format("tau: (k, q) = ({}, {}) out of range for j = {}/2", k, q, j.two_j()));
    }
}

Matrix spherical_tau(SpinLabel j, int k, int q) {
    const int n = static_cast<int>(j.dim());
    Matrix t(j.dim());
    double norm2 = 0;
    // Row r <-> m' = j - r, column c <-> m = j - c (doubled: two_j - 2r).
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) {
            double cg = clebsch_gordan(j.two_j(), j.two_j() - 2 * c, 2 * k, 2 * q, j.two_j(),
                                       j.two_j() - 2 * r);
            t(r, c) = cg;
            norm2 += cg * cg;
        }
    }
    // Sign reference: <j, -j+k| tau^k_k |j, -j>, i.e. row n-1-k, column n-1.
    double ref = clebsch_gordan(j.two_j(), -j.two_j(), 2 * k, 2 * k, j.two_j(), -j.two_j() + 2 * k);
    double sign = ((ref < 0) == (k % 2 == 1)) ? 1.0 : -1.0;
    return t * (sign * std::sqrt(static_cast<double>(n) / norm2));
}

double wigner_small_d_element(int k, int qp, int q, double beta) {
    const double c = std::cos(beta / 2);
    const double s = std::sin(beta / 2);
    const double pre =
        std::sqrt(factorial(k + qp) * factorial(k - qp) * factorial(k + q) * factorial(k - q));
    double sum = 0;
    for (int t = std::max(0, q - qp); t <= std::min(k + q, k - qp); ++t) {
        double denom = factorial(k + q - t) * factorial(t) * factorial(qp - q + t) * factorial(k - qp - t);
        double sign = ((qp - q + t) % 2 == 0) ? 1.0 : -1.0;
        sum += sign / denom * std::pow(c, 2 * k + q - qp - 2 * t) * std::pow(s, qp - q + 2 * t);
    }
    return pre * sum;
}

void check_wigner_rank(int k) {
    if (k < 0) {
        throw std::invalid_argument(fmt::format("wigner_d: negative rank {}", k));
    }
    if (k > 2) {
        throw UnsupportedRankError(fmt::format("wigner_d: rank {} unsupported (max 2)", k));
    }
}

}  // namespace

SpinLabel::SpinLabel(int two_j) : two_j_(two_j) {
    if (two_j < 0 || two_j > kMaxTwoJ) {
        throw std::out_of_range(fmt::format("spin j = {}/2 outside 0..5/2", two_j));
    }
}

SpinLabel parse_spin(const std::string &text) {
    auto parse_int = [&](std::string_view s) {
        int v = 0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc() || ptr != s.data() + s.size()) {
            throw std::invalid_argument(fmt::format("cannot parse spin '{}'", text));
        }
        return v;
    };
    std::string_view sv = text;
    if (auto slash = sv.find('/'); slash != std::string_view::npos) {
        int num = parse_int(sv.substr(0, slash));
        int den = parse_int(sv.substr(slash + 1));
        if (den == 1) {
            return SpinLabel(2 * num);
        }
        if (den != 2) {
            throw std::invalid_argument(fmt::format("spin '{}' is not a multiple of 1/2", text));
        }
        return SpinLabel(num);
    }
    if (sv.find('.') != std::string_view::npos) {
        char *end = nullptr;
        double v = std::strtod(text.c_str(), &end);
        double twice = 2 * v;
        if (end != text.c_str() + text.size() || std::abs(twice - std::round(twice)) > 1e-12) {
            throw std::invalid_argument(fmt::format("spin '{}' is not a multiple of 1/2", text));
        }
        return SpinLabel(static_cast<int>(std::lround(twice)));
    }
    return SpinLabel(2 * parse_int(sv));
}

double clebsch_gordan(int two_j1, int two_m1, int two_j2, int two_m2, int two_J, int two_M) {
    check_pair(two_j1, two_m1, "j1");
    check_pair(two_j2, two_m2, "j2");
    check_pair(two_J, two_M, "J");
    if (two_m1 + two_m2 != two_M) {
        return 0.0;
    }
    if (two_J < std::abs(two_j1 - two_j2) || two_J > two_j1 + two_j2 || (two_j1 + two_j2 - two_J) % 2 != 0) {
        return 0.0;
    }
    // Racah closed form; every combination below is an integer by the checks above.
    const int a = (two_J + two_j1 - two_j2) / 2;
    const int b = (two_J - two_j1 + two_j2) / 2;
    const int c = (two_j1 + two_j2 - two_J) / 2;
    const int d = (two_j1 + two_j2 + two_J) / 2 + 1;
    const double pre = std::sqrt((two_J + 1) * factorial(a) * factorial(b) * factorial(c) / factorial(d)) *
                       std::sqrt(factorial((two_J + two_M) / 2) * factorial((two_J - two_M) / 2) *
                                 factorial((two_j1 - two_m1) / 2) * factorial((two_j1 + two_m1) / 2) *
                                 factorial((two_j2 - two_m2) / 2) * factorial((two_j2 + two_m2) / 2));
    const int j1_minus_m1 = (two_j1 - two_m1) / 2;
    const int j2_plus_m2 = (two_j2 + two_m2) / 2;
    const int e = (two_J - two_j2 + two_m1) / 2;
    const int f = (two_J - two_j1 - two_m2) / 2;
    double sum = 0;
    for (int k = std::max({0, -e, -f}); k <= std::min({c, j1_minus_m1, j2_plus_m2}); ++k) {
        double term = 1.0 / (factorial(k) * factorial(c - k) * factorial(j1_minus_m1 - k) *
                             factorial(j2_plus_m2 - k) * factorial(e + k) * factorial(f + k));
        sum += (k % 2 == 0) ? term : -term;
    }
    return pre * sum;
}

SpinMatrices spin_matrices(SpinLabel j) {
    const std::size_t n = j.dim();
    SpinMatrices s{Matrix(n), Matrix(n), Matrix(n), Matrix(n), Matrix(n)};
    for (std::size_t r = 0; r < n; ++r) {
        const double m = j.j() - static_cast<double>(r);
        s.jz(r, r) = m;
        if (r + 1 < n) {
            // J_+ |j, m-1> = sqrt(j(j+1) - (m-1)m) |j, m>
            s.jplus(r, r + 1) = std::sqrt(j.j() * (j.j() + 1) - (m - 1) * m);
        }
    }
    s.jminus = s.jplus.adjoint();
    s.jx = (s.jplus + s.jminus) * 0.5;
    s.jy = (s.jplus - s.jminus) * (-0.5 * kI);
    return s;
}

TensorOperator tau(SpinLabel j, int k, int q) {
    check_rank(j, k, q);
    return TensorOperator{j, k, q, TensorComponent::spherical, spherical_tau(j, k, q)};
}

std::vector<TensorOperator> hermitian_basis(SpinLabel j) {
    const double n = static_cast<double>(j.dim());
    const double off_norm = 1.0 / std::sqrt(2 * n);
    std::vector<TensorOperator> basis;
    basis.reserve(j.dim() * j.dim());
    for (int k = 0; k <= j.max_rank(); ++k) {
        basis.push_back({j, k, 0, TensorComponent::zero, spherical_tau(j, k, 0) / std::sqrt(n)});
        for (int q = 1; q <= k; ++q) {
            Matrix t = spherical_tau(j, k, q);
            Matrix td = t.adjoint();
            basis.push_back({j, k, q, TensorComponent::plus, (t + td) * off_norm});
            basis.push_back({j, k, q, TensorComponent::minus, (t - td) * (kI * off_norm)});
        }
    }
    return basis;
}

TensorParams::TensorParams(SpinLabel j) : j_(j), coeffs_(j.dim() * j.dim()) {}

std::size_t TensorParams::index(int k, int q) const {
    if (k < 0 || k > j_.max_rank() || std::abs(q) > k) {
        throw std::out_of_range(fmt::format("TensorParams: (k, q) = ({}, {}) out of range", k, q));
    }
    return static_cast<std::size_t>(k * k + q + k);
}

Complex &TensorParams::at(int k, int q) { return coeffs_[index(k, q)]; }
Complex TensorParams::at(int k, int q) const { return coeffs_[index(k, q)]; }

double TensorParams::rank_weight(int k) const {
    double w = 0;
    for (int q = -k; q <= k; ++q) {
        w += std::norm(at(k, q));
    }
    return w;
}

double TensorParams::hermiticity_residual() const {
    double worst = 0;
    for (int k = 0; k <= j_.max_rank(); ++k) {
        for (int q = -k; q <= k; ++q) {
            double sign = (q % 2 == 0) ? 1.0 : -1.0;
            worst = std::max(worst, std::abs(std::conj(at(k, q)) - sign * at(k, -q)));
        }
    }
    return worst;
}

TensorParams decompose(const Matrix &h, SpinLabel j) {
    if (h.dim() != j.dim()) {
        throw DimensionError(fmt::format("decompose: {}x{} matrix for j = {}/2", h.dim(), h.dim(), j.two_j()));
    }
    require_hermitian(h, 1e-12, "decompose");
    TensorParams p(j);
    for (int k = 0; k <= j.max_rank(); ++k) {
        for (int q = -k; q <= k; ++q) {
            p.at(k, q) = trace(h * spherical_tau(j, k, q));
        }
    }
    return p;
}

Matrix reconstruct(const TensorParams &p) {
    const SpinLabel j = p.spin();
    Matrix h(j.dim());
    for (int k = 0; k <= j.max_rank(); ++k) {
        for (int q = -k; q <= k; ++q) {
            h += spherical_tau(j, k, q).adjoint() * p.at(k, q);
        }
    }
    return h / static_cast<double>(j.dim());
}

Matrix wigner_d(int k, double beta) {
    check_wigner_rank(k);
    Matrix d(static_cast<std::size_t>(2 * k + 1));
    for (int r = 0; r <= 2 * k; ++r) {
        for (int c = 0; c <= 2 * k; ++c) {
            d(r, c) = wigner_small_d_element(k, k - r, k - c, beta);
        }
    }
    return d;
}

Matrix wigner_D(int k, double alpha, double beta, double gamma) {
    Matrix d = wigner_d(k, beta);
    for (int r = 0; r <= 2 * k; ++r) {
        for (int c = 0; c <= 2 * k; ++c) {
            d(r, c) *= std::exp(-kI * (static_cast<double>(k - r) * alpha + static_cast<double>(k - c) * gamma));
        }
    }
    return d;
}

TensorParams rotate_params(const TensorParams &p, double alpha, double beta, double gamma) {
    if (p.spin().max_rank() > 2) {
        throw UnsupportedRankError(fmt::format(
            "rotate_params: j = {}/2 carries ranks up to {}, only ranks <= 2 are supported",
            p.spin().two_j(), p.spin().max_rank()));
    }
    TensorParams out(p.spin());
    for (int k = 0; k <= p.spin().max_rank(); ++k) {
        Matrix big_d = wigner_D(k, alpha, beta, gamma);
        for (int q = -k; q <= k; ++q) {
            Complex acc = 0;
            for (int qp = -k; qp <= k; ++qp) {
                acc += big_d(k - qp, k - q) * p.at(k, qp);
            }
            out.at(k, q) = acc;
        }
    }
    return out;
}

}  // namespace symgate
