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


#include "symgate/commands.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <vector>

#include <fmt/format.h>

#include "symgate/entanglement.h"
#include "symgate/gates.h"
#include "symgate/matrix_file.h"
#include "symgate/spin_tensors.h"
#include "symgate/su3_basis.h"

namespace symgate {

namespace {

constexpr double kChop = 5e-15;
constexpr double kCheckTol = 1e-12;

template <class F>
int guarded(std::ostream &err, F &&body) {
    try {
        return body();
    } catch (const UsageError &e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const MatrixFileError &e) {
        err << "input error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return kExitFailed;
    }
}

void require_gate_index(int k) {
    if (k < 1 || k > 8) {
        throw UsageError(fmt::format("gate index must be in 1..8, got {}", k));
    }
}

void require_finite(double x, const char *name) {
    if (!std::isfinite(x)) {
        throw UsageError(fmt::format("{} must be finite", name));
    }
}

std::string short_class(EntanglerClass c) {
    switch (c) {
        case EntanglerClass::local:
            return "local";
        case EntanglerClass::entangling:
            return "entangling";
        case EntanglerClass::perfect:
            return "perfect";
        case EntanglerClass::special_perfect:
            return "special_perfect";
    }
    return "unknown";
}

void write_output(const std::optional<std::filesystem::path> &path, const std::string &text, std::ostream &out) {
    if (!path) {
        out << text;
        return;
    }
    std::ofstream file(*path, std::ios::binary);
    if (!file) {
        throw std::runtime_error(fmt::format("cannot write '{}'", path->string()));
    }
    file << text;
    file.close();
    if (!file) {
        throw std::runtime_error(fmt::format("write to '{}' failed", path->string()));
    }
}

std::vector<double> linear_grid(double lo, double hi, int steps) {
    std::vector<double> grid(static_cast<std::size_t>(steps));
    for (int i = 0; i < steps; ++i) {
        grid[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / (steps - 1);
    }
    grid.back() = hi;
    return grid;
}

void print_report(const EntanglementReport &r, std::ostream &out) {
    out << "G1 = " << format_complex(r.g1) << "\n";
    out << "|G1| = " << format_real(r.g1_abs) << "\n";
    out << "e_p = " << format_real(r.ep) << "\n";
    out << "class: " << class_name(r.classification) << "\n";
    if (std::abs(r.ep - kPerfectThreshold) <= 1e-6) {
        out << "note: on the perfect-entangler boundary e_p = 1/6\n";
    }
}

std::string tensor_name(const TensorOperator &t) {
    const char *tag = "";
    switch (t.component) {
        case TensorComponent::zero:
            tag = "0";
            break;
        case TensorComponent::plus:
            tag = "+";
            break;
        case TensorComponent::minus:
            tag = "-";
            break;
        case TensorComponent::spherical:
            tag = "";
            break;
    }
    return fmt::format("(T{})^{}_{}", tag, t.k, t.q);
}

int basis_verify(std::ostream &out, std::ostream &err) {
    AlgebraReport tables = verify_algebra_tables();
    GellMannReport gm = verify_gellmann();
    int matching = tables.entries_checked - static_cast<int>(tables.mismatches.size());
    out << fmt::format("commutator and anticommutator tables: {}/{} entries match the printed tables\n", matching,
                       tables.entries_checked);
    for (const AlgebraMismatch &m : tables.mismatches) {
        (m.known_erratum ? out : err) << (m.known_erratum ? "note: " : "mismatch: ") << describe(m) << "\n";
    }
    out << fmt::format("max residual with errata corrected: {:.3g}\n", tables.corrected_max_residual);
    out << fmt::format("vanishing commutators [M3, M8], [M4, M8], [M7, M8]: max entry {:.3g}\n",
                       tables.vanishing_residual);
    out << fmt::format("triplets: {}/{} verified (max residual {:.3g})\n",
                       tables.triplets_checked - static_cast<int>(std::min<std::size_t>(
                                                     tables.triplet_failures.size(), tables.triplets_checked)),
                       tables.triplets_checked, tables.triplet_residual);
    for (const std::string &f : tables.triplet_failures) {
        err << "triplet failure: " << f << "\n";
    }
    int gm_ok = gm.relations_checked - static_cast<int>(gm.failed.size());
    out << fmt::format("Gell-Mann relations: {}/{} verified (max residual {:.3g})\n", gm_ok, gm.relations_checked,
                       gm.max_residual);
    for (int k : gm.failed) {
        err << fmt::format("Gell-Mann failure: M{}\n", k);
    }

    bool ok = tables.consistent() && gm.passed();
    int corrected = tables.errata_confirmed();
    int verified = matching + corrected;
    std::string note = corrected > 0 ? fmt::format(" ({} against corrected entries)", corrected) : "";
    std::string summary = fmt::format("{}/{} table entries verified{}, {}/{} Gell-Mann relations verified", verified,
                                      tables.entries_checked, note, gm_ok, gm.relations_checked);
    if (ok) {
        out << summary << "\n";
        return kExitOk;
    }
    err << "FAILED: " << summary << "\n";
    return kExitFailed;
}

int parse_m_index(const std::string &text) {
    std::string digits = text;
    if (!digits.empty() && (digits[0] == 'M' || digits[0] == 'm')) {
        digits.erase(0, 1);
    }
    if (digits.size() != 1 || digits[0] < '0' || digits[0] > '8') {
        throw UsageError(fmt::format("expected M0..M8, got '{}'", text));
    }
    return digits[0] - '0';
}

SpinLabel spin_option(const std::string &text) {
    try {
        return parse_spin(text);
    } catch (const std::exception &e) {
        throw UsageError(fmt::format("bad spin '{}': {}", text, e.what()));
    }
}

}  // namespace

std::string format_real(double x) {
    if (std::abs(x) < kChop) {
        return "0";
    }
    return fmt::format("{:.15g}", x);
}

std::string format_complex(Complex z) {
    double im = std::abs(z.imag()) < kChop ? 0.0 : z.imag();
    return fmt::format("{}{}{}i", format_real(z.real()), im < 0 ? "-" : "+", format_real(std::abs(im)));
}

std::string format_matrix(const Matrix &m, const std::string &indent) {
    std::vector<std::string> cells(m.dim() * m.dim());
    std::size_t width = 0;
    for (std::size_t r = 0; r < m.dim(); ++r) {
        for (std::size_t c = 0; c < m.dim(); ++c) {
            cells[r * m.dim() + c] = format_complex(m(r, c));
            width = std::max(width, cells[r * m.dim() + c].size());
        }
    }
    std::string s;
    for (std::size_t r = 0; r < m.dim(); ++r) {
        s += indent + "[";
        for (std::size_t c = 0; c < m.dim(); ++c) {
            s += fmt::format(" {:>{}}", cells[r * m.dim() + c], width);
        }
        s += " ]\n";
    }
    return s;
}

std::string format_vector(const Vector &v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        s += (i ? ", " : "") + format_complex(v[i]);
    }
    return s + ")";
}

int cmd_basis(const BasisOptions &opt, std::ostream &out, std::ostream &err) {
    return guarded(err, [&] {
        int code = kExitOk;
        bool any = false;
        if (opt.verify) {
            any = true;
            code = basis_verify(out, err);
        }
        if (opt.show) {
            any = true;
            int k = parse_m_index(*opt.show);
            out << "M" << k << " =\n" << format_matrix(m_matrix(MIndex(k)));
        }
        if (opt.j) {
            any = true;
            SpinLabel j = spin_option(*opt.j);
            std::vector<TensorOperator> basis = hermitian_basis(j);
            if (opt.count) {
                out << basis.size() << "\n";
            } else {
                for (const TensorOperator &t : basis) {
                    out << tensor_name(t) << " =\n" << format_matrix(t.matrix);
                }
            }
        } else if (opt.count) {
            any = true;
            out << m_matrices().size() << "\n";
        }
        if (!any) {
            for (int k = 0; k <= 8; ++k) {
                out << "M" << k << " =\n" << format_matrix(m_matrix(MIndex(k)));
            }
        }
        return code;
    });
}

int cmd_gate(const GateOptions &opt, std::ostream &out, std::ostream &err) {
    return guarded(err, [&] {
        require_gate_index(opt.k);
        require_finite(opt.theta, "theta");
        SymmetricGate g = gate(opt.k, opt.theta);
        double check = max_abs_diff(g.u3, expm_hermitian(m_matrix(MIndex(opt.k)), opt.theta));
        out << gate_name(g.label) << "(theta = " << format_real(opt.theta) << ")\n";
        out << "u3 (basis |1 1>, |1 0>, |1 -1>):\n" << format_matrix(g.u3);
        out << "u4 (basis |uu>, |ud>, |du>, |dd>):\n" << format_matrix(g.u4);
        print_report(entangling_power(g), out);
        out << fmt::format("closed form vs exponential: residual {:.3g}\n", check);
        if (check > kCheckTol) {
            err << "closed form disagrees with the exponential\n";
            return kExitFailed;
        }
        return kExitOk;
    });
}

std::string sweep_csv(int k, double theta_min, double theta_max, int steps) {
    require_gate_index(k);
    require_finite(theta_min, "theta-min");
    require_finite(theta_max, "theta-max");
    if (steps < 2) {
        throw UsageError(fmt::format("steps must be at least 2, got {}", steps));
    }
    std::string csv = "theta,g1_abs,ep,class\n";
    for (double th : linear_grid(theta_min, theta_max, steps)) {
        EntanglementReport r = entangling_power(gate(k, th));
        csv += fmt::format("{},{},{},{}\n", format_real(th), format_real(r.g1_abs), format_real(r.ep),
                           short_class(r.classification));
    }
    return csv;
}

int cmd_sweep(const SweepOptions &opt, std::ostream &out, std::ostream &err) {
    return guarded(err, [&] {
        write_output(opt.out, sweep_csv(opt.k, opt.theta_min, opt.theta_max, opt.steps), out);
        return kExitOk;
    });
}

int cmd_act(const ActOptions &opt, std::ostream &out, std::ostream &err) {
    return guarded(err, [&] {
        require_gate_index(opt.k);
        require_finite(opt.theta, "theta");
        require_finite(opt.alpha, "alpha");
        require_finite(opt.phi, "phi");
        SymmetricGate g = gate(opt.k, opt.theta);
        SeparableSymmetricState s = separable_state(opt.alpha, opt.phi);
        GateAction a = apply_gate(g, s);
        out << gate_name(g.label) << "(theta = " << format_real(opt.theta) << ") on the product state alpha = "
            << format_real(s.alpha) << ", phi = " << format_real(s.phi) << "\n";
        out << "input  (|1 1>, |1 0>, |1 -1>):   " << format_vector(s.vec3) << "\n";
        out << "input  (|uu>, |ud>, |du>, |dd>): " << format_vector(s.vec4) << "\n";
        out << "output (|1 1>, |1 0>, |1 -1>):   " << format_vector(a.out3) << "\n";
        out << "output (|uu>, |ud>, |du>, |dd>): " << format_vector(a.out4) << "\n";
        out << "concurrence = " << format_real(a.concurrence) << "\n";
        return kExitOk;
    });
}

std::string lmg_csv(double g1, double g2, double t_max, int steps) {
    require_finite(g1, "g1");
    require_finite(g2, "g2");
    require_finite(t_max, "t-max");
    if (!(t_max > 0)) {
        throw UsageError("t-max must be positive");
    }
    if (steps < 2) {
        throw UsageError(fmt::format("steps must be at least 2, got {}", steps));
    }
    std::vector<double> grid = linear_grid(0.0, t_max, steps);
    std::string csv = "t,ep,concurrence\n";
    for (const LmgPoint &p : lmg_entanglement_profile(g1, g2, grid)) {
        csv += fmt::format("{},{},{}\n", format_real(p.t), format_real(p.ep), format_real(p.concurrence));
    }
    return csv;
}

int cmd_lmg(const LmgOptions &opt, std::ostream &out, std::ostream &err) {
    return guarded(err, [&] {
        if (opt.t.has_value() == opt.t_max.has_value()) {
            throw UsageError("give exactly one of --t or --t-max");
        }
        if (opt.t_max) {
            write_output(opt.out, lmg_csv(opt.g1, opt.g2, *opt.t_max, opt.steps), out);
            return kExitOk;
        }
        require_finite(opt.g1, "g1");
        require_finite(opt.g2, "g2");
        require_finite(*opt.t, "t");
        LMGParams p(opt.g1, opt.g2, *opt.t);
        SymmetricGate b = lmg_gate(p);
        double check = max_abs_diff(b.u3, lmg_closed_form(p));
        const Vector up_up{1.0, 0.0, 0.0, 0.0};
        out << "LMG g1 = " << format_real(p.g1()) << ", g2 = " << format_real(p.g2()) << ", t = " << format_real(p.t())
            << " (xi = " << format_real(p.xi()) << ", beta = " << format_real(p.beta()) << ")\n";
        out << "B_L (basis |1 1>, |1 0>, |1 -1>):\n" << format_matrix(b.u3);
        print_report(entangling_power(b), out);
        out << "concurrence of B_L|uu> = " << format_real(concurrence(b.u4 * up_up)) << "\n";
        out << fmt::format("exponential vs closed form: residual {:.3g}\n", check);
        if (check > kCheckTol) {
            err << "B_L disagrees with its closed form\n";
            return kExitFailed;
        }
        return kExitOk;
    });
}

int cmd_decompose(const DecomposeOptions &opt, std::ostream &out, std::ostream &err) {
    return guarded(err, [&] {
        Matrix h = read_matrix_file(opt.file);
        if (h.dim() == 3) {
            HCoefficients c = decompose_hamiltonian(h);
            for (int k = 0; k <= 8; ++k) {
                out << "h" << k << " = " << format_real(c.h[static_cast<std::size_t>(k)]) << "\n";
            }
            out << fmt::format("reconstruction residual: {:.3g}\n", max_abs_diff(build_hamiltonian(c), h));
            return kExitOk;
        }
        SpinLabel j(static_cast<int>(h.dim()) - 1);
        TensorParams p = decompose(h, j);
        for (int k = 0; k <= j.max_rank(); ++k) {
            for (int q = k; q >= -k; --q) {
                out << "h^" << k << "_" << q << " = " << format_complex(p.at(k, q)) << "\n";
            }
        }
        out << fmt::format("reconstruction residual: {:.3g}\n", max_abs_diff(reconstruct(p), h));
        return kExitOk;
    });
}

}  // namespace symgate
