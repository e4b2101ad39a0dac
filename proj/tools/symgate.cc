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


#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "symgate/angle.h"
#include "symgate/commands.h"

namespace {

using symgate::parse_angle;

double angle_or(const std::optional<std::string> &text, double fallback) {
    return text ? parse_angle(*text) : fallback;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Symmetric two-qubit gates in the spin-1 operator basis"};
    app.require_subcommand(1);

    symgate::BasisOptions basis;
    std::optional<std::string> show;
    std::optional<std::string> spin;
    auto *basis_cmd = app.add_subcommand("basis", "Print the M basis or a spherical tensor basis, or verify the algebra");
    basis_cmd->add_flag("--verify", basis.verify, "Check the commutator/anticommutator tables and Gell-Mann relations");
    basis_cmd->add_option("--show", show, "Print one basis matrix, e.g. M3");
    basis_cmd->add_option("--j", spin, "Spin of the spherical tensor basis to print, e.g. 3/2");
    basis_cmd->add_flag("--count", basis.count, "Print only the number of basis operators");

    int k = 0;
    std::string theta = "0";
    auto *gate_cmd = app.add_subcommand("gate", "Matrices and entangling power of B_k(theta)");
    gate_cmd->add_option("k", k, "Gate index 1..8")->required();
    gate_cmd->add_option("--theta", theta, "Angle, e.g. 1.2, pi/2, sqrt3*pi/2")->required();

    std::string theta_min = "0";
    std::string theta_max;
    int steps = 0;
    std::optional<std::string> out_path;
    auto *sweep_cmd = app.add_subcommand("sweep", "CSV of |G1| and e_p over a theta grid");
    sweep_cmd->add_option("k", k, "Gate index 1..8")->required();
    sweep_cmd->add_option("--theta-min", theta_min, "First angle (default 0)");
    sweep_cmd->add_option("--theta-max", theta_max, "Last angle")->required();
    sweep_cmd->add_option("--steps", steps, "Number of grid points, at least 2")->required();
    sweep_cmd->add_option("--out", out_path, "Output file (default stdout)");

    std::string alpha = "0";
    std::optional<std::string> phi;
    auto *act_cmd = app.add_subcommand("act", "Apply B_k(theta) to a symmetric product state");
    act_cmd->add_option("k", k, "Gate index 1..8")->required();
    act_cmd->add_option("--theta", theta, "Gate angle")->required();
    act_cmd->add_option("--alpha", alpha, "Polar angle of each qubit")->required();
    act_cmd->add_option("--phi", phi, "Azimuth of each qubit (default 0)");

    std::string g1 = "0";
    std::string g2 = "0";
    std::optional<std::string> t;
    std::optional<std::string> t_max;
    int lmg_steps = 101;
    auto *lmg_cmd = app.add_subcommand("lmg", "LMG gate at one time, or a CSV time series");
    lmg_cmd->add_option("--g1", g1, "Coupling G1")->required();
    lmg_cmd->add_option("--g2", g2, "Coupling G2")->required();
    lmg_cmd->add_option("--t", t, "Single time");
    lmg_cmd->add_option("--t-max", t_max, "End of the time series starting at 0");
    lmg_cmd->add_option("--steps", lmg_steps, "Points in the time series (default 101)");
    lmg_cmd->add_option("--out", out_path, "CSV output file (default stdout)");

    std::string matrix_path;
    auto *decompose_cmd = app.add_subcommand("decompose", "Expand a Hermitian matrix from a JSON file");
    decompose_cmd->add_option("file", matrix_path, "Matrix file {\"dim\": n, \"entries\": [[[re, im], ...], ...]}")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return symgate::kExitUsage;
    }

    try {
        if (basis_cmd->parsed()) {
            basis.show = show;
            basis.j = spin;
            return symgate::cmd_basis(basis, std::cout, std::cerr);
        }
        if (gate_cmd->parsed()) {
            return symgate::cmd_gate({k, parse_angle(theta)}, std::cout, std::cerr);
        }
        if (sweep_cmd->parsed()) {
            symgate::SweepOptions opt{k, parse_angle(theta_min), parse_angle(theta_max), steps, std::nullopt};
            if (out_path) {
                opt.out = *out_path;
            }
            return symgate::cmd_sweep(opt, std::cout, std::cerr);
        }
        if (act_cmd->parsed()) {
            return symgate::cmd_act({k, parse_angle(theta), parse_angle(alpha), angle_or(phi, 0.0)}, std::cout,
                                    std::cerr);
        }
        if (lmg_cmd->parsed()) {
            symgate::LmgOptions opt;
            opt.g1 = parse_angle(g1);
            opt.g2 = parse_angle(g2);
            if (t) {
                opt.t = parse_angle(*t);
            }
            if (t_max) {
                opt.t_max = parse_angle(*t_max);
            }
            opt.steps = lmg_steps;
            if (out_path) {
                opt.out = *out_path;
            }
            return symgate::cmd_lmg(opt, std::cout, std::cerr);
        }
        if (decompose_cmd->parsed()) {
            return symgate::cmd_decompose({matrix_path}, std::cout, std::cerr);
        }
    } catch (const symgate::AngleParseError &e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return symgate::kExitUsage;
    }
    return symgate::kExitUsage;
}
