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

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "symgate/gates.h"
#include "symgate/matrix_file.h"
#include "symgate/su3_basis.h"
#include "test_util.h"

using namespace symgate;
using symgate::testing::kPi;

namespace {

struct CmdResult {
    int code;
    std::string out;
    std::string err;
};

template <class Opt>
CmdResult run(int (*cmd)(const Opt &, std::ostream &, std::ostream &), const Opt &opt) {
    std::ostringstream out;
    std::ostringstream err;
    int code = cmd(opt, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::vector<std::string>> parse_csv(const std::string &text) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::vector<std::string> cells;
        std::istringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) {
            cells.push_back(cell);
        }
        rows.push_back(cells);
    }
    return rows;
}

std::filesystem::path temp_file(const std::string &name) { return std::filesystem::temp_directory_path() / name; }

TEST(format, reals_and_complex) {
    EXPECT_EQ(format_real(0.0), "0");
    EXPECT_EQ(format_real(-0.0), "0");
    EXPECT_EQ(format_real(3e-15), "0");
    EXPECT_EQ(format_real(1.0 / 3), "0.333333333333333");
    EXPECT_EQ(format_real(-2.5e-7), "-2.5e-07");
    EXPECT_EQ(format_complex(Complex(1, -2)), "1-2i");
    EXPECT_EQ(format_complex(Complex(-0.5, 1e-16)), "-0.5+0i");
    EXPECT_EQ(format_complex(Complex(0, 1.0 / std::sqrt(2.0))), "0+0.707106781186547i");
    EXPECT_EQ(format_vector(Vector{1.0, kI}), "(1+0i, 0+1i)");
    EXPECT_EQ(format_matrix(Matrix{{1.0, -1.0}, {kI, 0.0}}), "  [  1+0i -1+0i ]\n  [  0+1i  0+0i ]\n");
}

TEST(cmd_basis, verify) {
    BasisOptions opt;
    opt.verify = true;
    CmdResult r = run(cmd_basis, opt);
    EXPECT_EQ(r.code, kExitOk) << r.err;
    EXPECT_NE(r.out.find("128/128 table entries verified (2 against corrected entries), 8/8 Gell-Mann relations verified"),
              std::string::npos)
        << r.out;
    EXPECT_NE(r.out.find("126/128 entries match the printed tables"), std::string::npos);
    EXPECT_NE(r.out.find("[M5, M7]"), std::string::npos);
    EXPECT_TRUE(r.err.empty()) << r.err;
}

TEST(cmd_basis, show_count_and_listing) {
    BasisOptions show;
    show.show = "M3";
    EXPECT_EQ(run(cmd_basis, show).out, "M3 =\n  [  1+0i  0+0i  0+0i ]\n  [  0+0i  0+0i  0+0i ]\n  [  0+0i  0+0i -1+0i ]\n");
    BasisOptions count;
    count.j = "3/2";
    count.count = true;
    EXPECT_EQ(run(cmd_basis, count).out, "16\n");
    count.j = "5/2";
    EXPECT_EQ(run(cmd_basis, count).out, "36\n");
    BasisOptions listing;
    listing.j = "1/2";
    CmdResult r = run(cmd_basis, listing);
    EXPECT_EQ(r.code, kExitOk);
    EXPECT_NE(r.out.find("(T0)^0_0 ="), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("(T+)^1_1 ="), std::string::npos) << r.out;
    CmdResult all = run(cmd_basis, BasisOptions{});
    EXPECT_NE(all.out.find("M8 ="), std::string::npos);
}

TEST(cmd_basis, bad_arguments) {
    BasisOptions bad_show;
    bad_show.show = "M9";
    EXPECT_EQ(run(cmd_basis, bad_show).code, kExitUsage);
    BasisOptions bad_spin;
    bad_spin.j = "7/2";
    CmdResult r = run(cmd_basis, bad_spin);
    EXPECT_EQ(r.code, kExitUsage);
    EXPECT_NE(r.err.find("bad spin"), std::string::npos);
}

TEST(cmd_gate, reports) {
    CmdResult spe = run(cmd_gate, GateOptions{4, 1.5707963});
    EXPECT_EQ(spe.code, kExitOk);
    EXPECT_NE(spe.out.find("e_p = 0.222222222222222\nclass: special perfect entangler\n"), std::string::npos) << spe.out;
    CmdResult local = run(cmd_gate, GateOptions{3, 0.7});
    EXPECT_NE(local.out.find("e_p = 0\nclass: local (non-entangling)\n"), std::string::npos) << local.out;
    CmdResult edge = run(cmd_gate, GateOptions{4, 0.7853982});
    EXPECT_NE(edge.out.find("e_p = 0.16666667"), std::string::npos) << edge.out;
    EXPECT_NE(edge.out.find("boundary"), std::string::npos);
    EXPECT_EQ(run(cmd_gate, GateOptions{0, 1.0}).code, kExitUsage);
    EXPECT_EQ(run(cmd_gate, GateOptions{9, 1.0}).code, kExitUsage);
    EXPECT_EQ(run(cmd_gate, GateOptions{4, NAN}).code, kExitUsage);
}

TEST(sweep_csv, b4_matches_cos4_law) {
    auto rows = parse_csv(sweep_csv(4, 0, kPi / 2, 5));
    ASSERT_EQ(rows.size(), 6u);
    EXPECT_EQ(rows[0], (std::vector<std::string>{"theta", "g1_abs", "ep", "class"}));
    for (std::size_t i = 1; i < rows.size(); ++i) {
        double th = std::stod(rows[i][0]);
        EXPECT_NEAR(th, kPi / 2 * (i - 1) / 4, 1e-14);
        EXPECT_NEAR(std::stod(rows[i][2]), 2.0 / 9 * (1 - std::pow(std::cos(th), 4)), 1e-13);
    }
    EXPECT_EQ(rows[3][3], "perfect");
    EXPECT_EQ(rows[5][3], "special_perfect");
}

TEST(sweep_csv, b3_is_local_and_b8_ends_at_maximum) {
    for (const auto &row : parse_csv(sweep_csv(3, 0, 2 * kPi, 17))) {
        if (row[0] != "theta") {
            EXPECT_EQ(row[2], "0");
            EXPECT_EQ(row[3], "local");
        }
    }
    auto rows = parse_csv(sweep_csv(8, 0, std::sqrt(3.0) * kPi / 2, 9));
    EXPECT_EQ(rows.back()[2], "0.222222222222222");
}

TEST(sweep_csv, deterministic_and_validated) {
    EXPECT_EQ(sweep_csv(6, -1, 2, 33), sweep_csv(6, -1, 2, 33));
    EXPECT_THROW(sweep_csv(4, 0, 1, 1), UsageError);
    EXPECT_THROW(sweep_csv(0, 0, 1, 5), UsageError);
    EXPECT_THROW(sweep_csv(4, 0, INFINITY, 5), UsageError);
}

TEST(cmd_sweep, writes_file) {
    std::filesystem::path p = temp_file("symgate_sweep_test.csv");
    SweepOptions opt{5, 0, 1, 4, p};
    CmdResult r = run(cmd_sweep, opt);
    EXPECT_EQ(r.code, kExitOk) << r.err;
    EXPECT_TRUE(r.out.empty());
    std::ifstream in(p, std::ios::binary);
    std::stringstream buf;
    buf << in.rdbuf();
    EXPECT_EQ(buf.str(), sweep_csv(5, 0, 1, 4));
    EXPECT_EQ(buf.str().find('\r'), std::string::npos);
    std::filesystem::remove(p);
    opt.out = "/nonexistent-dir/out.csv";
    EXPECT_EQ(run(cmd_sweep, opt).code, kExitFailed);
}

TEST(cmd_act, examples) {
    CmdResult b4 = run(cmd_act, ActOptions{4, kPi / 2, kPi / 2, 0});
    EXPECT_EQ(b4.code, kExitOk);
    EXPECT_NE(b4.out.find("concurrence = 1\n"), std::string::npos) << b4.out;
    CmdResult b1 = run(cmd_act, ActOptions{1, 1.0, 0.3, 0.4});
    EXPECT_NE(b1.out.find("concurrence = 0\n"), std::string::npos) << b1.out;
    CmdResult b5 = run(cmd_act, ActOptions{5, kPi / 2, 0, 0});
    EXPECT_NE(b5.out.find("output (|1 1>, |1 0>, |1 -1>):   (0.5+0i, -0.707106781186547+0i, -0.5+0i)"),
              std::string::npos)
        << b5.out;
}

TEST(lmg_csv, zeros_at_quarter_periods) {
    auto rows = parse_csv(lmg_csv(1.0, 0.3, kPi, 9));
    ASSERT_EQ(rows.size(), 10u);
    EXPECT_EQ(rows[0], (std::vector<std::string>{"t", "ep", "concurrence"}));
    for (std::size_t i = 1; i < rows.size(); ++i) {
        double t = std::stod(rows[i][0]);
        double c = std::stod(rows[i][2]);
        if ((i - 1) % 2 == 0) {
            EXPECT_LT(c, 1e-12) << "t=" << t;  // multiples of pi/4
        } else {
            EXPECT_NEAR(c, 1.0, 1e-12) << "t=" << t;  // odd multiples of pi/8
        }
    }
    EXPECT_EQ(rows[1][1], "0");
    EXPECT_EQ(rows[1][2], "0");
}

TEST(cmd_lmg, single_time) {
    LmgOptions opt;
    opt.g1 = 1;
    opt.g2 = 3;  // 2 g2 t = pi/2 + 2 g1 t at t = pi/8
    opt.t = kPi / 8;
    CmdResult r = run(cmd_lmg, opt);
    EXPECT_EQ(r.code, kExitOk) << r.err;
    EXPECT_NE(r.out.find("e_p = 0.222222222222222\n"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("concurrence of B_L|uu> = 1\n"), std::string::npos) << r.out;
    opt.t = 0.0;
    CmdResult zero = run(cmd_lmg, opt);
    EXPECT_NE(zero.out.find("concurrence of B_L|uu> = 0\n"), std::string::npos) << zero.out;
    EXPECT_NE(zero.out.find("e_p = 0\n"), std::string::npos) << zero.out;
}

TEST(cmd_lmg, argument_errors) {
    LmgOptions neither;
    EXPECT_EQ(run(cmd_lmg, neither).code, kExitUsage);
    LmgOptions both;
    both.t = 1;
    both.t_max = 2;
    EXPECT_EQ(run(cmd_lmg, both).code, kExitUsage);
    LmgOptions series;
    series.t_max = -1;
    EXPECT_EQ(run(cmd_lmg, series).code, kExitUsage);
}

TEST(cmd_decompose, m7_and_lmg) {
    std::filesystem::path p = temp_file("symgate_decompose_test.json");
    write_matrix_file(p, m_matrix(MIndex(7)));
    CmdResult r = run(cmd_decompose, DecomposeOptions{p});
    EXPECT_EQ(r.code, kExitOk) << r.err;
    EXPECT_NE(r.out.find("h6 = 0\nh7 = 2\nh8 = 0\n"), std::string::npos) << r.out;

    write_matrix_file(p, lmg_hamiltonian(1, 1));
    CmdResult lmg = run(cmd_decompose, DecomposeOptions{p});
    // H_L = 2 M7 + (2/sqrt3)(sqrt8 M0 - M8) and Tr(M_k M_k) = 2.
    double h0 = 2 / std::sqrt(3.0) * std::sqrt(8.0) * 2;
    double h8 = -2 / std::sqrt(3.0) * 2;
    EXPECT_NE(lmg.out.find("h0 = " + format_real(h0) + "\n"), std::string::npos) << lmg.out;
    EXPECT_NE(lmg.out.find("h7 = 4\n"), std::string::npos) << lmg.out;
    EXPECT_NE(lmg.out.find("h8 = " + format_real(h8) + "\n"), std::string::npos) << lmg.out;
    std::filesystem::remove(p);
}

TEST(cmd_decompose, other_dimensions_use_tensor_parameters) {
    std::filesystem::path p = temp_file("symgate_decompose_test2.json");
    write_matrix_file(p, Matrix{{1.0, 0.0}, {0.0, -1.0}});
    CmdResult r = run(cmd_decompose, DecomposeOptions{p});
    EXPECT_EQ(r.code, kExitOk) << r.err;
    EXPECT_NE(r.out.find("h^0_0 = 0+0i\n"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("reconstruction residual"), std::string::npos);
    std::filesystem::remove(p);
}

TEST(cmd_decompose, errors) {
    std::filesystem::path p = temp_file("symgate_decompose_test3.json");
    Matrix bad = m_matrix(MIndex(7));
    bad(0, 1) = 1.0;
    write_matrix_file(p, bad);
    CmdResult r = run(cmd_decompose, DecomposeOptions{p});
    EXPECT_EQ(r.code, kExitFailed);
    EXPECT_NE(r.err.find("not Hermitian"), std::string::npos) << r.err;
    {
        std::ofstream out(p);
        out << "{\"dim\": 3, \"entries\": 7}";
    }
    EXPECT_EQ(run(cmd_decompose, DecomposeOptions{p}).code, kExitUsage);
    std::filesystem::remove(p);
    EXPECT_EQ(run(cmd_decompose, DecomposeOptions{p}).code, kExitUsage);
}

}  // namespace
