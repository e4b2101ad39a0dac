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


#ifndef SYMGATE_COMMANDS_H
#define SYMGATE_COMMANDS_H

#include <filesystem>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>

#include "symgate/linalg.h"

namespace symgate {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;

class UsageError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// 15 significant digits; magnitudes below 5e-15 print as 0.
std::string format_real(double x);
/// a+bi, each part as format_real.
std::string format_complex(Complex z);
std::string format_matrix(const Matrix &m, const std::string &indent = "  ");
std::string format_vector(const Vector &v);

struct BasisOptions {
    bool verify = false;
    /// "M3" or "3"
    std::optional<std::string> show;
    /// Spin for the spherical tensor basis, e.g. "3/2".
    std::optional<std::string> j;
    bool count = false;
};

struct GateOptions {
    int k = 0;
    double theta = 0;
};

struct SweepOptions {
    int k = 0;
    double theta_min = 0;
    double theta_max = 0;
    int steps = 0;
    /// Standard output when empty.
    std::optional<std::filesystem::path> out;
};

struct ActOptions {
    int k = 0;
    double theta = 0;
    double alpha = 0;
    double phi = 0;
};

struct LmgOptions {
    double g1 = 0;
    double g2 = 0;
    /// Single-time report.
    std::optional<double> t;
    /// Time series on [0, t_max].
    std::optional<double> t_max;
    int steps = 101;
    std::optional<std::filesystem::path> out;
};

struct DecomposeOptions {
    std::filesystem::path file;
};

// Each command writes its report to out and diagnostics to err and returns
// an exit code. Bad arguments give kExitUsage, failed checks kExitFailed.
int cmd_basis(const BasisOptions &opt, std::ostream &out, std::ostream &err);
int cmd_gate(const GateOptions &opt, std::ostream &out, std::ostream &err);
int cmd_sweep(const SweepOptions &opt, std::ostream &out, std::ostream &err);
int cmd_act(const ActOptions &opt, std::ostream &out, std::ostream &err);
int cmd_lmg(const LmgOptions &opt, std::ostream &out, std::ostream &err);
int cmd_decompose(const DecomposeOptions &opt, std::ostream &out, std::ostream &err);

/// CSV for cmd_sweep: header theta,g1_abs,ep,class.
std::string sweep_csv(int k, double theta_min, double theta_max, int steps);
/// CSV for the LMG series: header t,ep,concurrence.
std::string lmg_csv(double g1, double g2, double t_max, int steps);

}  // namespace symgate

#endif  // SYMGATE_COMMANDS_H
