#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "dqsym/render.hpp"

namespace dqsym {

/// Exit statuses of the command line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Grid of the requested kind for weight n, rows and columns in composition order.
/// Mlambda and Mribbon come from the brute-force Sigma_n.
LabeledMatrix build_matrix(MatrixKind kind, int n, Execution exec = Execution::kParallel, int max_n = kDefaultMaxN);

/// Runs the tool on args (without the program name), writing results to out
/// and diagnostics to err. Returns the process exit status.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dqsym
