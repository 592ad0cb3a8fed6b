#pragma once

// Data-parallel sums over sets of permutations. Each kernel has a serial
// reference and an OpenMP version; both must return identical Elements, since
// the merge is exact coefficient addition and therefore order independent.

#include <span>

#include "dqsym/fqsym.hpp"

namespace dqsym {

enum class Execution { kSerial, kParallel };

/// Sum of psi_sigma(s) over s in perms.
Element sum_psi_sigma_serial(std::span<const Permutation> perms);
Element sum_psi_sigma_parallel(std::span<const Permutation> perms);
Element sum_psi_sigma(std::span<const Permutation> perms, Execution exec);

/// Sum over (tau, sigma) of G_{tau, sigma} for the product of two permutation
/// sets, all coefficients 1.
Element sum_biword_grid_serial(std::span<const Permutation> bottoms, std::span<const Permutation> tops);
Element sum_biword_grid_parallel(std::span<const Permutation> bottoms, std::span<const Permutation> tops);

/// Threads OpenMP will use for the parallel kernels (1 without OpenMP).
int max_threads();
void set_num_threads(int n);

}  // namespace dqsym
