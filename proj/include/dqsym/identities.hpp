#pragma once

// The q-bracketing elements Psi^u and Psi^sigma, their sums Sigma_n and P_L,
// the colored ribbon (R) and elementary (Lambda) bases, and the closed-form
// predictions for the expansions of Sigma_n and P_L in those bases.
//
// Throughout, color words of Sigma_n and P_L are permutations, and a colored
// basis element is indexed by (I, J): I is the descent composition of the
// bottom (permutation) row, J the saillance composition of the top (color) row.

#include <map>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "dqsym/combinatorics.hpp"
#include "dqsym/fqsym.hpp"
#include "dqsym/kernels.hpp"
#include "dqsym/qpoly.hpp"

namespace dqsym {

/// Default enumeration bound for sums over S_n.
inline constexpr int kDefaultMaxN = 7;

/// Thrown when a sum over S_n is requested above the enumeration bound.
class BoundError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

struct ColoredRibbonKey {
    Composition I;
    Composition J;

    /// Ordered by weight, then by composition_order_index of I, then of J.
    friend std::strong_ordering operator<=>(const ColoredRibbonKey& a, const ColoredRibbonKey& b);
    friend bool operator==(const ColoredRibbonKey&, const ColoredRibbonKey&) = default;
};

enum class Basis { kR, kLambda };

std::string basis_name(Basis b);

struct BasisExpansion {
    Basis basis = Basis::kR;
    int n = 0;
    std::map<ColoredRibbonKey, QPoly> coeffs;

    void add(const ColoredRibbonKey& key, const QPoly& c);
    QPoly coefficient(const Composition& I, const Composition& J) const;

    friend bool operator==(const BasisExpansion&, const BasisExpansion&) = default;
};

/// Grid of coefficients with rows I and columns J, both in composition_order_index order.
struct CoeffMatrix {
    int n = 0;
    Basis basis = Basis::kR;
    std::vector<Composition> order;
    std::vector<std::vector<QPoly>> entries;
};

CoeffMatrix to_matrix(const BasisExpansion& e);

/// Why an element is not in the span of the R_I^(J): two biwords of one class
/// with different coefficients (a coefficient may be zero, i.e. absent).
struct SpanFailure {
    std::string reason;
    Biword first;
    Biword second;
    QPoly first_coeff;
    QPoly second_coeff;
};

using RExpansionResult = std::variant<BasisExpansion, SpanFailure>;

// ---------------------------------------------------------------------------
// Elements

/// Left-nested q-bracketing of the generators x_{u_1},..,x_{u_p}, built as
/// (..(x_{u_1} >_q x_{u_2}) >_q ..) >_q x_{u_p}.
Element psi_u(const Word& u);

/// Product of psi_u over the initially dominated factors of sigma.
Element psi_sigma(const Permutation& sigma);

/// Sum of psi_sigma over S_n.
Element sigma_n(int n, Execution exec = Execution::kParallel, int max_n = kDefaultMaxN);

/// Sum of psi_sigma over the permutations with saillance composition L.
Element p_L(const Composition& L, Execution exec = Execution::kParallel, int max_n = kDefaultMaxN);

/// Sum of G_{tau,sigma} over D(tau) = I, S(sigma) = J.
Element r_IJ(const Composition& I, const Composition& J);
/// Sum of r_IJ(I', J) over I' finer than conjugate(mirror(I)).
Element lambda_IJ(const Composition& I, const Composition& J);
/// Sum of lambda_IJ(I, J) over J in the lattice interval [H, K].
Element lambda_interval(const Composition& I, const Composition& H, const Composition& K);

// ---------------------------------------------------------------------------
// Basis changes

/// Succeeds iff e is homogeneous, its color rows are permutations, and it is
/// constant on every (descent class x saillance class).
RExpansionResult expand_in_R(const Element& e);

BasisExpansion lambda_to_R(const BasisExpansion& lambda);
BasisExpansion r_to_lambda(const BasisExpansion& ribbon);

/// Rebuild the G-basis element from an R or Lambda expansion.
Element to_element(const BasisExpansion& e);

// ---------------------------------------------------------------------------
// Predictions

enum class SignConvention {
    kNMinusLength,           ///< (-1)^(n - l(I)), the one that holds
    kPrintedLengthMinusOne,  ///< (-1)^(l(I) - 1), as printed in the theorem statement
};

/// Coefficient of Lambda_I^(J) in Sigma_n is sign * q^D(I,J).
BasisExpansion theorem1_prediction(int n, SignConvention sign = SignConvention::kNMinusLength);

/// Coefficient of R_I^(J) in Sigma_n.
QPoly c_coefficient(const Composition& I, const Composition& J);
BasisExpansion corollary_prediction(int n);

/// Pairs (I, J) whose Lambda_I^(J) occurs in P_L, in key order.
std::vector<ColoredRibbonKey> theorem2_pairs(const Composition& L);
BasisExpansion theorem2_prediction(const Composition& L);

/// Sum_k (-q)^(n-k) Sum_{J |= n-k} R_{(1^(n-k), k)}^{(J.(k))}.
Element pn_closed_R(int n);

/// Lambda-expansion of P_(n) assembled from the interval form
/// Sum_I (-1)^(n-l(I)) Sum_{k > n - i_1} q^D(I,(n-k,k)) Lambda_I^[(n-k,k),(1^(n-k),k)].
BasisExpansion pn_interval_prediction(int n);

/// First part of I plus last part of J exceeds n.
bool pn_characterization(const Composition& I, const Composition& J);

/// Merge part k+1 of I into the current block when Des(J) misses [d_k, d_{k+1} - 1].
Composition glue_L(const Composition& I, const Composition& J);

// ---------------------------------------------------------------------------
// Recursion on P_L

/// Sum over l-subsets C'' of {1..m+l}: biword_right(a[C'], b[C'']), where a has
/// colors 1..m, b has colors 1..l and C' is the complement of C''.
Element color_shuffle_right(const Element& a, int m, const Element& b, int l);

/// P_L from P_(l_1..l_{p-1}) and P_(l_p) with the product of FQSym over all
/// color splittings with n in C''.
Element recursion_set_splitting(const Composition& L, Execution exec = Execution::kParallel);
/// The same through color_shuffle_right.
Element recursion_biword(const Composition& L, Execution exec = Execution::kParallel);

// ---------------------------------------------------------------------------

struct BsReport {
    bool passed = false;
    /// Biwords where Sigma_n(q=1) and the colorings of the identity differ.
    std::vector<Biword> discrepancies;
};

/// Sigma_n at q = 1 against the sum of all colorings of 12..n.
BsReport bs_check(int n, Execution exec = Execution::kParallel, int max_n = kDefaultMaxN);

}  // namespace dqsym
