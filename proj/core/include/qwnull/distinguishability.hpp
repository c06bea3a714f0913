#pragma once

#include <map>
#include <string>
#include <vector>

#include "qwnull/int_matrix.hpp"
#include "qwnull/subspace.hpp"

namespace qwnull {

// The distinguishability operator for two equal-order graphs is
//   W(t,t') = U_i(t) (x) U_j(t') - U_j(t') (x) U_i(t),
// with U(t) = exp(-i t L). A state is in null(W) for every t,t' > 0 iff it is
// annihilated by every power-pair commutator
//   L_i^p (x) L_j^q - L_j^q (x) L_i^p,
// since expanding both exponentials makes W a double power series whose
// coefficients are exactly these operators, and analyticity in (t,t') forces
// every coefficient to vanish. Powers at or above the minimal-polynomial
// degree are combinations of lower ones, so p,q <= n-1 suffices.
//
// In the row-major vec convention (psi[i*n + j] = X[i][j]) the diagonal case
// reduces to the commutant: (L (x) I - I (x) L) vec(X) = vec(LX - XL).

struct ConstraintRank {
    int left_power = 0;   // power of L_i
    int right_power = 0;  // power of L_j
    int rank = 0;         // rank of that constraint block on the candidate space
};

struct PairNullResult {
    // Graph indices are assigned by callers that track an enumeration;
    // pair_null itself leaves them at -1.
    int graph_i = -1;
    int graph_j = -1;
    Subspace space = Subspace::zero(0);
    std::vector<ConstraintRank> constraint_ranks;
};

enum class PairNullStrategy {
    // Seed with diag_null(L_i) ^ diag_null(L_j), then apply only the mixed
    // power pairs (p,q >= 1); the pure powers are implied by the seed.
    kSeeded,
    // Apply every power pair (p,q) in [0,n-1]^2 except (0,0), starting from
    // the full space. Slower, used to cross-check the seeded reduction.
    kFullStack,
};

// Kernel of L (x) I - I (x) L, i.e. the vectorized commutant of L.
// Throws std::domain_error when L is not symmetric.
Subspace diag_null(const IntMatrix& laplacian);

// Exact null space common to all t,t' > 0 for the pair (L_i, L_j).
// Throws std::invalid_argument on size mismatch, std::domain_error on
// non-symmetric input. For L_i == L_j the result equals diag_null(L_i).
// The seeded strategy stops once the space reaches the uniform line, which
// every pair null space contains; constraint_ranks then lists only the
// blocks actually applied.
PairNullResult pair_null(const IntMatrix& laplacian_i, const IntMatrix& laplacian_j,
                         PairNullStrategy strategy = PairNullStrategy::kSeeded);

// Seeded variant reusing diagonal null spaces the caller already computed;
// the all-pairs scan avoids redoing two commutant kernels per pair.
PairNullResult pair_null(const IntMatrix& laplacian_i, const IntMatrix& laplacian_j,
                         const Subspace& diag_i, const Subspace& diag_j);

struct RelationViolation {
    std::string relation;
    int graph_i = -1;
    int graph_j = -1;
    std::string detail;
};

// Checks, for every computed pair over one fixed order:
//   null(W_ij) subset of null(W_ii) ^ null(W_jj),
//   null(W_ij) subset of null(W_KK),
//   null(W_iK) == null(W_ii)  (K = the complete graph's index).
// Violations are returned as data; an empty list means all relations hold.
std::vector<RelationViolation> verify_subset_relations(
    const std::vector<PairNullResult>& results, const std::map<int, Subspace>& diag,
    int complete_index);

}  // namespace qwnull
