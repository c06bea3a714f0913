#include "qwnull/distinguishability.hpp"

#include <stdexcept>
#include <utility>

namespace qwnull {

namespace {

void check_symmetric(const IntMatrix& l) {
    if (!l.is_symmetric()) throw std::domain_error("Laplacian must be symmetric");
}

// Columns of a d-by-k matrix holding the current candidate basis.
RationalMatrix basis_columns(const Subspace& s) {
    RationalMatrix b(s.ambient_dim(), s.dim());
    for (int k = 0; k < s.dim(); ++k)
        for (int r = 0; r < s.ambient_dim(); ++r) b.at(r, k) = s.basis()[k][r];
    return b;
}

// Applies X -> A X B - B X A to each basis column of b (each column read as
// an n-by-n matrix in row-major order) and stacks the images.
RationalMatrix commutator_block(const IntMatrix& a, const IntMatrix& b_pow,
                                const RationalMatrix& b) {
    const int n = a.rows();
    const int d = n * n;
    const RationalMatrix ra = RationalMatrix::from_integer(a);
    const RationalMatrix rb = RationalMatrix::from_integer(b_pow);
    RationalMatrix out(d, b.cols());
    for (int k = 0; k < b.cols(); ++k) {
        RationalMatrix x(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) x.at(i, j) = b.at(i * n + j, k);
        const RationalMatrix y = subtract(multiply(multiply(ra, x), rb),
                                          multiply(multiply(rb, x), ra));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) out.at(i * n + j, k) = y.at(i, j);
    }
    return out;
}

// Restricts the candidate space to the kernel of one constraint block and
// records the block's rank.
Subspace apply_constraint(const Subspace& current, const IntMatrix& left,
                          const IntMatrix& right, int p, int q,
                          std::vector<ConstraintRank>& ranks) {
    if (current.dim() == 0) {
        ranks.push_back({p, q, 0});
        return current;
    }
    const RationalMatrix cols = basis_columns(current);
    const RationalMatrix block = commutator_block(left, right, cols);
    const Subspace coeff_kernel = kernel(block);
    ranks.push_back({p, q, current.dim() - coeff_kernel.dim()});
    if (coeff_kernel.dim() == current.dim()) return current;
    std::vector<std::vector<Rational>> vectors;
    vectors.reserve(coeff_kernel.dim());
    for (const auto& coeffs : coeff_kernel.basis()) {
        std::vector<Rational> v(current.ambient_dim());
        for (int k = 0; k < current.dim(); ++k) {
            if (coeffs[k] == 0) continue;
            const Rational c(coeffs[k]);
            for (int r = 0; r < current.ambient_dim(); ++r)
                v[r] += c * Rational(current.basis()[k][r]);
        }
        vectors.push_back(std::move(v));
    }
    return Subspace::span_of(current.ambient_dim(), vectors);
}

void check_pair_inputs(const IntMatrix& laplacian_i, const IntMatrix& laplacian_j) {
    if (laplacian_i.rows() != laplacian_j.rows())
        throw std::invalid_argument("graphs must have equal order");
    check_symmetric(laplacian_i);
    check_symmetric(laplacian_j);
}

PairNullResult finish_pair(Subspace space, std::vector<ConstraintRank> ranks, int d) {
    const std::vector<Rational> ones(d, Rational(1));
    if (!space.contains_vector(ones))
        throw std::logic_error("pair null space lost the all-ones vector");
    PairNullResult result;
    result.space = std::move(space);
    result.constraint_ranks = std::move(ranks);
    return result;
}

PairNullResult pair_null_seeded(const IntMatrix& laplacian_i, const IntMatrix& laplacian_j,
                                const Subspace& diag_i, const Subspace& diag_j) {
    const int n = laplacian_i.rows();
    const int d = n * n;
    const auto pow_i = matrix_powers(laplacian_i, n - 1);
    const auto pow_j = matrix_powers(laplacian_j, n - 1);

    std::vector<ConstraintRank> ranks;
    ranks.push_back({1, 0, d - diag_i.dim()});
    ranks.push_back({0, 1, d - diag_j.dim()});
    Subspace space = intersect(diag_i, diag_j);
    // The uniform line is inside every pair null space, so dimension 1 is
    // final and the remaining blocks cannot shrink anything.
    for (int p = 1; p < n && space.dim() > 1; ++p)
        for (int q = 1; q < n && space.dim() > 1; ++q)
            space = apply_constraint(space, pow_i[p], pow_j[q], p, q, ranks);
    return finish_pair(std::move(space), std::move(ranks), d);
}

}  // namespace

Subspace diag_null(const IntMatrix& laplacian) {
    check_symmetric(laplacian);
    const RationalMatrix l = RationalMatrix::from_integer(laplacian);
    const RationalMatrix id = RationalMatrix::identity(laplacian.rows());
    return kernel(subtract(kron(l, id), kron(id, l)));
}

PairNullResult pair_null(const IntMatrix& laplacian_i, const IntMatrix& laplacian_j,
                         const Subspace& diag_i, const Subspace& diag_j) {
    check_pair_inputs(laplacian_i, laplacian_j);
    return pair_null_seeded(laplacian_i, laplacian_j, diag_i, diag_j);
}

PairNullResult pair_null(const IntMatrix& laplacian_i, const IntMatrix& laplacian_j,
                         PairNullStrategy strategy) {
    check_pair_inputs(laplacian_i, laplacian_j);
    const int n = laplacian_i.rows();
    const int d = n * n;

    if (strategy == PairNullStrategy::kSeeded) {
        return pair_null_seeded(laplacian_i, laplacian_j, diag_null(laplacian_i),
                                diag_null(laplacian_j));
    }
    const auto pow_i = matrix_powers(laplacian_i, n - 1);
    const auto pow_j = matrix_powers(laplacian_j, n - 1);
    std::vector<ConstraintRank> ranks;
    Subspace space = Subspace::full(d);
    for (int p = 0; p < n; ++p) {
        for (int q = 0; q < n; ++q) {
            if (p == 0 && q == 0) continue;
            space = apply_constraint(space, pow_i[p], pow_j[q], p, q, ranks);
        }
    }
    return finish_pair(std::move(space), std::move(ranks), d);
}

std::vector<RelationViolation> verify_subset_relations(
    const std::vector<PairNullResult>& results, const std::map<int, Subspace>& diag,
    int complete_index) {
    std::vector<RelationViolation> violations;
    const auto complete_it = diag.find(complete_index);
    if (complete_it == diag.end())
        throw std::invalid_argument("complete graph index missing from diagonal map");
    const Subspace& complete = complete_it->second;

    for (const auto& r : results) {
        const Subspace& di = diag.at(r.graph_i);
        const Subspace& dj = diag.at(r.graph_j);
        if (!contains(di, r.space) || !contains(dj, r.space)) {
            violations.push_back({"pair-inside-diagonal-intersection", r.graph_i, r.graph_j,
                                  "null(W_ij) is not inside null(W_ii) ^ null(W_jj)"});
        }
        if (!contains(complete, r.space)) {
            violations.push_back({"pair-inside-complete", r.graph_i, r.graph_j,
                                  "null(W_ij) is not inside null(W_KK)"});
        }
        if (r.graph_i != r.graph_j &&
            (r.graph_i == complete_index || r.graph_j == complete_index)) {
            const Subspace& other = r.graph_i == complete_index ? dj : di;
            if (r.space != other) {
                violations.push_back({"pair-with-complete-equals-diagonal", r.graph_i,
                                      r.graph_j,
                                      "null(W_iK) differs from null(W_ii)"});
            }
        }
    }
    return violations;
}

}  // namespace qwnull
