#pragma once

#include <string>
#include <vector>

#include "qwnull/rational.hpp"
#include "qwnull/rational_matrix.hpp"

namespace qwnull {

// Subspace of Q^d in canonical form: the basis is the reduced row echelon
// form of any spanning set, with each row scaled to a primitive integer
// vector (denominators cleared, entry gcd 1, first nonzero entry positive).
// Two Subspace values are equal as sets iff their bases are identical
// entrywise, so deduplication is plain equality with no tolerance.
class Subspace {
public:
    static Subspace zero(int ambient_dim);
    static Subspace full(int ambient_dim);
    // Canonicalizes an arbitrary spanning set (vectors of length ambient_dim).
    static Subspace span_of(int ambient_dim, const std::vector<std::vector<Rational>>& vectors);

    int ambient_dim() const { return ambient_dim_; }
    int dim() const { return static_cast<int>(basis_.size()); }
    const std::vector<std::vector<Int>>& basis() const { return basis_; }

    bool contains_vector(const std::vector<Rational>& v) const;

    bool operator==(const Subspace& o) const {
        return ambient_dim_ == o.ambient_dim_ && basis_ == o.basis_;
    }
    bool operator!=(const Subspace& o) const { return !(*this == o); }
    // Deterministic total order: ambient dim, then dim, then basis entries
    // lexicographically. Usable as a map key and as the report tiebreak.
    bool operator<(const Subspace& o) const;

private:
    Subspace(int ambient_dim, std::vector<std::vector<Int>> basis)
        : ambient_dim_(ambient_dim), basis_(std::move(basis)) {}

    int ambient_dim_ = 0;
    std::vector<std::vector<Int>> basis_;
};

// Exact null space of m, canonicalized. dim = cols - rank.
Subspace kernel(const RationalMatrix& m);

// Set intersection via the Zassenhaus construction. Throws
// std::invalid_argument on ambient dimension mismatch.
Subspace intersect(const Subspace& a, const Subspace& b);

// True iff b is a subset of a (every basis vector of b reduces to zero
// against a's basis). Throws std::invalid_argument on dimension mismatch.
bool contains(const Subspace& a, const Subspace& b);

// Basis of s whose plain vector sum is the all-ones vector. Replaces the
// lowest-index canonical basis vector with (all-ones - sum of the others);
// for display and export only, never for identity tests. Throws
// std::domain_error when the all-ones vector is not in s.
std::vector<std::vector<Int>> to_uniform_sum_basis(const Subspace& s);

// Row-major flattening: entry (i,j) of an n-by-n matrix sits at i*n + j.
int vec_index(int i, int j, int n);

// {"ambient_dim": d, "dim": k, "basis": [[int,...],...]}
std::string to_json_string(const Subspace& s);
Subspace subspace_from_json(const std::string& text);

}  // namespace qwnull
