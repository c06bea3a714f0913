#pragma once

#include <complex>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "qwnull/graph.hpp"
#include "qwnull/int_matrix.hpp"

namespace qwnull {

// Floating-point CTQW simulator, kept fully independent of the exact-rational
// path so it can serve as a numerical cross-check.

struct ComplexMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<std::complex<double>> entries;

    ComplexMatrix() = default;
    ComplexMatrix(int r, int c) : rows(r), cols(c), entries(static_cast<std::size_t>(r) * c) {}
    std::complex<double>& at(int r, int c) {
        return entries[static_cast<std::size_t>(r) * cols + c];
    }
    std::complex<double> at(int r, int c) const {
        return entries[static_cast<std::size_t>(r) * cols + c];
    }
};

struct WalkState {
    std::vector<std::complex<double>> amplitudes;
    double time = 0.0;
};

WalkState basis_state(int n, int vertex);
WalkState uniform_state(int n);

double norm(const std::vector<std::complex<double>>& v);

// Spectral factorization L = Q diag(eigenvalues) Q^T of a symmetric integer
// matrix. Construction verifies the reconstruction and orthogonality of Q to
// 1e-10 in the max norm.
class UnitaryCache {
public:
    explicit UnitaryCache(const IntMatrix& laplacian);

    int size() const { return n_; }
    const std::vector<double>& eigenvalues() const { return eigenvalues_; }
    double eigenvector(int row, int col) const {
        return eigenvectors_[static_cast<std::size_t>(row) * n_ + col];
    }

    // U(t) = Q diag(exp(-i t lambda_k)) Q^T; complex symmetric and unitary.
    ComplexMatrix unitary_at(double t) const;

private:
    int n_ = 0;
    std::vector<double> eigenvalues_;
    std::vector<double> eigenvectors_;  // Q, row-major, columns are eigenvectors
};

ComplexMatrix expm_unitary(const IntMatrix& laplacian, double t);

// psi(t) = U(t) psi0. Throws std::domain_error when psi0 is not normalized
// to 1e-9.
WalkState evolve(const LabeledGraph& g, const WalkState& psi0, double t);

// Applies U_i(t) (x) U_j(t') to a length-n^2 state in the row-major vec
// convention. Throws std::invalid_argument on order mismatch.
WalkState bipartite_evolve(const LabeledGraph& g_i, const LabeledGraph& g_j,
                           const WalkState& psi0, double t, double t_prime);

// || (U_i(t) (x) U_j(t') - U_j(t') (x) U_i(t)) psi ||_2.
double w_residual(const LabeledGraph& g_i, const LabeledGraph& g_j,
                  const std::vector<std::complex<double>>& psi, double t, double t_prime);
double w_residual(const UnitaryCache& u_i, const UnitaryCache& u_j,
                  const std::vector<std::complex<double>>& psi, double t, double t_prime);

// Entrywise |amplitude|^2.
std::vector<double> probabilities(const WalkState& state);

// Reproducible (t, t') draws, each uniform on (0, 2*pi].
class TimeSampler {
public:
    explicit TimeSampler(std::uint64_t seed) : rng_(seed) {}
    std::pair<double, double> next();

private:
    std::mt19937_64 rng_;
};

}  // namespace qwnull
