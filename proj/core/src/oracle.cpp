#include "qwnull/oracle.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include <Eigen/Dense>

namespace qwnull {

namespace {

constexpr double kDecompositionTol = 1e-10;

void check_normalized(const std::vector<std::complex<double>>& amplitudes) {
    if (std::abs(norm(amplitudes) - 1.0) > 1e-9)
        throw std::domain_error("state vector is not normalized");
}

// Y = U_i X U_j - U_j X U_i with psi = vec(X) row-major; both U are complex
// symmetric, so (A (x) B) vec(X) = vec(A X B).
std::vector<std::complex<double>> w_apply(const ComplexMatrix& ui, const ComplexMatrix& uj,
                                          const std::vector<std::complex<double>>& psi) {
    const int n = ui.rows;
    auto mul = [n](const ComplexMatrix& a, const std::vector<std::complex<double>>& x,
                   const ComplexMatrix& b) {
        std::vector<std::complex<double>> ax(static_cast<std::size_t>(n) * n);
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k) {
                const std::complex<double> aik = a.at(i, k);
                for (int j = 0; j < n; ++j) ax[i * n + j] += aik * x[k * n + j];
            }
        std::vector<std::complex<double>> out(static_cast<std::size_t>(n) * n);
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k) {
                const std::complex<double> xik = ax[i * n + k];
                for (int j = 0; j < n; ++j) out[i * n + j] += xik * b.at(k, j);
            }
        return out;
    };
    auto left = mul(ui, psi, uj);
    const auto right = mul(uj, psi, ui);
    for (std::size_t k = 0; k < left.size(); ++k) left[k] -= right[k];
    return left;
}

}  // namespace

WalkState basis_state(int n, int vertex) {
    if (vertex < 0 || vertex >= n) throw std::out_of_range("start vertex outside [0, n)");
    WalkState s;
    s.amplitudes.assign(n, {0.0, 0.0});
    s.amplitudes[vertex] = {1.0, 0.0};
    return s;
}

WalkState uniform_state(int n) {
    WalkState s;
    s.amplitudes.assign(n, {1.0 / std::sqrt(static_cast<double>(n)), 0.0});
    return s;
}

double norm(const std::vector<std::complex<double>>& v) {
    double sum = 0.0;
    for (const auto& a : v) sum += std::norm(a);
    return std::sqrt(sum);
}

UnitaryCache::UnitaryCache(const IntMatrix& laplacian) {
    if (!laplacian.is_symmetric())
        throw std::domain_error("eigendecomposition requires a symmetric matrix");
    n_ = laplacian.rows();
    Eigen::MatrixXd l(n_, n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) l(i, j) = static_cast<double>(laplacian.at(i, j));
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(l);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("symmetric eigendecomposition failed");

    eigenvalues_.resize(n_);
    eigenvectors_.resize(static_cast<std::size_t>(n_) * n_);
    for (int k = 0; k < n_; ++k) eigenvalues_[k] = solver.eigenvalues()(k);
    for (int i = 0; i < n_; ++i)
        for (int k = 0; k < n_; ++k)
            eigenvectors_[static_cast<std::size_t>(i) * n_ + k] = solver.eigenvectors()(i, k);

    const Eigen::MatrixXd q = solver.eigenvectors();
    const double recon = (q * solver.eigenvalues().asDiagonal() * q.transpose() - l)
                             .cwiseAbs()
                             .maxCoeff();
    const double ortho = (q.transpose() * q - Eigen::MatrixXd::Identity(n_, n_))
                             .cwiseAbs()
                             .maxCoeff();
    if (recon > kDecompositionTol || ortho > kDecompositionTol)
        throw std::runtime_error("eigendecomposition failed its accuracy contract");
}

ComplexMatrix UnitaryCache::unitary_at(double t) const {
    std::vector<std::complex<double>> phases(n_);
    for (int k = 0; k < n_; ++k) {
        phases[k] = std::exp(std::complex<double>(0.0, -t * eigenvalues_[k]));
    }
    ComplexMatrix u(n_, n_);
    for (int i = 0; i < n_; ++i) {
        for (int j = 0; j < n_; ++j) {
            std::complex<double> sum = 0.0;
            for (int k = 0; k < n_; ++k)
                sum += eigenvector(i, k) * phases[k] * eigenvector(j, k);
            u.at(i, j) = sum;
        }
    }
    return u;
}

ComplexMatrix expm_unitary(const IntMatrix& laplacian, double t) {
    return UnitaryCache(laplacian).unitary_at(t);
}

WalkState evolve(const LabeledGraph& g, const WalkState& psi0, double t) {
    if (static_cast<int>(psi0.amplitudes.size()) != g.order())
        throw std::invalid_argument("state length does not match graph order");
    check_normalized(psi0.amplitudes);
    const ComplexMatrix u = expm_unitary(laplacian(g), t);
    WalkState out;
    out.time = psi0.time + t;
    out.amplitudes.assign(g.order(), {0.0, 0.0});
    for (int i = 0; i < g.order(); ++i)
        for (int j = 0; j < g.order(); ++j)
            out.amplitudes[i] += u.at(i, j) * psi0.amplitudes[j];
    return out;
}

WalkState bipartite_evolve(const LabeledGraph& g_i, const LabeledGraph& g_j,
                           const WalkState& psi0, double t, double t_prime) {
    if (g_i.order() != g_j.order())
        throw std::invalid_argument("bipartite walk requires graphs of equal order");
    const int n = g_i.order();
    if (static_cast<int>(psi0.amplitudes.size()) != n * n)
        throw std::invalid_argument("bipartite state must have length order^2");
    check_normalized(psi0.amplitudes);
    const ComplexMatrix ui = expm_unitary(laplacian(g_i), t);
    const ComplexMatrix uj = expm_unitary(laplacian(g_j), t_prime);
    WalkState out;
    out.time = psi0.time + t + t_prime;
    out.amplitudes.assign(static_cast<std::size_t>(n) * n, {0.0, 0.0});
    // vec(U_i X U_j^T) with U_j symmetric, column by column of X.
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            const std::complex<double> uik = ui.at(i, k);
            for (int l = 0; l < n; ++l)
                for (int j = 0; j < n; ++j)
                    out.amplitudes[i * n + j] += uik * psi0.amplitudes[k * n + l] * uj.at(l, j);
        }
    return out;
}

double w_residual(const UnitaryCache& u_i, const UnitaryCache& u_j,
                  const std::vector<std::complex<double>>& psi, double t, double t_prime) {
    if (u_i.size() != u_j.size())
        throw std::invalid_argument("residual requires graphs of equal order");
    if (static_cast<int>(psi.size()) != u_i.size() * u_i.size())
        throw std::invalid_argument("state must have length order^2");
    return norm(w_apply(u_i.unitary_at(t), u_j.unitary_at(t_prime), psi));
}

double w_residual(const LabeledGraph& g_i, const LabeledGraph& g_j,
                  const std::vector<std::complex<double>>& psi, double t, double t_prime) {
    if (g_i.order() != g_j.order())
        throw std::invalid_argument("residual requires graphs of equal order");
    return w_residual(UnitaryCache(laplacian(g_i)), UnitaryCache(laplacian(g_j)), psi, t,
                      t_prime);
}

std::vector<double> probabilities(const WalkState& state) {
    std::vector<double> p;
    p.reserve(state.amplitudes.size());
    for (const auto& a : state.amplitudes) p.push_back(std::norm(a));
    return p;
}

std::pair<double, double> TimeSampler::next() {
    std::uniform_real_distribution<double> dist(0.0, 2.0 * std::numbers::pi);
    // Map [0, 2pi) to (0, 2pi].
    const double a = 2.0 * std::numbers::pi - dist(rng_);
    const double b = 2.0 * std::numbers::pi - dist(rng_);
    return {a, b};
}

}  // namespace qwnull
