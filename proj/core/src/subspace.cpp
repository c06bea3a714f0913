#include "qwnull/subspace.hpp"

#include <stdexcept>
#include <utility>

#include <nlohmann/json.hpp>

namespace qwnull {

namespace {

// Scale a rational row to primitive integer form: clear denominators, divide
// by the entry gcd, make the first nonzero entry positive.
std::vector<Int> primitive_row(const RationalMatrix& m, int row) {
    Int den = 1;
    for (int c = 0; c < m.cols(); ++c) {
        den = boost::multiprecision::lcm(den, boost::multiprecision::denominator(m.at(row, c)));
    }
    std::vector<Int> out(m.cols());
    Int g = 0;
    for (int c = 0; c < m.cols(); ++c) {
        const Rational v = m.at(row, c) * den;
        out[c] = boost::multiprecision::numerator(v);
        g = boost::multiprecision::gcd(g, out[c]);
    }
    if (g > 1) {
        for (auto& x : out) x /= g;
    }
    for (const auto& x : out) {
        if (x != 0) {
            if (x < 0) {
                for (auto& y : out) y = -y;
            }
            break;
        }
    }
    return out;
}

void check_same_ambient(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim())
        throw std::invalid_argument("subspace ambient dimensions differ");
}

}  // namespace

Subspace Subspace::zero(int ambient_dim) { return Subspace(ambient_dim, {}); }

Subspace Subspace::full(int ambient_dim) {
    std::vector<std::vector<Int>> basis(ambient_dim, std::vector<Int>(ambient_dim, 0));
    for (int i = 0; i < ambient_dim; ++i) basis[i][i] = 1;
    return Subspace(ambient_dim, std::move(basis));
}

Subspace Subspace::span_of(int ambient_dim, const std::vector<std::vector<Rational>>& vectors) {
    if (vectors.empty()) return zero(ambient_dim);
    RationalMatrix m(static_cast<int>(vectors.size()), ambient_dim);
    for (std::size_t r = 0; r < vectors.size(); ++r) {
        if (static_cast<int>(vectors[r].size()) != ambient_dim)
            throw std::invalid_argument("spanning vector has wrong length");
        for (int c = 0; c < ambient_dim; ++c) m.at(static_cast<int>(r), c) = vectors[r][c];
    }
    const RrefResult red = rref(m);
    std::vector<std::vector<Int>> basis;
    basis.reserve(red.pivot_cols.size());
    for (int r = 0; r < red.mat.rows(); ++r) basis.push_back(primitive_row(red.mat, r));
    return Subspace(ambient_dim, std::move(basis));
}

bool Subspace::contains_vector(const std::vector<Rational>& v) const {
    if (static_cast<int>(v.size()) != ambient_dim_)
        throw std::invalid_argument("vector length does not match ambient dimension");
    std::vector<Rational> work = v;
    for (const auto& row : basis_) {
        int lead = 0;
        while (lead < ambient_dim_ && row[lead] == 0) ++lead;
        if (lead == ambient_dim_ || work[lead] == 0) continue;
        const Rational f = work[lead] / Rational(row[lead]);
        for (int c = lead; c < ambient_dim_; ++c) work[c] -= f * Rational(row[c]);
    }
    for (const auto& x : work) {
        if (x != 0) return false;
    }
    return true;
}

bool Subspace::operator<(const Subspace& o) const {
    if (ambient_dim_ != o.ambient_dim_) return ambient_dim_ < o.ambient_dim_;
    if (basis_.size() != o.basis_.size()) return basis_.size() < o.basis_.size();
    return basis_ < o.basis_;
}

Subspace kernel(const RationalMatrix& m) {
    const int cols = m.cols();
    const RrefResult red = rref(m);
    std::vector<bool> is_pivot(cols, false);
    for (int c : red.pivot_cols) is_pivot[c] = true;
    std::vector<std::vector<Rational>> vectors;
    for (int fc = 0; fc < cols; ++fc) {
        if (is_pivot[fc]) continue;
        std::vector<Rational> v(cols);
        v[fc] = 1;
        for (std::size_t r = 0; r < red.pivot_cols.size(); ++r) {
            v[red.pivot_cols[r]] = -red.mat.at(static_cast<int>(r), fc);
        }
        vectors.push_back(std::move(v));
    }
    return Subspace::span_of(cols, vectors);
}

Subspace intersect(const Subspace& a, const Subspace& b) {
    check_same_ambient(a, b);
    const int d = a.ambient_dim();
    if (a.dim() == 0 || b.dim() == 0) return Subspace::zero(d);
    // Zassenhaus: reduce [A | A; B | 0]; rows with zero left half carry an
    // intersection basis in their right half.
    RationalMatrix m(a.dim() + b.dim(), 2 * d);
    for (int r = 0; r < a.dim(); ++r) {
        for (int c = 0; c < d; ++c) {
            m.at(r, c) = a.basis()[r][c];
            m.at(r, d + c) = a.basis()[r][c];
        }
    }
    for (int r = 0; r < b.dim(); ++r) {
        for (int c = 0; c < d; ++c) m.at(a.dim() + r, c) = b.basis()[r][c];
    }
    const RrefResult red = rref(m);
    std::vector<std::vector<Rational>> vectors;
    for (int r = 0; r < red.mat.rows(); ++r) {
        bool left_zero = true;
        for (int c = 0; c < d && left_zero; ++c) left_zero = red.mat.at(r, c) == 0;
        if (!left_zero) continue;
        std::vector<Rational> v(d);
        for (int c = 0; c < d; ++c) v[c] = red.mat.at(r, d + c);
        vectors.push_back(std::move(v));
    }
    return Subspace::span_of(d, vectors);
}

bool contains(const Subspace& a, const Subspace& b) {
    check_same_ambient(a, b);
    for (const auto& row : b.basis()) {
        std::vector<Rational> v(row.begin(), row.end());
        if (!a.contains_vector(v)) return false;
    }
    return true;
}

std::vector<std::vector<Int>> to_uniform_sum_basis(const Subspace& s) {
    const int d = s.ambient_dim();
    const std::vector<Rational> ones(d, Rational(1));
    if (!s.contains_vector(ones))
        throw std::domain_error("all-ones vector is not in the subspace");
    std::vector<std::vector<Int>> out = s.basis();
    // The all-ones vector has a nonzero coefficient on every canonical basis
    // vector (its pivot entry is 1), so the lowest index is always 0.
    std::vector<Int> replacement(d, 1);
    for (std::size_t r = 1; r < out.size(); ++r) {
        for (int c = 0; c < d; ++c) replacement[c] -= out[r][c];
    }
    out[0] = std::move(replacement);
    return out;
}

int vec_index(int i, int j, int n) {
    if (i < 0 || i >= n || j < 0 || j >= n)
        throw std::out_of_range("vertex index outside [0, n)");
    return i * n + j;
}

std::string to_json_string(const Subspace& s) {
    nlohmann::ordered_json j;
    j["ambient_dim"] = s.ambient_dim();
    j["dim"] = s.dim();
    auto& basis = j["basis"] = nlohmann::json::array();
    for (const auto& row : s.basis()) {
        nlohmann::ordered_json jr = nlohmann::json::array();
        for (const auto& x : row) jr.push_back(to_int64(x));
        basis.push_back(std::move(jr));
    }
    return j.dump();
}

Subspace subspace_from_json(const std::string& text) {
    const auto j = nlohmann::json::parse(text);
    const int d = j.at("ambient_dim").get<int>();
    std::vector<std::vector<Rational>> vectors;
    for (const auto& row : j.at("basis")) {
        std::vector<Rational> v;
        v.reserve(row.size());
        for (const auto& x : row) v.emplace_back(x.get<std::int64_t>());
        vectors.push_back(std::move(v));
    }
    return Subspace::span_of(d, vectors);
}

}  // namespace qwnull
