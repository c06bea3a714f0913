#include "qwnull/int_matrix.hpp"

#include <stdexcept>

namespace qwnull {

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix product shape mismatch");
    IntMatrix out(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int k = 0; k < a.cols(); ++k) {
            const std::int64_t aik = a.at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < b.cols(); ++j) out.at(i, j) += aik * b.at(k, j);
        }
    }
    return out;
}

std::vector<IntMatrix> matrix_powers(const IntMatrix& m, int max_power) {
    if (!m.is_square()) throw std::invalid_argument("powers require a square matrix");
    std::vector<IntMatrix> out;
    out.reserve(max_power + 1);
    out.push_back(IntMatrix::identity(m.rows()));
    for (int k = 1; k <= max_power; ++k) out.push_back(multiply(out.back(), m));
    return out;
}

}  // namespace qwnull
