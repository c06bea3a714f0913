#include "qwnull/rational_matrix.hpp"

#include <stdexcept>
#include <utility>

namespace qwnull {

RationalMatrix RationalMatrix::identity(int n) {
    RationalMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RationalMatrix RationalMatrix::from_integer(const IntMatrix& src) {
    RationalMatrix m(src.rows(), src.cols());
    for (int r = 0; r < src.rows(); ++r)
        for (int c = 0; c < src.cols(); ++c) m.at(r, c) = src.at(r, c);
    return m;
}

RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix product shape mismatch");
    RationalMatrix out(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int k = 0; k < a.cols(); ++k) {
            const Rational& aik = a.at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < b.cols(); ++j) {
                if (b.at(k, j) != 0) out.at(i, j) += aik * b.at(k, j);
            }
        }
    }
    return out;
}

RationalMatrix subtract(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("matrix difference shape mismatch");
    RationalMatrix out(a.rows(), a.cols());
    for (int r = 0; r < a.rows(); ++r)
        for (int c = 0; c < a.cols(); ++c) out.at(r, c) = a.at(r, c) - b.at(r, c);
    return out;
}

RationalMatrix kron(const RationalMatrix& a, const RationalMatrix& b) {
    RationalMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (int p = 0; p < a.rows(); ++p) {
        for (int q = 0; q < a.cols(); ++q) {
            const Rational& apq = a.at(p, q);
            if (apq == 0) continue;
            for (int r = 0; r < b.rows(); ++r)
                for (int c = 0; c < b.cols(); ++c)
                    out.at(p * b.rows() + r, q * b.cols() + c) = apq * b.at(r, c);
        }
    }
    return out;
}

RrefResult rref(const RationalMatrix& m) {
    RationalMatrix work = m;
    const int rows = work.rows();
    const int cols = work.cols();
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int pr = -1;
        for (int i = r; i < rows; ++i) {
            if (work.at(i, c) != 0) {
                pr = i;
                break;
            }
        }
        if (pr < 0) continue;
        if (pr != r) {
            for (int j = c; j < cols; ++j) std::swap(work.at(r, j), work.at(pr, j));
        }
        const Rational inv = Rational(1) / work.at(r, c);
        for (int j = c; j < cols; ++j) work.at(r, j) *= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || work.at(i, c) == 0) continue;
            const Rational f = work.at(i, c);
            for (int j = c; j < cols; ++j) work.at(i, j) -= f * work.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    RationalMatrix reduced(r, cols);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < cols; ++j) reduced.at(i, j) = work.at(i, j);
    return {std::move(reduced), std::move(pivots)};
}

int rank(const RationalMatrix& m) { return static_cast<int>(rref(m).pivot_cols.size()); }

}  // namespace qwnull
