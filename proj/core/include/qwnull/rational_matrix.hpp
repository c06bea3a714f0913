#pragma once

#include <vector>

#include "qwnull/int_matrix.hpp"
#include "qwnull/rational.hpp"

namespace qwnull {

// Dense matrix of exact rationals, row-major. All constraint operators and
// kernels are computed here; no floating point is involved anywhere.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), entries_(static_cast<std::size_t>(rows) * cols) {}

    static RationalMatrix identity(int n);
    static RationalMatrix from_integer(const IntMatrix& m);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rational& at(int r, int c) { return entries_[static_cast<std::size_t>(r) * cols_ + c]; }
    const Rational& at(int r, int c) const {
        return entries_[static_cast<std::size_t>(r) * cols_ + c];
    }

    bool operator==(const RationalMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && entries_ == o.entries_;
    }

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Rational> entries_;
};

RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix subtract(const RationalMatrix& a, const RationalMatrix& b);

// Kronecker product: block (p,q) of the result is a(p,q) * b.
RationalMatrix kron(const RationalMatrix& a, const RationalMatrix& b);

// Exact Gauss-Jordan reduction. No pivot tolerance exists: a pivot is any
// nonzero entry.
struct RrefResult {
    RationalMatrix mat;          // reduced rows first, zero rows dropped
    std::vector<int> pivot_cols; // one per reduced row
};
RrefResult rref(const RationalMatrix& m);

int rank(const RationalMatrix& m);

}  // namespace qwnull
