#pragma once

#include <cstdint>
#include <vector>

namespace qwnull {

// Dense integer matrix, row-major. Holds adjacency, degree and Laplacian
// matrices and their small powers; entries stay far below the int64 range
// for the graph orders this library accepts.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), entries_(static_cast<std::size_t>(rows) * cols, 0) {}

    static IntMatrix identity(int n) {
        IntMatrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    std::int64_t& at(int r, int c) { return entries_[static_cast<std::size_t>(r) * cols_ + c]; }
    std::int64_t at(int r, int c) const { return entries_[static_cast<std::size_t>(r) * cols_ + c]; }

    bool is_square() const { return rows_ == cols_; }

    bool is_symmetric() const {
        if (!is_square()) return false;
        for (int i = 0; i < rows_; ++i)
            for (int j = i + 1; j < cols_; ++j)
                if (at(i, j) != at(j, i)) return false;
        return true;
    }

    bool operator==(const IntMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && entries_ == o.entries_;
    }

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<std::int64_t> entries_;
};

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);

// powers[k] = m^k for k = 0..max_power (m square).
std::vector<IntMatrix> matrix_powers(const IntMatrix& m, int max_power);

}  // namespace qwnull
