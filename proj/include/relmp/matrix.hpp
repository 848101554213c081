#pragma once

#include <cstddef>
#include <vector>

namespace relmp {

/// Dense row-major matrix of doubles. Small enough for desk-scale influence
/// matrices; kernels below keep a serial reference implementation next to the
/// OpenMP one so results can be cross-checked bit for bit.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    double& operator()(std::size_t r, std::size_t c) {
        return data_[r * cols_ + c];
    }
    double operator()(std::size_t r, std::size_t c) const {
        return data_[r * cols_ + c];
    }

    double* row_ptr(std::size_t r) { return data_.data() + r * cols_; }
    const double* row_ptr(std::size_t r) const {
        return data_.data() + r * cols_;
    }

    const std::vector<double>& data() const { return data_; }
    std::vector<double>& data() { return data_; }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

namespace kernels {

/// C = A * B, plain triple loop in fixed (i, l, j) order.
Matrix matmul_serial(const Matrix& a, const Matrix& b);

/// C = A * B, rows of C distributed over OpenMP threads. Each output row is
/// accumulated by exactly one thread in the same order as the serial kernel,
/// so the result is bit-identical for any thread count.
Matrix matmul_omp(const Matrix& a, const Matrix& b);

/// Dispatches to the OpenMP kernel for matrices worth parallelizing.
Matrix matmul(const Matrix& a, const Matrix& b);

/// A^t via repeated squaring (t >= 0).
Matrix matpow(const Matrix& a, unsigned long long t);

double max_abs(const Matrix& a);
double max_entry(const Matrix& a);
std::vector<double> row_sums(const Matrix& a);

}  // namespace kernels

}  // namespace relmp
