#include "relmp/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace relmp::kernels {

namespace {

inline void mul_row(const Matrix& a, const Matrix& b, Matrix& c,
                    std::size_t i) {
    const std::size_t k = a.cols();
    const std::size_t n = b.cols();
    double* crow = c.row_ptr(i);
    const double* arow = a.row_ptr(i);
    for (std::size_t l = 0; l < k; ++l) {
        const double av = arow[l];
        if (av == 0.0) continue;
        const double* brow = b.row_ptr(l);
        for (std::size_t j = 0; j < n; ++j) {
            crow[j] += av * brow[j];
        }
    }
}

}  // namespace

Matrix matmul_serial(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) {
        throw std::invalid_argument("matmul: inner dimensions differ");
    }
    Matrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        mul_row(a, b, c, i);
    }
    return c;
}

Matrix matmul_omp(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) {
        throw std::invalid_argument("matmul: inner dimensions differ");
    }
    Matrix c(a.rows(), b.cols());
    const long rows = static_cast<long>(a.rows());
#pragma omp parallel for schedule(static)
    for (long i = 0; i < rows; ++i) {
        mul_row(a, b, c, static_cast<std::size_t>(i));
    }
    return c;
}

Matrix matmul(const Matrix& a, const Matrix& b) {
    // Tiny products are cheaper without the fork/join overhead.
    if (a.rows() * b.cols() < 64 * 64) return matmul_serial(a, b);
    return matmul_omp(a, b);
}

Matrix matpow(const Matrix& a, unsigned long long t) {
    if (a.rows() != a.cols()) {
        throw std::invalid_argument("matpow: matrix must be square");
    }
    Matrix result = Matrix::identity(a.rows());
    Matrix base = a;
    while (t > 0) {
        if (t & 1ULL) result = matmul(result, base);
        t >>= 1ULL;
        if (t > 0) base = matmul(base, base);
    }
    return result;
}

double max_abs(const Matrix& a) {
    double m = 0.0;
    for (double v : a.data()) m = std::max(m, std::fabs(v));
    return m;
}

double max_entry(const Matrix& a) {
    double m = a.data().empty() ? 0.0 : a.data()[0];
    for (double v : a.data()) m = std::max(m, v);
    return m;
}

std::vector<double> row_sums(const Matrix& a) {
    std::vector<double> sums(a.rows(), 0.0);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        const double* row = a.row_ptr(i);
        double s = 0.0;
        for (std::size_t j = 0; j < a.cols(); ++j) s += row[j];
        sums[i] = s;
    }
    return sums;
}

}  // namespace relmp::kernels
