#include "relmp/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace relmp {

Matrix laplacian(const Matrix& adjacency) {
    const std::size_t n = adjacency.rows();
    if (adjacency.cols() != n) throw std::invalid_argument("adjacency must be square");
    Matrix l(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        double deg = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;  // self-loops do not enter the Laplacian
            const double w = 0.5 * (adjacency(i, j) + adjacency(j, i));
            l(i, j) = -w;
            deg += w;
        }
        l(i, i) = deg;
    }
    return l;
}

std::vector<double> symmetric_eigenvalues(const Matrix& a) {
    const std::size_t n = a.rows();
    if (a.cols() != n) throw std::invalid_argument("matrix must be square");
    Matrix m = a;
    // Symmetrize defensively; callers pass symmetric inputs.
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double v = 0.5 * (m(i, j) + m(j, i));
            m(i, j) = m(j, i) = v;
        }
    }

    const int max_sweeps = 100;
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        double off = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) off += m(i, j) * m(i, j);
        }
        if (off < 1e-24) break;
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                if (std::fabs(m(p, q)) < 1e-300) continue;
                const double theta = (m(q, q) - m(p, p)) / (2.0 * m(p, q));
                const double t = (theta >= 0 ? 1.0 : -1.0) /
                                 (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    const double mkp = m(k, p), mkq = m(k, q);
                    m(k, p) = c * mkp - s * mkq;
                    m(k, q) = s * mkp + c * mkq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double mpk = m(p, k), mqk = m(q, k);
                    m(p, k) = c * mpk - s * mqk;
                    m(q, k) = s * mpk + c * mqk;
                }
            }
        }
    }
    std::vector<double> eig(n);
    for (std::size_t i = 0; i < n; ++i) eig[i] = m(i, i);
    std::sort(eig.begin(), eig.end());
    return eig;
}

double algebraic_connectivity(const Matrix& adjacency) {
    const auto eig = symmetric_eigenvalues(laplacian(adjacency));
    if (eig.size() < 2) return 0.0;
    return eig[1];
}

std::vector<double> second_eigenvector_normalized(const Matrix& adjacency,
                                                  int power_iters, Rng& rng) {
    const std::size_t n = adjacency.rows();
    if (adjacency.cols() != n) throw std::invalid_argument("adjacency must be square");
    if (n < 2) throw std::invalid_argument("need at least 2 nodes");

    std::vector<double> inv_sqrt_deg(n, 0.0), dominant(n, 0.0);
    double norm = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double deg = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            if (i != j) deg += 0.5 * (adjacency(i, j) + adjacency(j, i));
        }
        if (deg > 0.0) {
            inv_sqrt_deg[i] = 1.0 / std::sqrt(deg);
            dominant[i] = std::sqrt(deg);
            norm += deg;
        }
    }
    norm = std::sqrt(norm);
    if (norm > 0.0) {
        for (double& v : dominant) v /= norm;
    }

    std::vector<double> x(n), y(n);
    for (double& v : x) v = rng.uniform(-1.0, 1.0);

    for (int it = 0; it < power_iters; ++it) {
        // y = D^{-1/2} A D^{-1/2} x
        for (std::size_t i = 0; i < n; ++i) {
            double acc = 0.0;
            for (std::size_t j = 0; j < n; ++j) {
                if (i == j) continue;
                const double w = 0.5 * (adjacency(i, j) + adjacency(j, i));
                acc += w * inv_sqrt_deg[i] * inv_sqrt_deg[j] * x[j];
            }
            y[i] = acc;
        }
        double dot = 0.0;
        for (std::size_t i = 0; i < n; ++i) dot += y[i] * dominant[i];
        double len = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            y[i] -= dot * dominant[i];
            len += y[i] * y[i];
        }
        len = std::sqrt(len);
        if (len < 1e-300) {
            // Degenerate start; reseed and continue.
            for (double& v : y) v = rng.uniform(-1.0, 1.0);
            len = 1.0;
        }
        for (std::size_t i = 0; i < n; ++i) x[i] = y[i] / len;
    }
    return x;
}

}  // namespace relmp
