#pragma once

#include <vector>

#include "relmp/matrix.hpp"
#include "relmp/rng.hpp"

namespace relmp {

/// Combinatorial Laplacian L = D - A of a symmetric weighted adjacency.
Matrix laplacian(const Matrix& adjacency);

/// All eigenvalues of a symmetric matrix, ascending (cyclic Jacobi).
std::vector<double> symmetric_eigenvalues(const Matrix& a);

/// Second-smallest Laplacian eigenvalue of the symmetrized adjacency.
double algebraic_connectivity(const Matrix& adjacency);

/// Approximates the second eigenvector of the degree-normalized adjacency
/// D^{-1/2} A D^{-1/2} by power iteration deflated against the dominant
/// sqrt-degree direction. Deterministic given the rng state.
std::vector<double> second_eigenvector_normalized(const Matrix& adjacency,
                                                  int power_iters, Rng& rng);

}  // namespace relmp
