#pragma once

#include <vector>

#include "ucpt/matrix.hpp"

namespace ucpt {

/// Hermitian eigendecomposition (eigenvalues descending, eigenvectors as
/// matrix columns), computed with cyclic complex Jacobi rotations.
struct HermitianEig {
    std::vector<double> eigenvalues;
    CMat eigenvectors;
};

/// Requires ||M - M^dagger||_max < 1e-10; iterates until the off-diagonal
/// Frobenius mass drops below 1e-13 * ||M||_F.
HermitianEig hermitian_eig(const CMat& m);

/// Numerical rank: the number of eigenvalues of M^dagger M above
/// tol_rel * lambda_max.  Hermitian inputs (PSD Gram matrices) are
/// diagonalized directly.
int float_rank(const CMat& m, double tol_rel = 1e-9);

}  // namespace ucpt
