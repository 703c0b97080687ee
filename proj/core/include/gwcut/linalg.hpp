#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "gwcut/matrix.hpp"

namespace gwcut {

double dot(std::span<const double> a, std::span<const double> b);
double norm2(std::span<const double> a);

struct SymmetricEigen {
    std::vector<double> values; // descending
    Matrix vectors;             // column k is the eigenvector of values[k]
};

// Cyclic Jacobi eigendecomposition of a symmetric matrix.
SymmetricEigen eigen_symmetric(const Matrix& a);

double min_eigenvalue_symmetric(const Matrix& a);

// Cholesky factorization a = L Lᵀ for positive semidefinite input.
// Pivots with |pivot| <= clamp_tol are treated as zero (the rest of the
// column is zeroed, valid for PSD matrices). Returns the number of clamped
// pivots, or -1 when a pivot falls below -clamp_tol.
int cholesky_psd(const Matrix& a, Matrix& lower, double clamp_tol);

} // namespace gwcut
