#pragma once

// Brute-force oracles for the test suites. Everything here is dense or
// naively recursive on purpose: it must stay independent of the banded and
// per-interval-quadrature paths it checks.

#include <functional>
#include <vector>

namespace testoracle {

using Matrix = std::vector<std::vector<double>>;

Matrix identity(int n);

// Lower-triangular L with A = L L^T; throws std::runtime_error if A is not
// positive definite.
Matrix dense_cholesky(const Matrix& a);

// Eigenvalues (ascending) and eigenvectors (columns) of a symmetric matrix
// by cyclic Jacobi rotations.
void dense_eig_sym(Matrix a, std::vector<double>& values, Matrix& vectors);

// Generalized H c = E S c via dense Cholesky reduction + Jacobi. Vectors are
// S-orthonormal columns.
void dense_eig_gen(const Matrix& h, const Matrix& s,
                   std::vector<double>& values, Matrix& vectors);

double adaptive_simpson(const std::function<double(double)>& f, double a,
                        double b, double tol);

}  // namespace testoracle
