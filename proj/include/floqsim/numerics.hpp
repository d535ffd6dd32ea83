#pragma once

#include <vector>

#include "floqsim/complex_matrix.hpp"

namespace floqsim {

/// Eigendecomposition of a Hermitian matrix: real eigenvalues in ascending
/// order, orthonormal eigenvectors as columns of `vectors`.
struct EigenDecomposition {
  std::vector<double> values;
  ComplexMatrix vectors;
};

/// Eigendecomposition of a unitary (normal) matrix: unimodular complex
/// eigenvalues sorted by phase, orthonormal eigenvectors as columns.
struct UnitaryEigenDecomposition {
  std::vector<cd> values;
  ComplexMatrix vectors;
};

/// Cyclic Jacobi diagonalization. Input must satisfy
/// |M - M^dag|_F <= 1e-9 |M|_F, otherwise NonHermitianInput is thrown.
EigenDecomposition hermitian_eig(const ComplexMatrix& m);

/// Diagonalizes a unitary matrix through the commuting Hermitian pair
/// H = (U + U^dag)/2, K = (U - U^dag)/(2i); degenerate eigenvalues of H are
/// resolved by diagonalizing K inside each cluster. Throws NonUnitaryInput
/// if |U^dag U - I|_F > 1e-8.
UnitaryEigenDecomposition unitary_eig(const ComplexMatrix& u);

/// Hermitian PSD square root. Eigenvalues in [-1e-9, 0) are clamped to
/// zero; anything below -1e-9 throws IndefiniteInput.
ComplexMatrix psd_sqrt(const ComplexMatrix& m);

/// Orthonormal basis of the numerical kernel: right singular vectors whose
/// singular value is below rel_tol times the largest one. Computed with
/// one-sided Jacobi, so small singular values are resolved accurately.
std::vector<Vector> nullspace(const ComplexMatrix& m, double rel_tol = 1e-9);

/// Singular values only, descending (one-sided Jacobi).
std::vector<double> singular_values(const ComplexMatrix& m);

/// In-place radix-2 FFT; size must be a power of two.
/// forward: X_k = sum_j x_j exp(-2 pi i j k / N)
/// inverse: x_j = (1/N) sum_k X_k exp(+2 pi i j k / N)
void fft_inplace(std::vector<cd>& a, bool inverse);

/// Matrix exponential by Pade approximation with scaling and squaring.
ComplexMatrix expm(const ComplexMatrix& a);

/// Solves A x = b by Gaussian elimination with partial pivoting.
Vector solve_linear(ComplexMatrix a, Vector b);

}  // namespace floqsim
