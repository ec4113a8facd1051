#pragma once

#include <Eigen/Dense>
#include <complex>
#include <functional>

namespace qfibell {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using RealMatrix = Eigen::MatrixXd;

// Eigensystem of a Hermitian matrix. Eigenvalues ascending, eigenvectors
// stored as columns. No ordering guarantee within degenerate clusters;
// consumers must stick to gauge-invariant quantities.
struct SpectralDecomposition {
  RealVector eigenvalues;
  Matrix eigenvectors;

  Matrix reconstruct() const;
};

double max_abs(const Matrix& m);
bool is_hermitian(const Matrix& m, double tol = 1e-12);

// Dense Hermitian eigendecomposition. Rejects input whose anti-Hermitian
// part exceeds `herm_tol` elementwise.
SpectralDecomposition spectral(const Matrix& m, double herm_tol = 1e-10);

// Principal square root of a positive semidefinite Hermitian matrix.
// Eigenvalues in [-1e-10, 0) are clamped to zero; anything below is rejected.
Matrix matrix_sqrt_psd(const Matrix& m);

Matrix commutator(const Matrix& a, const Matrix& b);

// Largest |eigenvalue| of a Hermitian matrix.
double sup_norm_hermitian(const Matrix& m);

// Coarse scan over [lo, hi] followed by golden-section refinement inside the
// bracketing cell. f must be continuous; returns the located argmin.
double minimize_on_interval(const std::function<double(double)>& f, double lo,
                            double hi, int coarse_points = 64,
                            double tol = 1e-10);

}  // namespace qfibell
