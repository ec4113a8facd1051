#include "qfibell/linalg.hpp"

#include <cmath>
#include <stdexcept>

namespace qfibell {

Matrix SpectralDecomposition::reconstruct() const {
  return eigenvectors * eigenvalues.cast<Complex>().asDiagonal() *
         eigenvectors.adjoint();
}

double max_abs(const Matrix& m) {
  if (m.size() == 0) return 0.0;
  return m.cwiseAbs().maxCoeff();
}

bool is_hermitian(const Matrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  return max_abs(m - m.adjoint()) <= tol;
}

SpectralDecomposition spectral(const Matrix& m, double herm_tol) {
  if (m.rows() != m.cols())
    throw std::invalid_argument("spectral: matrix must be square");
  if (!is_hermitian(m, herm_tol))
    throw std::invalid_argument("spectral: matrix is not Hermitian");
  Eigen::SelfAdjointEigenSolver<Matrix> solver(m);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("spectral: eigensolver did not converge");
  return {solver.eigenvalues(), solver.eigenvectors()};
}

Matrix matrix_sqrt_psd(const Matrix& m) {
  SpectralDecomposition eig = spectral(m);
  RealVector vals = eig.eigenvalues;
  for (Eigen::Index i = 0; i < vals.size(); ++i) {
    if (vals[i] < -1e-10)
      throw std::invalid_argument(
          "matrix_sqrt_psd: eigenvalue below -1e-10, matrix is not PSD");
    vals[i] = vals[i] > 0.0 ? std::sqrt(vals[i]) : 0.0;
  }
  return eig.eigenvectors * vals.cast<Complex>().asDiagonal() *
         eig.eigenvectors.adjoint();
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

double sup_norm_hermitian(const Matrix& m) {
  SpectralDecomposition eig = spectral(m, 1e-9);
  return eig.eigenvalues.cwiseAbs().maxCoeff();
}

double minimize_on_interval(const std::function<double(double)>& f, double lo,
                            double hi, int coarse_points, double tol) {
  if (!(hi > lo)) throw std::invalid_argument("minimize_on_interval: hi <= lo");
  if (coarse_points < 2) coarse_points = 2;

  int best = 0;
  double fbest = f(lo);
  for (int i = 1; i <= coarse_points; ++i) {
    double x = lo + (hi - lo) * i / coarse_points;
    double fx = f(x);
    if (fx < fbest) {
      fbest = fx;
      best = i;
    }
  }
  double a = lo + (hi - lo) * std::max(best - 1, 0) / coarse_points;
  double b = lo + (hi - lo) * std::min(best + 1, coarse_points) / coarse_points;

  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c);
  double fd = f(d);
  while (b - a > tol) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  return 0.5 * (a + b);
}

}  // namespace qfibell
