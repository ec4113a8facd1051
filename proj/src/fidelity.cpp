#include "qfibell/fidelity.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qfibell {

double fidelity(const SymmetricState& rho, const SymmetricState& sigma) {
  if (rho.n_parties() != sigma.n_parties())
    throw std::invalid_argument("fidelity: dimension mismatch");
  Matrix r = rho.density_matrix();
  Matrix s = sigma.density_matrix();
  Matrix root = matrix_sqrt_psd(r);
  Matrix inner = root * s * root;
  inner = 0.5 * (inner + Matrix(inner.adjoint()));
  SpectralDecomposition eig = spectral(inner, 1e-9);
  double tr = 0.0;
  for (Eigen::Index i = 0; i < eig.eigenvalues.size(); ++i)
    tr += std::sqrt(std::max(eig.eigenvalues(i), 0.0));
  return std::clamp(tr * tr, 0.0, 1.0);
}

double bures_distance(const SymmetricState& rho, const SymmetricState& sigma) {
  double f = fidelity(rho, sigma);
  return std::sqrt(std::max(0.0, 2.0 - 2.0 * std::sqrt(f)));
}

}  // namespace qfibell
