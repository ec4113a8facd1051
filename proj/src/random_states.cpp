#include "qfibell/random_states.hpp"

namespace qfibell {

namespace {

Matrix gaussian_matrix(int rows, int cols, Rng& rng) {
  std::normal_distribution<double> dist(0.0, 1.0);
  Matrix g(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) g(i, j) = Complex(dist(rng), dist(rng));
  return g;
}

}  // namespace

SymmetricState random_pure_symmetric(int n_parties, Rng& rng) {
  Vector a = gaussian_matrix(n_parties + 1, 1, rng);
  a /= a.norm();
  return SymmetricState::pure(n_parties, std::move(a));
}

SymmetricState random_mixed_symmetric(int n_parties, Rng& rng) {
  Matrix g = gaussian_matrix(n_parties + 1, n_parties + 1, rng);
  Matrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  rho = 0.5 * (rho + Matrix(rho.adjoint()));
  return SymmetricState::mixed(n_parties, std::move(rho));
}

Matrix random_hermitian(int dim, Rng& rng) {
  Matrix g = gaussian_matrix(dim, dim, rng);
  return 0.5 * (g + Matrix(g.adjoint()));
}

}  // namespace qfibell
