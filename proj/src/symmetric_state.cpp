#include "qfibell/symmetric_state.hpp"

#include <cmath>
#include <stdexcept>

namespace qfibell {

namespace {
constexpr double kNormTol = 1e-12;
constexpr double kHermTol = 1e-12;
constexpr double kEigFloor = -1e-10;
}  // namespace

SymmetricState SymmetricState::pure(int n_parties, Vector amplitudes) {
  if (n_parties < 1)
    throw std::invalid_argument("SymmetricState: n_parties must be >= 1");
  if (amplitudes.size() != n_parties + 1)
    throw std::invalid_argument(
        "SymmetricState: amplitude vector must have length N+1");
  if (std::abs(amplitudes.squaredNorm() - 1.0) > kNormTol)
    throw std::invalid_argument("SymmetricState: amplitudes not normalized");
  return SymmetricState(n_parties, std::move(amplitudes));
}

SymmetricState SymmetricState::mixed(int n_parties, Matrix density) {
  if (n_parties < 1)
    throw std::invalid_argument("SymmetricState: n_parties must be >= 1");
  if (density.rows() != n_parties + 1 || density.cols() != n_parties + 1)
    throw std::invalid_argument(
        "SymmetricState: density matrix must be (N+1)x(N+1)");
  if (!is_hermitian(density, kHermTol))
    throw std::invalid_argument("SymmetricState: density not Hermitian");
  if (std::abs(density.trace().real() - 1.0) > kNormTol ||
      std::abs(density.trace().imag()) > kNormTol)
    throw std::invalid_argument("SymmetricState: density trace != 1");
  Eigen::SelfAdjointEigenSolver<Matrix> solver(density,
                                               Eigen::EigenvaluesOnly);
  if (solver.eigenvalues().minCoeff() < kEigFloor)
    throw std::invalid_argument(
        "SymmetricState: density has a negative eigenvalue");
  return SymmetricState(n_parties, std::move(density));
}

const Vector& SymmetricState::amplitudes() const {
  if (!pure_)
    throw std::logic_error("SymmetricState: amplitudes() on a mixed state");
  return amp_;
}

const Matrix& SymmetricState::density() const {
  if (pure_)
    throw std::logic_error("SymmetricState: density() on a pure state");
  return rho_;
}

Matrix SymmetricState::density_matrix() const {
  if (pure_) return amp_ * amp_.adjoint();
  return rho_;
}

Complex SymmetricState::expectation_c(const Matrix& op) const {
  if (op.rows() != dim() || op.cols() != dim())
    throw std::invalid_argument("expectation: operator dimension mismatch");
  if (pure_) return amp_.dot(op * amp_);  // dot conjugates the left argument
  return (rho_ * op).trace();
}

double SymmetricState::expectation(const Matrix& op) const {
  return expectation_c(op).real();
}

CollectiveOperator CollectiveOperator::custom(int n_parties, Matrix m,
                                              std::string label) {
  if (n_parties < 1)
    throw std::invalid_argument("CollectiveOperator: n_parties must be >= 1");
  if (m.rows() != n_parties + 1 || m.cols() != n_parties + 1)
    throw std::invalid_argument("CollectiveOperator: matrix must be (N+1)^2");
  if (!is_hermitian(m, kHermTol))
    throw std::invalid_argument("CollectiveOperator: matrix not Hermitian");
  return {n_parties, std::move(m), std::move(label)};
}

namespace {

// S_+ in the j = N/2 representation: <m+1|S_+|m> = sqrt(j(j+1) - m(m+1)).
Matrix ladder_plus(int n) {
  const double j = n / 2.0;
  Matrix sp = Matrix::Zero(n + 1, n + 1);
  for (int k = 1; k <= n; ++k) {
    const double m = j - k;
    sp(k - 1, k) = std::sqrt(j * (j + 1) - m * (m + 1));
  }
  return sp;
}

void require_positive(int n) {
  if (n < 1)
    throw std::invalid_argument("collective operator: n_parties must be >= 1");
}

}  // namespace

CollectiveOperator collective_sx(int n_parties) {
  require_positive(n_parties);
  Matrix sp = ladder_plus(n_parties);
  return {n_parties, 0.5 * (sp + Matrix(sp.adjoint())), "Sx"};
}

CollectiveOperator collective_sy(int n_parties) {
  require_positive(n_parties);
  Matrix sp = ladder_plus(n_parties);
  return {n_parties, Complex(0, -0.5) * (sp - Matrix(sp.adjoint())), "Sy"};
}

CollectiveOperator collective_sz(int n_parties) {
  require_positive(n_parties);
  const double j = n_parties / 2.0;
  Matrix sz = Matrix::Zero(n_parties + 1, n_parties + 1);
  for (int k = 0; k <= n_parties; ++k) sz(k, k) = j - k;
  return {n_parties, std::move(sz), "Sz"};
}

}  // namespace qfibell
