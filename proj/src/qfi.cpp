#include "qfibell/qfi.hpp"

#include <cmath>
#include <stdexcept>

#include "qfibell/fidelity.hpp"
#include "qfibell/states.hpp"

namespace qfibell {

namespace {

void check_dims(const SymmetricState& rho, const CollectiveOperator& op) {
  if (op.n_parties != rho.n_parties())
    throw std::invalid_argument("qfi: operator/state dimension mismatch");
}

Matrix centered(const SymmetricState& rho, const CollectiveOperator& b) {
  const double mean = rho.expectation(b.matrix);
  return b.matrix - mean * Matrix::Identity(b.matrix.rows(), b.matrix.cols());
}

double commutator_mean(const SymmetricState& rho, const Matrix& a,
                       const Matrix& b) {
  return rho.expectation_c(Complex(0, 1) * commutator(a, b)).real();
}

}  // namespace

QfiReport qfi_exact(const SymmetricState& rho, const CollectiveOperator& a) {
  check_dims(rho, a);
  SpectralDecomposition eig = spectral(rho.density_matrix());
  Matrix a_eig = eig.eigenvectors.adjoint() * a.matrix * eig.eigenvectors;
  const Eigen::Index d = eig.eigenvalues.size();
  double f = 0.0;
  for (Eigen::Index k = 0; k < d; ++k) {
    const double pk = std::max(eig.eigenvalues(k), 0.0);
    for (Eigen::Index l = 0; l < d; ++l) {
      const double pl = std::max(eig.eigenvalues(l), 0.0);
      if (pk + pl <= 1e-12) continue;  // 0/0 removal for rank-deficient rho
      const double diff = pk - pl;
      f += 2.0 * diff * diff / (pk + pl) * std::norm(a_eig(k, l));
    }
  }
  const int n = rho.n_parties();
  return {f, a.label, n, f / n, f / (static_cast<double>(n) * n)};
}

double variance(const SymmetricState& rho, const CollectiveOperator& a) {
  check_dims(rho, a);
  const double e2 = rho.expectation(a.matrix * a.matrix);
  const double e1 = rho.expectation(a.matrix);
  return std::max(0.0, e2 - e1 * e1);
}

BoundReport qfi_bound_uncertainty(const SymmetricState& rho,
                                  const CollectiveOperator& a,
                                  const CollectiveOperator& b) {
  check_dims(rho, a);
  check_dims(rho, b);
  Matrix bc = centered(rho, b);
  const double var = std::max(0.0, rho.expectation(bc * bc));
  if (var <= 1e-14)
    throw std::invalid_argument("qfi_bound_uncertainty: degenerate B");
  const double comm = commutator_mean(rho, a.matrix, b.matrix);
  const double bound = comm * comm / var;
  const double qfi = qfi_exact(rho, a).qfi;
  const bool tight = qfi - bound <= 1e-6 * (1.0 + qfi);
  return {bound, comm, var, sup_norm_hermitian(bc), tight};
}

BoundReport qfi_bound_linear(const SymmetricState& rho,
                             const CollectiveOperator& a,
                             const CollectiveOperator& b) {
  check_dims(rho, a);
  check_dims(rho, b);
  Matrix bc = centered(rho, b);
  const double norm = sup_norm_hermitian(bc);
  if (norm <= 1e-14)
    throw std::invalid_argument("qfi_bound_linear: zero operator B");
  const double comm = commutator_mean(rho, a.matrix, b.matrix);
  const double var = std::max(0.0, rho.expectation(bc * bc));
  const double bound = std::abs(comm) / norm;
  const double qfi = qfi_exact(rho, a).qfi;
  const bool tight = qfi - bound * bound <= 1e-6 * (1.0 + qfi);
  return {bound, comm, var, norm, tight};
}

Matrix linear_witness_operator(const CollectiveOperator& a,
                               const CollectiveOperator& b) {
  const double norm = sup_norm_hermitian(b.matrix);
  if (norm <= 1e-14)
    throw std::invalid_argument("linear_witness_operator: zero operator B");
  return Complex(0, 1) * commutator(a.matrix, b.matrix) / norm;
}

CollectiveOperator optimal_b(const SymmetricState& psi,
                             const CollectiveOperator& a) {
  check_dims(psi, a);
  if (!psi.is_pure())
    throw std::invalid_argument("optimal_b: requires a pure state");
  Matrix proj = psi.density_matrix();
  Matrix b = Complex(0, -1) * commutator(a.matrix, proj);
  return CollectiveOperator::custom(psi.n_parties(), std::move(b),
                                    "-i[" + a.label + ",psi]");
}

double entanglement_witness_value(const SymmetricState& rho,
                                  const CollectiveOperator& a,
                                  const CollectiveOperator& b) {
  return std::sqrt(static_cast<double>(rho.n_parties())) -
         qfi_bound_linear(rho, a, b).bound_value;
}

BuresRateReport bures_rate_check(const SymmetricState& rho,
                                 const CollectiveOperator& a, double dt) {
  if (dt < 1e-6 || dt > 1e-2)
    throw std::invalid_argument("bures_rate_check: dt outside [1e-6, 1e-2]");
  SymmetricState back = evolve(rho, a, -dt);
  SymmetricState fwd = evolve(rho, a, dt);
  const double lhs = bures_distance(back, fwd) / (2.0 * dt);
  const double rhs = 0.5 * std::sqrt(qfi_exact(rho, a).qfi);
  const double rel =
      std::abs(rhs) > 1e-9 ? std::abs(lhs - rhs) / rhs : std::abs(lhs - rhs);
  return {lhs, rhs, rel};
}

}  // namespace qfibell
