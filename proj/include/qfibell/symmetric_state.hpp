#pragma once

#include <string>

#include "qfibell/linalg.hpp"

namespace qfibell {

// Permutation-symmetric N-qubit state in the Dicke basis |j = N/2, m>.
// Index k holds m = N/2 - k, so k = 0 is |0...0> and k = N is |1...1>.
// Pure states carry an amplitude vector of length N+1, mixed states an
// (N+1)x(N+1) density matrix. Instances are immutable after construction
// and safe to share across threads.
//
// Non-symmetric states are out of scope here; the full 2^N representation
// used for cross-checks lives in oracle.hpp.
class SymmetricState {
 public:
  // Throws std::invalid_argument unless the amplitudes are normalized
  // within 1e-12.
  static SymmetricState pure(int n_parties, Vector amplitudes);

  // Throws unless the matrix is Hermitian within 1e-12, has unit trace
  // within 1e-12 and eigenvalues >= -1e-10.
  static SymmetricState mixed(int n_parties, Matrix density);

  int n_parties() const { return n_; }
  int dim() const { return n_ + 1; }
  bool is_pure() const { return pure_; }

  const Vector& amplitudes() const;  // pure states only
  const Matrix& density() const;     // mixed states only
  Matrix density_matrix() const;     // rank-1 projector for pure states

  // <op> for Hermitian op; real part is returned.
  double expectation(const Matrix& op) const;
  Complex expectation_c(const Matrix& op) const;

 private:
  SymmetricState(int n, Vector a) : n_(n), pure_(true), amp_(std::move(a)) {}
  SymmetricState(int n, Matrix r) : n_(n), pure_(false), rho_(std::move(r)) {}

  int n_;
  bool pure_;
  Vector amp_;
  Matrix rho_;
};

// Hermitian operator acting on the Dicke space of n qubits.
struct CollectiveOperator {
  int n_parties = 0;
  Matrix matrix;
  std::string label;

  // Throws unless m is Hermitian within 1e-12.
  static CollectiveOperator custom(int n_parties, Matrix m, std::string label);
};

// Collective spin components S_a = (1/2) sum_i sigma_a^(i) in the j = N/2
// representation, built from the angular-momentum ladder matrix elements.
// The per-party normalization is spin 1/2, i.e. ||A^(i)||_inf = 1/2.
// S_z is diagonal with entries N/2, N/2-1, ..., -N/2 and the set satisfies
// the SU(2) commutation relations, e.g. i[S_z, S_y] = S_x.
CollectiveOperator collective_sx(int n_parties);
CollectiveOperator collective_sy(int n_parties);
CollectiveOperator collective_sz(int n_parties);

}  // namespace qfibell
