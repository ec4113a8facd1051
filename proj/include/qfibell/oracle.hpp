#pragma once

#include <vector>

#include "qfibell/bell.hpp"
#include "qfibell/symmetric_state.hpp"

namespace qfibell {

// Full 2^N-dimensional state, computational basis, qubit 1 most significant.
// Capped at N = 10; these representations exist only to cross-check the
// Dicke-basis code by brute force.
class FullState {
 public:
  static constexpr int kMaxParties = 10;

  static FullState pure(int n_parties, Vector amplitudes);
  static FullState mixed(int n_parties, Matrix density);

  int n_parties() const { return n_; }
  Eigen::Index dim() const { return Eigen::Index(1) << n_; }
  bool is_pure() const { return pure_; }

  const Vector& amplitudes() const;
  const Matrix& density() const;
  Matrix density_matrix() const;

  double expectation(const Matrix& op) const;

 private:
  FullState(int n, Vector a) : n_(n), pure_(true), amp_(std::move(a)) {}
  FullState(int n, Matrix r) : n_(n), pure_(false), rho_(std::move(r)) {}

  int n_;
  bool pure_;
  Vector amp_;
  Matrix rho_;
};

// Dicke state k maps to the normalized uniform superposition of all
// Hamming-weight-k bitstrings.
FullState embed_symmetric(const SymmetricState& state);

// Projection back onto the symmetric subspace; inverse of embed_symmetric
// for symmetric inputs.
SymmetricState project_symmetric(const FullState& state);

// (1/2) sum_i sigma_axis^(i) as a dense 2^N matrix, axis in {'x','y','z'}.
Matrix full_collective(int n_parties, char axis);

// Literal evaluation of the symmetrized correlators as sums over ordered
// tuples of distinct sites, k in {1, 2}.
Correlators correlators_bruteforce(const FullState& state,
                                   const MeasurementSettings& settings);

// Symmetric two-body Bell expression
//   sum_k alpha_k C_k + w sum_{k,l} C_{kl} + constant
// evaluated on local deterministic strategies.
struct LhvCoefficients {
  std::vector<double> one_body;  // alpha_k, one per setting
  double two_body_weight = 0.5;
  double constant = 0.0;
};

LhvCoefficients two_settings_coefficients(int n_parties);
LhvCoefficients multi_settings_coefficients(int n_parties, int m);

// Deterministic local strategy for a symmetric inequality: parties are
// interchangeable, so only the multiplicity of each of the 2^m outcome
// assignments matters. counts[s] with bit k of s giving the outcome of
// setting k (0 -> +1, 1 -> -1); sums to N.
struct DeterministicStrategy {
  std::vector<long long> counts;
};

double lhv_value(const LhvCoefficients& coeffs,
                 const DeterministicStrategy& strategy);

struct LhvBound {
  double min_value = 0.0;
  DeterministicStrategy argmin;
  long long n_classes = 0;
};

// Exhaustive minimum over strategy multisets, C(N + 2^m - 1, 2^m - 1)
// classes; throws when that count exceeds 10^7. Ties resolve to the first
// strategy in lexicographic enumeration order.
LhvBound lhv_bound_symmetric(int n_parties, const LhvCoefficients& coeffs);

// Naive per-party enumeration over 2^(mN) assignments, for validating the
// multiset reduction at small sizes.
double lhv_bound_naive(int n_parties, const LhvCoefficients& coeffs);

struct MerminOperator {
  int n_parties = 0;
  Matrix matrix;               // (E - E^dag)/(2i), E = prod_i (sx_i + i sy_i)
  double normalization = 0.0;  // scale making the GHZ-subspace block equal W
  double branch_phase = 0.0;   // phase absorbed into |1...1> for the fit
};

MerminOperator mermin_operator(int n_parties);

// normalization * V matrix V^dag with V the branch-phase rotation; equals
// N(|GHZ><GHZ| - |GHZ_perp><GHZ_perp|) in the full space.
Matrix mermin_normalized(const MerminOperator& op);

// Maximum of the Mermin expression Im prod_j (a_j + i b_j) over all 2^(2N)
// deterministic assignments a_j, b_j = +-1. Capped at N = 8.
double mermin_lhv_max(int n_parties);

struct PptReport {
  double negative_eigenvalue = 0.0;  // smallest eigenvalue of rho^{T_B}
  bool entangled = false;            // negative_eigenvalue < -1e-10
};

// Partial transpose across qubits (1..cut | cut+1..N); transpose acts on
// the second factor.
PptReport ppt_bipartite_check(const FullState& state, int cut);

// Footnote formula in the full space; pure states via 4 Var (N <= 10),
// mixed states via the spectral decomposition (N <= 8).
double qfi_exact_full(const FullState& state, const Matrix& a_full);

}  // namespace qfibell
