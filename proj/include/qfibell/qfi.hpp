#pragma once

#include <string>

#include "qfibell/symmetric_state.hpp"

namespace qfibell {

struct QfiReport {
  double qfi = 0.0;
  std::string generator_label;
  int n_parties = 0;
  double shot_noise_ratio = 0.0;  // qfi / N; > 1 certifies entanglement
  double heisenberg_ratio = 0.0;  // qfi / N^2
};

// Exact quantum Fisher information from the spectral decomposition of rho:
//   F(rho, A) = 2 sum_{k,l} (p_k - p_l)^2 / (p_k + p_l) |<k|A|l>|^2,
// terms with p_k + p_l <= 1e-12 skipped. For pure states this equals
// 4 Var(psi, A); the identity is checked in the tests, not assumed here.
QfiReport qfi_exact(const SymmetricState& rho, const CollectiveOperator& a);

// <A^2> - <A>^2, clamped to be nonnegative.
double variance(const SymmetricState& rho, const CollectiveOperator& a);

struct BoundReport {
  double bound_value = 0.0;
  double commutator_mean = 0.0;  // <i[A,B]>
  double b_variance = 0.0;       // <B^2> - <B>^2
  double b_sup_norm = 0.0;       // ||B - <B>||_inf
  bool tight = false;            // relative gap to qfi_exact <= 1e-6
};

// Uncertainty-relation lower bound <i[A,B]>^2 / Var(B) <= F(rho, A).
// B is centered internally, so <B> != 0 inputs are accepted. Throws on
// Var(B) <= 1e-14.
BoundReport qfi_bound_uncertainty(const SymmetricState& rho,
                                  const CollectiveOperator& a,
                                  const CollectiveOperator& b);

// Linear lower bound <W> = <i[A,B]> / ||B||_inf <= sqrt(F(rho, A)), with B
// centered and the sign chosen so the value is nonnegative. Throws when the
// centered B vanishes.
BoundReport qfi_bound_linear(const SymmetricState& rho,
                             const CollectiveOperator& a,
                             const CollectiveOperator& b);

// The operator whose expectation the linear bound reports: i[A,B]/||B||_inf.
// Assumes the caller supplies a centered B (optimal_b output qualifies).
Matrix linear_witness_operator(const CollectiveOperator& a,
                               const CollectiveOperator& b);

// B = -i[A, |psi><psi|], the choice that makes the linear bound an equality
// for a pure state. Rank <= 2, ||B||_inf = std dev of A. Throws for mixed
// input; the mixed-state optimum has no constructive form here.
CollectiveOperator optimal_b(const SymmetricState& psi,
                             const CollectiveOperator& a);

// sqrt(N) - <W>; a negative value certifies entanglement since separable
// states have F <= N.
double entanglement_witness_value(const SymmetricState& rho,
                                  const CollectiveOperator& a,
                                  const CollectiveOperator& b);

struct BuresRateReport {
  double lhs = 0.0;      // s_B(rho_{-dt}, rho_{+dt}) / (2 dt)
  double rhs = 0.0;      // 0.5 sqrt(F(rho, A))
  double rel_err = 0.0;  // |lhs - rhs| / |rhs|, absolute when rhs ~ 0
};

// Finite-difference check that the Bures distance grows at rate
// 0.5 sqrt(F) per unit evolution time. dt must lie in [1e-6, 1e-2].
BuresRateReport bures_rate_check(const SymmetricState& rho,
                                 const CollectiveOperator& a, double dt);

}  // namespace qfibell
