#pragma once

#include "qfibell/symmetric_state.hpp"

namespace qfibell {

// (|0...0> + |1...1>)/sqrt(2). Requires n >= 2.
SymmetricState state_ghz(int n_parties);

// (|0...0> - |1...1>)/sqrt(2). Requires n >= 2.
SymmetricState state_ghz_perp(int n_parties);

// Coherent spin state (cos(theta/2)|0> + e^{i phi} sin(theta/2)|1>)^{⊗N}
// expanded in the Dicke basis. theta = pi/2, phi = 0 points along +x.
SymmetricState state_css(int n_parties, double theta, double phi);

// One-axis twisted state: exp(-i mu Sz^2) applied to the +x coherent state,
// then rotated about x into the frame minimizing <Sy^2> (squeezing along y)
// with the mean spin fixed to +x. Global phase is fixed by making the
// largest-magnitude amplitude real positive.
SymmetricState state_oat(int n_parties, double mu);

// Two-axis countertwisted state: exp(-i chi G) on the +x coherent state with
// G = Sy Sz + Sz Sy, the countertwisting generator whose ladder operators are
// taken about the mean-spin axis +x. Same frame and phase conventions as
// state_oat.
SymmetricState state_tat(int n_parties, double chi);

// (1+p)/2 |GHZ><GHZ| + (1-p)/2 |GHZ_perp><GHZ_perp|, p in [0, 1].
SymmetricState state_ghz_mixture(int n_parties, double p);

// exp(-i A t) rho exp(i A t) via the spectral decomposition of A.
SymmetricState evolve(const SymmetricState& state,
                      const CollectiveOperator& generator, double t);

// Rotation angle nu in [0, pi) about x minimizing <Sy^2> of the rotated
// state (golden-section search, tolerance 1e-10).
double optimal_squeezing_frame_angle(const SymmetricState& state);

}  // namespace qfibell
