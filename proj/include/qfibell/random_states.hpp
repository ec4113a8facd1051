#pragma once

#include <random>

#include "qfibell/symmetric_state.hpp"

namespace qfibell {

using Rng = std::mt19937_64;

// Haar-like random pure state in the symmetric subspace (normalized complex
// Gaussian amplitudes).
SymmetricState random_pure_symmetric(int n_parties, Rng& rng);

// Random full-rank density matrix G G^dag / tr(G G^dag), G complex Gaussian.
SymmetricState random_mixed_symmetric(int n_parties, Rng& rng);

// Random Hermitian matrix (G + G^dag)/2 with Gaussian entries.
Matrix random_hermitian(int dim, Rng& rng);

}  // namespace qfibell
