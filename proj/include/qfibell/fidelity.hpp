#pragma once

#include "qfibell/symmetric_state.hpp"

namespace qfibell {

// Uhlmann fidelity F = (Tr sqrt(sqrt(rho) sigma sqrt(rho)))^2, clamped to
// [0, 1]. Symmetric in its arguments.
double fidelity(const SymmetricState& rho, const SymmetricState& sigma);

// Bures distance sqrt(2 - 2 sqrt(F)).
double bures_distance(const SymmetricState& rho, const SymmetricState& sigma);

}  // namespace qfibell
