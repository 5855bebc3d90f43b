#pragma once

#include <memory>

#include "fixhorn/horn/system.hpp"

namespace fixhorn {

// Phi_psi: for each X_j,
//   phi_j(x_j) = exists y. ( \/_{B_j} (phi /\ x_j = s)
//                          \/ \/_{I_j} (phi /\ X_i1(t_1) /\ ... /\ x_j = s) )
// with y the free variables of B_j u I_j in first-occurrence order and x_j the
// fresh parameters _arg0, _arg1, ... (renamed away from y).
std::shared_ptr<const FixpointSystem> build_phi(const HornSystem& system);

} // namespace fixhorn
