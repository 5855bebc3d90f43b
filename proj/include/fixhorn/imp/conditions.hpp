#pragma once

#include <cstddef>
#include <vector>

#include "fixhorn/horn/solve.hpp"
#include "fixhorn/imp/run.hpp"
#include "fixhorn/imp/vcgen.hpp"

namespace fixhorn {

// A set of states as a relation of arity |vars|.
struct StateSet {
    RelationTable states;
    // False when some enumerated run exhausted its fuel.
    bool complete = true;
};

// [phi]: states satisfying a predicate-free formula over the program variables.
RelationTable state_set(const FiniteStructure& m, const Program& p, const Formula& phi);

// Brute force over all states. sp collects final states of terminating runs from
// [phi]; wp (liberal) collects states whose run diverges or ends in [psi]. Runs
// that exhaust fuel are left out of sp, counted into wp, and clear `complete`.
StateSet sp_oracle(const FiniteStructure& m, const Program& p, const Formula& phi,
                   std::size_t fuel);
StateSet wp_oracle(const FiniteStructure& m, const Program& p, const Formula& psi,
                   std::size_t fuel);

// mu_{X0} of vc({phi} p {X0(x)}).
RelationTable sp_lfp(const FiniteStructure& m, const Program& p, const Formula& phi);
// nu_{X0} of vc({X0(x)} p {psi}), through the dual system.
RelationTable wp_dual(const FiniteStructure& m, const Program& p, const Formula& psi);

struct HoareVerdict {
    bool provable = false;
    VcResult vc;
    SolutionReport solution;
    // mu of each loop invariant, parallel to vc.invariants.
    std::vector<RelationTable> invariants;
};

// Provable iff the structure satisfies vc(T), decided on the minimal solution.
HoareVerdict check_hoare(const FiniteStructure& m, const HoareTriple& triple);

} // namespace fixhorn
