#pragma once

#include <cstddef>
#include <vector>

#include "fixhorn/affine/affine_horn.hpp"

namespace fixhorn {

// One subspace per predicate variable.
using AbstractValue = std::vector<AffineSubspace>;

AbstractValue abstract_bottom(const AffineHornSystem& system);

// Set of clause-variable valuations satisfying the constraint and every body
// atom under `value`, as a subspace of Q^|variables|.
AffineSubspace clause_premise(const AffineClause& clause, const AbstractValue& value);

// alpha . F . gamma, computed by meet, image and join.
AbstractValue abstract_apply_F(const AffineHornSystem& system, const AbstractValue& value);

struct AbstractLfpResult {
    AbstractValue value;
    // stages[0] is bottom, stages.back() == value
    std::vector<AbstractValue> stages;
    // per component: number of strict increases along the iteration
    std::vector<std::size_t> strict_steps;
    // index of the first stage equal to the fixed point
    std::size_t iterations = 0;
    // sum over components of arity + 2
    std::size_t bound = 0;

    std::vector<std::vector<int>> dimensions() const;
};

// Kleene iteration from bottom. Throws std::logic_error if it runs past the
// chain-length bound, which cannot happen for a correct join.
AbstractLfpResult abstract_lfp(const AffineHornSystem& system);

struct AbstractViolation {
    std::size_t clause = 0;  // index into system.clauses
    AffineSubspace witness;  // nonempty premise over the clause variables
};

struct AbstractEndReport {
    std::vector<AbstractViolation> violations;
    bool satisfied() const { return violations.empty(); }
};

// An end clause holds under gamma(value) iff its premise subspace is EMPTY.
AbstractEndReport check_end_clauses_abstract(const AffineHornSystem& system, const AbstractValue& value);

} // namespace fixhorn
