#pragma once

#include <cstddef>
#include <vector>

#include "fixhorn/horn/clause.hpp"

namespace fixhorn {

// A Horn clause set with base/induction clauses indexed per head variable.
class HornSystem {
public:
    const std::vector<PredicateVariable>& vars() const { return vars_; }
    const std::vector<Clause>& clauses() const { return clauses_; }
    // Clause indices, per predicate variable position.
    const std::vector<std::size_t>& base(std::size_t j) const { return base_.at(j); }
    const std::vector<std::size_t>& induction(std::size_t j) const { return induction_.at(j); }
    const std::vector<std::size_t>& end() const { return end_; }
    std::size_t var_index(const std::string& name) const;

    ClauseSet clause_set() const { return {vars_, clauses_}; }

    friend HornSystem classify(ClauseSet set);

private:
    std::vector<PredicateVariable> vars_;
    std::vector<Clause> clauses_;
    std::vector<std::vector<std::size_t>> base_;
    std::vector<std::vector<std::size_t>> induction_;
    std::vector<std::size_t> end_;
};

// Tags every clause B/I/E. Throws NotHornError on a disjunctive head and
// std::invalid_argument when an atom uses an undeclared predicate variable.
HornSystem classify(ClauseSet set);
HornSystem classify(const std::vector<Formula>& formulas, std::vector<PredicateVariable> vars,
                    const NormalizeOptions& options = {});

// psi^D renormalized: phi /\ B -> H becomes phi /\ H -> B. Horn input gives dual
// Horn output and vice versa. Throws NotHornError when the input is neither.
ClauseSet dualize(const ClauseSet& set);
ClauseSet dualize(const HornSystem& system);

} // namespace fixhorn
