#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "fixhorn/horn/phi.hpp"
#include "fixhorn/logic/substitution.hpp"
#include "fixhorn/model/evaluator.hpp"

namespace fixhorn {

struct SolutionReport {
    std::vector<PredicateVariable> vars;
    // mu_j for solve_min, nu_j for solve_max.
    std::vector<RelationTable> relations;
    // The system whose lfp was computed; for solve_max this is Phi of the dual
    // and `relations` are the complements of its lfp.
    std::shared_ptr<const FixpointSystem> system;
    bool complemented = false;
    // Indices into the solved clause list of clauses false under `relations`.
    std::vector<std::size_t> violated;
    std::size_t iterations = 0;

    bool satisfies_all() const { return violated.empty(); }
};

// mu = lfp(Phi_psi); every clause of psi is checked on psi[X\mu].
SolutionReport solve_min(const FiniteStructure& m, const HornSystem& system);
SolutionReport solve_min(Evaluator& ev, const HornSystem& system);

// nu_j = complement of lfp(Phi_{psi^D})_j for a dual Horn clause set.
SolutionReport solve_max(const FiniteStructure& m, const ClauseSet& dual_horn);
SolutionReport solve_max(Evaluator& ev, const ClauseSet& dual_horn);

// Whether relations R (one per variable of `set`) satisfy every clause.
std::vector<std::size_t> violated_clauses(Evaluator& ev, const ClauseSet& set,
                                          const std::vector<RelationTable>& relations);

// psi[X_j \ lfp_{X_j} Phi] (or its negation when `complement`), as a closed formula.
Formula substitute_solution(const ClauseSet& set, const std::shared_ptr<const FixpointSystem>& phi,
                            bool complement);

enum class InterpolantVerdict { Inside, BelowMu, AboveNu };

std::string to_string(InterpolantVerdict v);

struct InterpolantReport {
    InterpolantVerdict verdict = InterpolantVerdict::Inside;
    // First variable whose inclusion fails, if any.
    std::string variable;
    bool chi_solves = false;
    // Lint only: the candidates contain no lfp atom.
    bool fixpoint_free = true;
    std::vector<RelationTable> mu;
    std::vector<RelationTable> nu;
    std::vector<RelationTable> chi;
};

// Compares [chi_j] with mu_j and nu_j extensionally on the structure. Throws
// std::invalid_argument when the system is not linear or chi is ill-shaped.
InterpolantReport check_interpolant(const FiniteStructure& m, const HornSystem& system,
                                    const std::vector<Lambda>& chi);

} // namespace fixhorn
