#include "fixhorn/horn/solve.hpp"

#include <stdexcept>

namespace fixhorn {

std::string to_string(InterpolantVerdict v) {
    switch (v) {
    case InterpolantVerdict::Inside:
        return "inside";
    case InterpolantVerdict::BelowMu:
        return "below-mu-violation";
    case InterpolantVerdict::AboveNu:
        return "above-nu-violation";
    }
    return "?";
}

InterpolantReport check_interpolant(const FiniteStructure& m, const HornSystem& system,
                                    const std::vector<Lambda>& chi) {
    ClauseSet set = system.clause_set();
    if (!is_linear(set)) {
        throw std::invalid_argument("interpolant check needs a linear Horn system");
    }
    if (chi.size() != set.vars.size()) {
        throw std::invalid_argument("one candidate per predicate variable expected");
    }
    Evaluator ev(m);
    InterpolantReport r;
    r.mu = solve_min(ev, system).relations;
    r.nu = solve_max(ev, set).relations;
    for (std::size_t j = 0; j < chi.size(); ++j) {
        if (chi[j].params.size() != set.vars[j].arity) {
            throw std::invalid_argument("candidate for " + set.vars[j].name + " has wrong arity");
        }
        if (has_fixpoints(chi[j].body)) {
            r.fixpoint_free = false;
        }
        r.chi.push_back(ev.extension(chi[j].params, chi[j].body));
    }
    r.chi_solves = violated_clauses(ev, set, r.chi).empty();
    for (std::size_t j = 0; j < chi.size(); ++j) {
        if (!r.mu[j].subset_of(r.chi[j])) {
            r.verdict = InterpolantVerdict::BelowMu;
            r.variable = set.vars[j].name;
            return r;
        }
    }
    for (std::size_t j = 0; j < chi.size(); ++j) {
        if (!r.chi[j].subset_of(r.nu[j])) {
            r.verdict = InterpolantVerdict::AboveNu;
            r.variable = set.vars[j].name;
            return r;
        }
    }
    return r;
}

} // namespace fixhorn
