#include "fixhorn/horn/solve.hpp"

namespace fixhorn {

std::vector<std::size_t> violated_clauses(Evaluator& ev, const ClauseSet& set,
                                          const std::vector<RelationTable>& relations) {
    if (relations.size() != set.vars.size()) {
        throw std::invalid_argument("one relation per predicate variable expected");
    }
    RelationEnv env;
    for (std::size_t j = 0; j < set.vars.size(); ++j) {
        env.insert_or_assign(set.vars[j].name, relations[j]);
    }
    std::vector<std::size_t> bad;
    for (std::size_t i = 0; i < set.clauses.size(); ++i) {
        if (!ev.eval(set.clauses[i].formula(), {}, env)) {
            bad.push_back(i);
        }
    }
    return bad;
}

namespace {

PredicateSubstitution solution_substitution(const std::vector<PredicateVariable>& vars,
                                            const std::shared_ptr<const FixpointSystem>& phi,
                                            bool complement) {
    PredicateSubstitution sigma;
    for (const auto& v : vars) {
        std::size_t j = phi->index_of(v.name).value();
        const auto& params = phi->component(j).params;
        std::vector<Term> args;
        for (const auto& p : params) {
            args.push_back(Term::var(p));
        }
        Formula atom = Formula::lfp(phi, j, std::move(args));
        sigma.emplace(v.name, Lambda{params, complement ? Formula::negate(atom) : atom});
    }
    return sigma;
}

// Checks psi[X \ solution] clause by clause on the literal substituted formulas.
std::vector<std::size_t> check_substituted(Evaluator& ev, const ClauseSet& set,
                                           const PredicateSubstitution& sigma) {
    std::vector<std::size_t> bad;
    for (std::size_t i = 0; i < set.clauses.size(); ++i) {
        if (!ev.eval(substitute(set.clauses[i].formula(), sigma))) {
            bad.push_back(i);
        }
    }
    return bad;
}

} // namespace

Formula substitute_solution(const ClauseSet& set, const std::shared_ptr<const FixpointSystem>& phi,
                            bool complement) {
    return substitute(set.formula(), solution_substitution(set.vars, phi, complement));
}

SolutionReport solve_min(Evaluator& ev, const HornSystem& system) {
    SolutionReport r;
    r.vars = system.vars();
    r.system = build_phi(system);
    LfpResult lfp = ev.lfp(*r.system);
    r.relations = std::move(lfp.relations);
    r.iterations = lfp.iterations;
    r.violated = check_substituted(ev, system.clause_set(),
                                   solution_substitution(r.vars, r.system, false));
    return r;
}

SolutionReport solve_min(const FiniteStructure& m, const HornSystem& system) {
    Evaluator ev(m);
    return solve_min(ev, system);
}

SolutionReport solve_max(Evaluator& ev, const ClauseSet& dual_horn) {
    if (!dual_horn.is_dual_horn()) {
        throw NotHornError("solve_max needs a dual Horn clause set");
    }
    SolutionReport r;
    r.vars = dual_horn.vars;
    r.complemented = true;
    r.system = build_phi(classify(dualize(dual_horn)));
    LfpResult lfp = ev.lfp(*r.system);
    for (auto& rel : lfp.relations) {
        r.relations.push_back(rel.complement(ev.structure().size()));
    }
    r.iterations = lfp.iterations;
    r.violated = check_substituted(ev, dual_horn, solution_substitution(r.vars, r.system, true));
    return r;
}

SolutionReport solve_max(const FiniteStructure& m, const ClauseSet& dual_horn) {
    Evaluator ev(m);
    return solve_max(ev, dual_horn);
}

} // namespace fixhorn
