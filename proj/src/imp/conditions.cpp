#include "fixhorn/imp/conditions.hpp"

#include <algorithm>

namespace fixhorn {

RelationTable state_set(const FiniteStructure& m, const Program& p, const Formula& phi) {
    Evaluator ev(m);
    return ev.extension(p.vars, phi);
}

namespace {

template <class Visit>
void for_each_state(const FiniteStructure& m, std::size_t k, Visit&& visit) {
    std::size_t count = tuple_count(k, m.size());
    for (std::size_t r = 0; r < count; ++r) {
        visit(tuple_at(r, k, m.size()));
    }
}

Formula query_atom(const Program& p) {
    std::vector<Term> args;
    for (const auto& v : p.vars) {
        args.push_back(Term::var(v));
    }
    return Formula::atom({"X0", p.vars.size()}, std::move(args));
}

} // namespace

StateSet sp_oracle(const FiniteStructure& m, const Program& p, const Formula& phi,
                   std::size_t fuel) {
    Evaluator ev(m);
    StateSet out{RelationTable(p.vars.size()), true};
    for_each_state(m, p.vars.size(), [&](const State& s) {
        if (!eval_guard(ev, p.vars, phi, s)) {
            return;
        }
        RunOutcome r = run(m, p, s, fuel);
        if (r.status == RunStatus::Terminated) {
            out.states.insert(r.state);
        } else if (r.status == RunStatus::OutOfFuel) {
            out.complete = false;
        }
    });
    return out;
}

StateSet wp_oracle(const FiniteStructure& m, const Program& p, const Formula& psi,
                   std::size_t fuel) {
    Evaluator ev(m);
    StateSet out{RelationTable(p.vars.size()), true};
    for_each_state(m, p.vars.size(), [&](const State& s) {
        RunOutcome r = run(m, p, s, fuel);
        if (r.status == RunStatus::OutOfFuel) {
            out.complete = false;
        }
        if (r.status != RunStatus::Terminated || eval_guard(ev, p.vars, psi, r.state)) {
            out.states.insert(s);
        }
    });
    return out;
}

RelationTable sp_lfp(const FiniteStructure& m, const Program& p, const Formula& phi) {
    VcResult vc = vcgen({phi, p, query_atom(p)});
    return solve_min(m, vc.system).relations.front();
}

RelationTable wp_dual(const FiniteStructure& m, const Program& p, const Formula& psi) {
    VcResult vc = vcgen({query_atom(p), p, psi});
    return solve_max(m, vc.clauses).relations.front();
}

HoareVerdict check_hoare(const FiniteStructure& m, const HoareTriple& triple) {
    HoareVerdict v;
    v.vc = vcgen(triple);
    v.solution = solve_min(m, v.vc.system);
    v.provable = v.solution.satisfies_all();
    for (const auto& inv : v.vc.invariants) {
        auto it = std::find(v.vc.vars.begin(), v.vc.vars.end(), inv);
        v.invariants.push_back(v.solution.relations[static_cast<std::size_t>(it - v.vc.vars.begin())]);
    }
    return v;
}

} // namespace fixhorn
