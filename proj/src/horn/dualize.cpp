#include "fixhorn/horn/system.hpp"

namespace fixhorn {

ClauseSet dualize(const ClauseSet& set) {
    if (!set.is_horn() && !set.is_dual_horn()) {
        throw NotHornError("dualization needs a Horn or dual Horn clause set");
    }
    ClauseSet out{set.vars, {}};
    out.clauses.reserve(set.clauses.size());
    for (const auto& c : set.clauses) {
        // phi /\ ~B1 /\ .. /\ ~Bm -> ~H1 \/ .. \/ ~Hl  ==  phi /\ H1 /\ .. /\ Hl -> B1 \/ .. \/ Bm
        Clause d = c;
        std::swap(d.body, d.head);
        out.clauses.push_back(std::move(d));
    }
    return out;
}

ClauseSet dualize(const HornSystem& system) { return dualize(system.clause_set()); }

} // namespace fixhorn
