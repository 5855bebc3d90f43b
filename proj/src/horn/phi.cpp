#include "fixhorn/horn/phi.hpp"

#include <algorithm>
#include <set>

#include "fixhorn/logic/substitution.hpp"

namespace fixhorn {

std::shared_ptr<const FixpointSystem> build_phi(const HornSystem& system) {
    std::vector<FixpointComponent> components;
    for (std::size_t j = 0; j < system.vars().size(); ++j) {
        const auto& var = system.vars()[j];
        std::vector<std::size_t> members = system.base(j);
        members.insert(members.end(), system.induction(j).begin(), system.induction(j).end());

        std::vector<std::string> ys;
        for (auto i : members) {
            for (const auto& v : system.clauses()[i].variables) {
                if (std::find(ys.begin(), ys.end(), v) == ys.end()) {
                    ys.push_back(v);
                }
            }
        }
        std::set<std::string> taken(ys.begin(), ys.end());
        std::vector<std::string> params;
        for (std::size_t k = 0; k < var.arity; ++k) {
            params.push_back(fresh_name("_arg" + std::to_string(k), taken));
            taken.insert(params.back());
        }

        std::vector<Formula> disjuncts;
        for (auto i : members) {
            const Clause& c = system.clauses()[i];
            std::vector<Formula> parts{c.constraint};
            for (const auto& a : c.body) {
                parts.push_back(a.formula());
            }
            const auto& s = c.head.front().args;
            for (std::size_t k = 0; k < var.arity; ++k) {
                parts.push_back(Formula::equal(Term::var(params[k]), s[k]));
            }
            disjuncts.push_back(conjoin(parts));
        }
        Formula body = disjoin(disjuncts);
        if (!body.is(FormulaKind::False)) {
            body = Formula::exists(ys, body);
        }
        components.push_back({var, std::move(params), std::move(body)});
    }
    // The constructor rejects non-positive occurrences.
    return std::make_shared<const FixpointSystem>(std::move(components));
}

} // namespace fixhorn
