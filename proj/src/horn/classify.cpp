#include "fixhorn/horn/system.hpp"

#include <algorithm>

#include "fixhorn/logic/errors.hpp"
#include "fixhorn/logic/printer.hpp"

namespace fixhorn {

std::size_t HornSystem::var_index(const std::string& name) const {
    for (std::size_t j = 0; j < vars_.size(); ++j) {
        if (vars_[j].name == name) {
            return j;
        }
    }
    throw UndeclaredSymbolError("predicate variable " + name + " is not declared");
}

HornSystem classify(ClauseSet set) {
    HornSystem h;
    h.vars_ = std::move(set.vars);
    h.clauses_ = std::move(set.clauses);
    h.base_.resize(h.vars_.size());
    h.induction_.resize(h.vars_.size());
    auto check = [&](const PredicateAtom& a) {
        std::size_t j = h.var_index(a.var.name);
        if (h.vars_[j].arity != a.var.arity || a.args.size() != a.var.arity) {
            throw ArityError("predicate variable " + a.var.name + " used with arity " +
                             std::to_string(a.args.size()));
        }
        return j;
    };
    for (std::size_t i = 0; i < h.clauses_.size(); ++i) {
        const Clause& c = h.clauses_[i];
        if (!c.is_horn()) {
            throw NotHornError("disjunctive head in clause " + to_sexpr(c.formula()));
        }
        for (const auto& a : c.body) {
            check(a);
        }
        switch (c.kind()) {
        case ClauseKind::Base:
            h.base_[check(c.head.front())].push_back(i);
            break;
        case ClauseKind::Induction:
            h.induction_[check(c.head.front())].push_back(i);
            break;
        case ClauseKind::End:
            h.end_.push_back(i);
            break;
        }
    }
    return h;
}

HornSystem classify(const std::vector<Formula>& formulas, std::vector<PredicateVariable> vars,
                    const NormalizeOptions& options) {
    return classify(normalize(formulas, std::move(vars), options));
}

} // namespace fixhorn
