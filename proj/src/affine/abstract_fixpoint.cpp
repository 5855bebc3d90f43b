#include "fixhorn/affine/abstract_fixpoint.hpp"

#include <stdexcept>

namespace fixhorn {

AbstractValue abstract_bottom(const AffineHornSystem& system) {
    AbstractValue v;
    for (const auto& x : system.vars) {
        v.push_back(AffineSubspace::empty(x.arity));
    }
    return v;
}

AffineSubspace clause_premise(const AffineClause& clause, const AbstractValue& value) {
    const std::size_t n = clause.variables.size();
    AffineSubspace s = clause.constraint;
    for (const auto& b : clause.body) {
        if (s.is_empty()) {
            break;
        }
        s = s.meet(value.at(b.var).preimage(b.map(), b.offset(), n));
    }
    return s;
}

AbstractValue abstract_apply_F(const AffineHornSystem& system, const AbstractValue& value) {
    if (value.size() != system.vars.size()) {
        throw std::invalid_argument("abstract value has wrong length");
    }
    AbstractValue next = abstract_bottom(system);
    for (const auto& c : system.clauses) {
        if (!c.head) {
            continue;
        }
        AffineSubspace premise = clause_premise(c, value);
        auto& slot = next[c.head->var];
        slot = slot.join(premise.image(c.head->map(), c.head->offset()));
    }
    return next;
}

std::vector<std::vector<int>> AbstractLfpResult::dimensions() const {
    std::vector<std::vector<int>> out;
    for (const auto& stage : stages) {
        std::vector<int> dims;
        for (const auto& s : stage) {
            dims.push_back(s.dimension());
        }
        out.push_back(std::move(dims));
    }
    return out;
}

AbstractLfpResult abstract_lfp(const AffineHornSystem& system) {
    AbstractLfpResult r;
    for (const auto& x : system.vars) {
        r.bound += x.arity + 2;
    }
    r.strict_steps.assign(system.vars.size(), 0);
    r.stages.push_back(abstract_bottom(system));
    for (;;) {
        AbstractValue next = abstract_apply_F(system, r.stages.back());
        if (next == r.stages.back()) {
            break;
        }
        const AbstractValue& prev = r.stages.back();
        for (std::size_t j = 0; j < next.size(); ++j) {
            if (!(next[j] == prev[j])) {
                if (!prev[j].leq(next[j])) {
                    throw std::logic_error("abstract iteration is not ascending");
                }
                ++r.strict_steps[j];
            }
        }
        r.stages.push_back(std::move(next));
        if (r.stages.size() - 1 > r.bound) {
            throw std::logic_error("abstract iteration exceeded its chain-length bound");
        }
    }
    r.value = r.stages.back();
    r.iterations = r.stages.size() - 1;
    return r;
}

AbstractEndReport check_end_clauses_abstract(const AffineHornSystem& system, const AbstractValue& value) {
    AbstractEndReport report;
    for (std::size_t i = 0; i < system.clauses.size(); ++i) {
        const auto& c = system.clauses[i];
        if (c.head) {
            continue;
        }
        AffineSubspace premise = clause_premise(c, value);
        if (!premise.is_empty()) {
            report.violations.push_back({i, premise});
        }
    }
    return report;
}

} // namespace fixhorn
