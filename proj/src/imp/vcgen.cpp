#include "fixhorn/imp/vcgen.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "fixhorn/logic/substitution.hpp"

namespace fixhorn {

namespace {

void scan(const Formula& f, std::vector<PredicateVariable>& out) {
    switch (f.kind()) {
    case FormulaKind::PredicateVariable:
        if (std::none_of(out.begin(), out.end(),
                         [&](const PredicateVariable& v) { return v.name == f.name(); })) {
            out.push_back(f.variable());
        }
        return;
    case FormulaKind::Lfp:
        return;
    default:
        for (const auto& c : f.children()) {
            scan(c, out);
        }
    }
}

class Generator {
public:
    Generator(const std::vector<std::string>& vars, std::set<std::string> taken)
        : taken_(std::move(taken)) {
        for (const auto& v : vars) {
            args_.push_back(Term::var(v));
        }
    }

    void vc(const Formula& pre, const Command& c, const Formula& post) {
        switch (c.kind) {
        case CommandKind::Skip:
            emit(pre, post);
            return;
        case CommandKind::Assign:
            emit(pre, substitute(post, TermSubstitution{{c.var, c.value}}));
            return;
        case CommandKind::Seq: {
            Formula i = fresh();
            vc(pre, *c.parts[0], i);
            vc(i, *c.parts[1], post);
            return;
        }
        case CommandKind::If:
            vc(conjoin({pre, c.guard}), *c.parts[0], post);
            vc(conjoin({pre, Formula::negate(c.guard)}), *c.parts[1], post);
            return;
        case CommandKind::While: {
            Formula i = fresh();
            vc(conjoin({i, c.guard}), *c.parts[0], i);
            emit(pre, i);
            emit(conjoin({i, Formula::negate(c.guard)}), post);
            return;
        }
        }
    }

    std::vector<PredicateVariable> invariants;
    std::vector<Formula> conditions;

private:
    Formula fresh() {
        std::string name;
        do {
            name = "I" + std::to_string(++counter_);
        } while (taken_.contains(name));
        taken_.insert(name);
        PredicateVariable v{name, args_.size()};
        invariants.push_back(v);
        return Formula::atom(v, args_);
    }

    void emit(const Formula& premise, const Formula& conclusion) {
        Formula f = Formula::implies(premise, conclusion);
        std::vector<std::string> free;
        collect_free_variables(f, free);
        conditions.push_back(Formula::forall(free, f));
    }

    std::vector<Term> args_;
    std::set<std::string> taken_;
    std::size_t counter_ = 0;
};

} // namespace

std::vector<PredicateVariable> predicate_variables(const Formula& f) {
    std::vector<PredicateVariable> out;
    scan(f, out);
    return out;
}

VcResult vcgen(const HoareTriple& triple) {
    const auto& vars = triple.program.vars;
    for (const auto* f : {&triple.pre, &triple.post}) {
        for (const auto& v : free_individual_variables(*f)) {
            if (std::find(vars.begin(), vars.end(), v) == vars.end()) {
                throw std::invalid_argument("variable " + v + " of the pre/postcondition is not a program variable");
            }
        }
    }
    VcResult r;
    r.vars = predicate_variables(Formula::conj({triple.pre, triple.post}));
    std::set<std::string> taken;
    for (const auto& v : r.vars) {
        taken.insert(v.name);
    }
    Generator g(vars, taken);
    g.vc(triple.pre, *triple.program.body, triple.post);
    r.invariants = g.invariants;
    r.vars.insert(r.vars.end(), g.invariants.begin(), g.invariants.end());
    r.conditions = std::move(g.conditions);
    r.clauses = normalize(r.conditions, r.vars);
    r.system = classify(r.clauses);
    if (!is_linear(r.clauses)) {
        throw std::logic_error("verification condition is not linear Horn");
    }
    return r;
}

} // namespace fixhorn
