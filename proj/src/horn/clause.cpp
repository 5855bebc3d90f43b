#include "fixhorn/horn/clause.hpp"

#include <algorithm>
#include <set>

#include "fixhorn/logic/errors.hpp"
#include "fixhorn/logic/printer.hpp"

namespace fixhorn {

std::string to_string(ClauseKind k) {
    switch (k) {
    case ClauseKind::Base:
        return "B";
    case ClauseKind::Induction:
        return "I";
    case ClauseKind::End:
        return "E";
    }
    return "?";
}

ClauseKind Clause::kind() const {
    if (head.empty()) {
        return ClauseKind::End;
    }
    return body.empty() ? ClauseKind::Base : ClauseKind::Induction;
}

Formula Clause::matrix() const {
    std::vector<Formula> premise{constraint};
    for (const auto& a : body) {
        premise.push_back(a.formula());
    }
    std::vector<Formula> conclusion;
    for (const auto& a : head) {
        conclusion.push_back(a.formula());
    }
    Formula p = conjoin(premise);
    Formula c = disjoin(conclusion);
    if (p.is(FormulaKind::True) && !head.empty()) {
        return c;
    }
    return Formula::implies(p, c);
}

Formula Clause::formula() const { return Formula::forall(variables, matrix()); }

Clause make_clause(Formula constraint, std::vector<PredicateAtom> body,
                   std::vector<PredicateAtom> head) {
    Clause c;
    c.constraint = std::move(constraint);
    c.body = std::move(body);
    c.head = std::move(head);
    collect_free_variables(c.constraint, c.variables);
    for (const auto* atoms : {&c.body, &c.head}) {
        for (const auto& a : *atoms) {
            for (const auto& t : a.args) {
                collect_variables(t, c.variables);
            }
        }
    }
    return c;
}

bool ClauseSet::is_horn() const {
    return std::all_of(clauses.begin(), clauses.end(), [](const Clause& c) { return c.is_horn(); });
}

bool ClauseSet::is_dual_horn() const {
    return std::all_of(clauses.begin(), clauses.end(),
                       [](const Clause& c) { return c.is_dual_horn(); });
}

Formula ClauseSet::formula() const {
    std::vector<Formula> parts;
    for (const auto& c : clauses) {
        parts.push_back(c.formula());
    }
    return conjoin(parts);
}

bool is_linear(const ClauseSet& set) { return set.is_horn() && set.is_dual_horn(); }

namespace {

struct Normalizer {
    const std::vector<PredicateVariable>& vars;
    const NormalizeOptions& options;
    std::vector<Clause> out;

    PredicateAtom atom_of(const Formula& f) const {
        auto it = std::find_if(vars.begin(), vars.end(),
                               [&](const PredicateVariable& v) { return v.name == f.name(); });
        if (it == vars.end()) {
            throw UndeclaredSymbolError("predicate variable " + f.name() + " is not declared");
        }
        if (it->arity != f.args().size()) {
            throw ArityError("predicate variable " + f.name() + " expects " +
                             std::to_string(it->arity) + " arguments, got " +
                             std::to_string(f.args().size()));
        }
        return {*it, f.args()};
    }

    bool mentions_predicates(const Formula& f) const { return !free_predicate_variables(f).empty(); }

    void check_constraint(const Formula& f) const {
        if (mentions_predicates(f)) {
            throw NotHornError("predicate variable inside the constraint " + to_sexpr(f));
        }
        if (!options.fixpoint_constraints && has_fixpoints(f)) {
            throw NotHornError("lfp constraints are not accepted here: " + to_sexpr(f));
        }
    }

    static void flatten(const Formula& f, FormulaKind k, std::vector<Formula>& parts) {
        if (f.is(k)) {
            for (const auto& c : f.children()) {
                flatten(c, k, parts);
            }
        } else {
            parts.push_back(f);
        }
    }

    void split(const Formula& f, std::vector<std::string> binders) {
        switch (f.kind()) {
        case FormulaKind::Forall:
            binders.push_back(f.name());
            split(f.body(), std::move(binders));
            return;
        case FormulaKind::And:
            for (const auto& c : f.children()) {
                split(c, binders);
            }
            return;
        case FormulaKind::True:
            return;
        case FormulaKind::Implies: {
            const Formula& conclusion = f.child(1);
            // p -> (a /\ b) and p -> (q -> r) are rewritten before clausifying.
            if (conclusion.is(FormulaKind::And)) {
                for (const auto& c : conclusion.children()) {
                    split(Formula::implies(f.child(0), c), binders);
                }
                return;
            }
            if (conclusion.is(FormulaKind::Implies)) {
                split(Formula::implies(Formula::conj({f.child(0), conclusion.child(0)}),
                                       conclusion.child(1)),
                      binders);
                return;
            }
            if (conclusion.is(FormulaKind::True)) {
                return;
            }
            out.push_back(clause(f.child(0), conclusion, f, binders));
            return;
        }
        case FormulaKind::Not:
            if (f.body().is(FormulaKind::PredicateVariable)) {
                out.push_back(clause(f.body(), Formula::bottom(), f, binders));
                return;
            }
            break;
        default:
            break;
        }
        out.push_back(clause(Formula::top(), f, f, binders));
    }

    Clause clause(const Formula& premise, const Formula& conclusion, const Formula& whole,
                  const std::vector<std::string>& binders) const {
        Clause c;
        std::vector<Formula> constraint;
        std::vector<Formula> parts;
        flatten(premise, FormulaKind::And, parts);
        for (const auto& p : parts) {
            if (p.is(FormulaKind::PredicateVariable)) {
                c.body.push_back(atom_of(p));
            } else if (p.is(FormulaKind::Not) && p.body().is(FormulaKind::PredicateVariable)) {
                throw NotHornError("negated predicate atom in the body: " + to_sexpr(p));
            } else {
                check_constraint(p);
                constraint.push_back(p);
            }
        }
        parts.clear();
        flatten(conclusion, FormulaKind::Or, parts);
        for (const auto& p : parts) {
            if (p.is(FormulaKind::PredicateVariable)) {
                c.head.push_back(atom_of(p));
            } else if (p.is(FormulaKind::False)) {
                continue;
            } else if (p.is(FormulaKind::Not) && p.body().is(FormulaKind::PredicateVariable)) {
                throw NotHornError("negated predicate atom in the head: " + to_sexpr(p));
            } else {
                check_constraint(p);
                constraint.push_back(Formula::negate(p));
            }
        }
        c.constraint = conjoin(constraint);

        std::set<std::string> free = free_individual_variables(whole);
        std::set<std::string> seen;
        for (const auto& b : binders) {
            if (!free.contains(b) || !seen.insert(b).second) {
                continue;
            }
            c.variables.push_back(b);
        }
        std::vector<std::string> rest;
        collect_free_variables(whole, rest);
        for (auto& v : rest) {
            if (!seen.contains(v)) {
                c.variables.push_back(v);
            }
        }
        return c;
    }
};

} // namespace

ClauseSet normalize(const std::vector<Formula>& formulas, std::vector<PredicateVariable> vars,
                    const NormalizeOptions& options) {
    std::set<std::string> names;
    for (const auto& v : vars) {
        if (!names.insert(v.name).second) {
            throw std::invalid_argument("predicate variable " + v.name + " declared twice");
        }
    }
    Normalizer n{vars, options, {}};
    for (const auto& f : formulas) {
        n.split(f, {});
    }
    return {std::move(vars), std::move(n.out)};
}

} // namespace fixhorn
