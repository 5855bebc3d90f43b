#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "fixhorn/logic/formula.hpp"

namespace fixhorn {

// Raised for clauses outside the accepted shape: a disjunctive head where Horn
// form is required, a negated predicate atom, or a predicate variable inside
// the constraint.
class NotHornError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct PredicateAtom {
    PredicateVariable var;
    std::vector<Term> args;

    Formula formula() const { return Formula::atom(var, args); }

    friend bool operator==(const PredicateAtom&, const PredicateAtom&) = default;
};

enum class ClauseKind { Base, Induction, End };

std::string to_string(ClauseKind k);

// phi /\ B_1 /\ ... /\ B_m -> H_1 \/ ... \/ H_l, universally closed over
// `variables`. An empty head stands for false. Horn clauses have l <= 1, dual
// Horn clauses have m <= 1.
struct Clause {
    Formula constraint = Formula::top();
    std::vector<PredicateAtom> body;
    std::vector<PredicateAtom> head;
    // Free individual variables, binder order first, then first occurrence.
    std::vector<std::string> variables;

    bool is_horn() const { return head.size() <= 1; }
    bool is_dual_horn() const { return body.size() <= 1; }
    // Meaningful for Horn clauses only.
    ClauseKind kind() const;

    // Open implication (no quantifier prefix).
    Formula matrix() const;
    // Universal closure over `variables`.
    Formula formula() const;

    friend bool operator==(const Clause&, const Clause&) = default;
};

// Builds a clause and fills `variables` in the order constraint, body, head.
Clause make_clause(Formula constraint, std::vector<PredicateAtom> body,
                   std::vector<PredicateAtom> head);

struct ClauseSet {
    std::vector<PredicateVariable> vars;
    std::vector<Clause> clauses;

    bool is_horn() const;
    bool is_dual_horn() const;
    // Conjunction of the closed clauses.
    Formula formula() const;

    friend bool operator==(const ClauseSet&, const ClauseSet&) = default;
};

struct NormalizeOptions {
    // Accept lfp atoms (without free predicate variables) inside constraints.
    bool fixpoint_constraints = true;
};

// Splits formulas into clauses. Accepted shapes, after stripping a leading
// universal prefix and splitting top-level conjunctions: `premise => conclusion`,
// a disjunction of literals, a single literal, or a predicate-free formula.
// Premise conjuncts that are predicate atoms go to the body, the rest is
// conjoined into the constraint. Predicate-free head disjuncts are moved to the
// constraint negated. `true` clauses are dropped.
ClauseSet normalize(const std::vector<Formula>& formulas, std::vector<PredicateVariable> vars,
                    const NormalizeOptions& options = {});

// Syntactic: every clause has at most one body atom and at most one head atom.
bool is_linear(const ClauseSet& set);

} // namespace fixhorn
