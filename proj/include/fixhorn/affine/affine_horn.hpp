#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fixhorn/affine/subspace.hpp"
#include "fixhorn/horn/system.hpp"

namespace fixhorn {

class AffineError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// c . y + constant over the clause variables y.
struct LinearForm {
    Vector coeffs;
    Rational constant = 0;

    bool is_constant() const;
    friend bool operator==(const LinearForm&, const LinearForm&) = default;
};

// Numerals (3, -2, 1/2), +, -, and * with at least one constant side.
// Throws AffineError on anything else.
LinearForm linearize(const Term& t, const std::vector<std::string>& variables);

struct AffineAtom {
    std::size_t var = 0;  // index into the system's predicate variables
    std::vector<LinearForm> args;

    // as x |-> M x + c
    Matrix map() const;
    Vector offset() const;
};

struct AffineClause {
    std::vector<std::string> variables;
    // subspace of Q^|variables| cut out by the equality constraints
    AffineSubspace constraint;
    std::vector<AffineAtom> body;
    std::optional<AffineAtom> head;
    // constraint conjuncts that were not equalities and got relaxed to true
    std::size_t relaxed = 0;
    std::size_t source = 0;  // index of the clause in the HornSystem

    ClauseKind kind() const;
};

struct AffineHornSystem {
    std::vector<PredicateVariable> vars;
    std::vector<AffineClause> clauses;
};

// Equalities between affine terms become constraint equations. In base and
// induction clauses other constraint conjuncts (inequalities, negations,
// disjunctions) are relaxed to true; in end clauses they are an AffineError,
// as are lfp constraints and non-affine terms.
AffineHornSystem to_affine(const HornSystem& system);

} // namespace fixhorn
