#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "fixhorn/logic/formula.hpp"

namespace fixhorn {

// lambda x_1..x_k. body, the replacement for a k-ary predicate variable.
struct Lambda {
    std::vector<std::string> params;
    Formula body;
};

using TermSubstitution = std::map<std::string, Term>;
using PredicateSubstitution = std::map<std::string, Lambda>;

// `base` if unused, otherwise the first of base_1, base_2, ... not in `taken`.
std::string fresh_name(const std::string& base, const std::set<std::string>& taken);

Term substitute(const Term& t, const TermSubstitution& sigma);

// Simultaneous capture-avoiding substitution of individual variables. Bound
// variables that would capture a variable of the substituted terms are renamed
// with fresh_name.
Formula substitute(const Formula& f, const TermSubstitution& sigma);

// Simultaneous substitution of predicate variables: every atom X(t...) with
// X in `sigma` becomes body[params := t...]. Replacement bodies are not
// rescanned. Throws ArityError when |params| differs from the atom's arity.
Formula substitute(const Formula& f, const PredicateSubstitution& sigma);

// psi^D: every free predicate variable X replaced by (not X).
Formula dualize_formula(const Formula& f);

// Alpha-equivalence: equal up to consistent renaming of bound variables.
bool alpha_equivalent(const Formula& a, const Formula& b);

} // namespace fixhorn
