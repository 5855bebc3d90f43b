#pragma once

#include <string_view>
#include <vector>

#include "fixhorn/formats/sexpr.hpp"
#include "fixhorn/logic/formula.hpp"
#include "fixhorn/logic/signature.hpp"

namespace fixhorn {

// Symbols in scope while reading formulas. Identifiers that are neither
// declared constants nor numerals read as individual variables.
struct FormulaContext {
    const Signature* signature = nullptr;
    std::vector<PredicateVariable> vars;
    // Accept (aff= s t) as a synonym of (= s t).
    bool affine = false;
};

// Errors (unknown operator, arity, undeclared symbol) are ParseErrors carrying
// the location of the offending subexpression.
Term parse_term(const SExpr& e, const FormulaContext& ctx);
Formula parse_formula(const SExpr& e, const FormulaContext& ctx);
Formula parse_formula(std::string_view text, const FormulaContext& ctx);

} // namespace fixhorn
