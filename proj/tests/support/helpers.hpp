#pragma once

#include <string_view>
#include <vector>

#include "fixhorn/formats/formula_parser.hpp"
#include "fixhorn/logic/printer.hpp"
#include "generators.hpp"

namespace fixhorn::testing {

// Parses a formula over the corpus signature plus any extra declarations.
inline Formula parse(std::string_view text, const std::vector<PredicateVariable>& vars = {},
                     const Signature& sig = gen::corpus_signature()) {
    FormulaContext ctx{&sig, vars, false};
    return parse_formula(text, ctx);
}

inline Term var(const char* name) { return Term::var(name); }
inline Term app(const char* name, std::vector<Term> args = {}) { return Term::app(name, std::move(args)); }

} // namespace fixhorn::testing
