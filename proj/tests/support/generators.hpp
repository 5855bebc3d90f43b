#pragma once

// Seeded random inputs for property and acceptance tests. The corpus language
// has constants a, b, a unary function f, a unary predicate P and a binary
// predicate E.

#include <cstdint>
#include <random>
#include <vector>

#include "fixhorn/horn/clause.hpp"
#include "fixhorn/logic/signature.hpp"
#include "fixhorn/model/structure.hpp"

namespace fixhorn::gen {

using Rng = std::mt19937_64;

inline constexpr std::uint64_t kDefaultSeed = 20240531;

Signature corpus_signature();

// Random interpretation of the corpus signature on elements e0..e{n-1}.
FiniteStructure random_structure(std::size_t n, Rng& rng);

// The fixed structure family: `per_size` seeded structures for each size 1..3.
std::vector<FiniteStructure> structure_family(std::size_t per_size = 4,
                                              std::uint64_t seed = kDefaultSeed);

struct HornShape {
    std::size_t max_vars = 2;
    std::size_t max_arity = 2;
    std::size_t max_clauses = 5;
    std::size_t max_body = 2;
};

// Clause formulas over the corpus signature and predicate variables X, Y.
struct GeneratedProblem {
    std::vector<PredicateVariable> vars;
    std::vector<Formula> formulas;
};

GeneratedProblem random_horn(Rng& rng, const HornShape& shape = {});
// Same, normalized into clauses.
ClauseSet random_horn_clauses(Rng& rng, const HornShape& shape = {});

// Random formula mentioning predicate variables `vars` (all quantifiers closed
// over u, v, w), with depth at most `depth`.
Formula random_formula(Rng& rng, const std::vector<PredicateVariable>& vars, int depth,
                       bool closed = true);

Term random_term(Rng& rng, const std::vector<std::string>& pool);

// Random digraph edge relation on n nodes.
RelationTable random_digraph(std::size_t n, double density, Rng& rng);

} // namespace fixhorn::gen
