#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "fixhorn/logic/formula.hpp"
#include "fixhorn/model/relation.hpp"
#include "fixhorn/model/structure.hpp"

namespace fixhorn {

using Valuation = std::map<std::string, Element>;
// Interpretation of predicate variables.
using RelationEnv = std::map<std::string, RelationTable>;

// Unbound variable, uninterpreted symbol or arity mismatch during evaluation.
class EvalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct LfpResult {
    std::vector<RelationTable> relations;
    // Index of the first Kleene stage equal to the least fixed point; the
    // operator was applied iterations + 1 times (the last application confirms).
    std::size_t iterations = 0;
    // Stages F^0(empty) .. F^iterations(empty), filled only when requested.
    std::vector<std::vector<RelationTable>> stages;
};

// Tarski semantics over one finite structure. Formulas are compiled to a
// slot-addressed tree before evaluation. Least fixed points of closed systems
// (no free predicate variables) are memoized per evaluator, keyed structurally.
// Not safe for concurrent use; create one evaluator per thread.
class Evaluator {
public:
    explicit Evaluator(const FiniteStructure& structure) : structure_(structure) {}

    const FiniteStructure& structure() const { return structure_; }

    bool eval(const Formula& f, const Valuation& valuation = {}, const RelationEnv& env = {});

    // Least fixed point of F_Phi by simultaneous Kleene iteration from the
    // empty tuple. `env` interprets predicate variables free in the system.
    LfpResult lfp(const FixpointSystem& system, const RelationEnv& env = {},
                  bool record_stages = false);

    // One application of F_Phi.
    std::vector<RelationTable> apply(const FixpointSystem& system,
                                     std::span<const RelationTable> stage,
                                     const RelationEnv& env = {});

    // { a in M^k | M |= f[params := a] }.
    RelationTable extension(const std::vector<std::string>& params, const Formula& f,
                            const RelationEnv& env = {});

    std::size_t cache_size() const { return cache_.size(); }

private:
    struct SystemHash {
        std::size_t operator()(const FixpointSystem& s) const { return s.hash(); }
    };

    const FiniteStructure& structure_;
    std::unordered_map<FixpointSystem, LfpResult, SystemHash> cache_;
};

bool eval(const FiniteStructure& structure, const Valuation& valuation, const RelationEnv& env,
          const Formula& f);
LfpResult lfp_solve(const FiniteStructure& structure, const FixpointSystem& system,
                    bool record_stages = false);
std::vector<RelationTable> apply_F(const FiniteStructure& structure, const FixpointSystem& system,
                                   std::span<const RelationTable> stage);

} // namespace fixhorn
