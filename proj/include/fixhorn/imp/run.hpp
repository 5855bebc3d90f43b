#pragma once

#include <cstddef>

#include "fixhorn/imp/program.hpp"
#include "fixhorn/model/evaluator.hpp"

namespace fixhorn {

// Values of the program variables, in declaration order.
using State = Tuple;

enum class RunStatus {
    Terminated,
    // A loop head was revisited with the same state: the run provably diverges.
    Diverges,
    // Fuel ran out before either of the above was established.
    OutOfFuel,
};

struct RunOutcome {
    RunStatus status = RunStatus::Terminated;
    State state;
    std::size_t iterations = 0;  // loop-body executions
};

// Big-step execution. Every loop-body execution consumes one unit of fuel.
RunOutcome run(const FiniteStructure& m, const Program& p, State start, std::size_t fuel);

// Value of a term / guard in a state.
Element eval_term(const FiniteStructure& m, const std::vector<std::string>& vars, const Term& t,
                  const State& s);
bool eval_guard(Evaluator& ev, const std::vector<std::string>& vars, const Formula& guard,
                const State& s);

} // namespace fixhorn
