#pragma once

#include "fixhorn/imp/program.hpp"
#include "generators.hpp"

namespace fixhorn::gen {

struct ProgramShape {
    std::vector<std::string> vars = {"x", "y"};
    std::size_t max_depth = 4;
    std::size_t max_loops = 2;  // nesting depth of while loops
    unsigned max_numeral = 3;
};

// Random program over + - * and guards built from = and <=.
Program random_program(Rng& rng, const ProgramShape& shape = {});
Formula random_guard(Rng& rng, const ProgramShape& shape);
Term random_arith_term(Rng& rng, const ProgramShape& shape, int depth = 1);

} // namespace fixhorn::gen
