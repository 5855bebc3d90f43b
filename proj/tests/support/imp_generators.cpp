#include "imp_generators.hpp"

namespace fixhorn::gen {

namespace {

std::size_t pick(Rng& rng, std::size_t n) {
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

// keeps sequences right-nested, the shape the parser produces
CommandPtr then(CommandPtr first, CommandPtr second) {
    if (first->kind == CommandKind::Seq) {
        return Command::seq(first->parts[0], then(first->parts[1], std::move(second)));
    }
    return Command::seq(std::move(first), std::move(second));
}

CommandPtr command(Rng& rng, const ProgramShape& shape, std::size_t depth, std::size_t loops) {
    std::size_t choices = depth <= 1 ? 2 : (loops == 0 ? 4 : 5);
    switch (pick(rng, choices)) {
    case 0:
        return Command::skip();
    case 1:
        return Command::assign(shape.vars[pick(rng, shape.vars.size())], random_arith_term(rng, shape));
    case 2:
        return then(command(rng, shape, depth - 1, loops), command(rng, shape, depth - 1, loops));
    case 3:
        return Command::if_then_else(random_guard(rng, shape), command(rng, shape, depth - 1, loops),
                                     command(rng, shape, depth - 1, loops));
    default:
        return Command::while_do(random_guard(rng, shape), command(rng, shape, depth - 1, loops - 1));
    }
}

} // namespace

Term random_arith_term(Rng& rng, const ProgramShape& shape, int depth) {
    std::size_t choice = depth <= 0 ? pick(rng, 2) : pick(rng, 5);
    switch (choice) {
    case 0:
        return Term::var(shape.vars[pick(rng, shape.vars.size())]);
    case 1:
        return Term::app(std::to_string(pick(rng, shape.max_numeral + 1)));
    default: {
        static const char* const ops[] = {"+", "-", "*"};
        return Term::app(ops[choice - 2], {random_arith_term(rng, shape, depth - 1),
                                           random_arith_term(rng, shape, depth - 1)});
    }
    }
}

Formula random_guard(Rng& rng, const ProgramShape& shape) {
    Term a = random_arith_term(rng, shape, 0);
    Term b = random_arith_term(rng, shape, 1);
    Formula atom = pick(rng, 2) ? Formula::equal(a, b) : Formula::predicate("<=", {a, b});
    switch (pick(rng, 4)) {
    case 0:
        return Formula::negate(atom);
    case 1:
        return Formula::conj({atom, Formula::negate(Formula::equal(b, Term::var(shape.vars[0])))});
    default:
        return atom;
    }
}

Program random_program(Rng& rng, const ProgramShape& shape) {
    return {shape.vars, command(rng, shape, shape.max_depth, shape.max_loops)};
}

} // namespace fixhorn::gen
