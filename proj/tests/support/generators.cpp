#include "generators.hpp"

namespace fixhorn::gen {

namespace {

std::size_t pick(Rng& rng, std::size_t n) {
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

bool chance(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

const std::vector<std::string> kPool = {"u", "v", "w"};

} // namespace

Signature corpus_signature() {
    Signature sig;
    sig.add_function("a", 0);
    sig.add_function("b", 0);
    sig.add_function("f", 1);
    sig.add_predicate("P", 1);
    sig.add_predicate("E", 2);
    return sig;
}

FiniteStructure random_structure(std::size_t n, Rng& rng) {
    std::vector<std::string> dom;
    for (std::size_t i = 0; i < n; ++i) {
        dom.push_back("e" + std::to_string(i));
    }
    FiniteStructure m(dom);
    m.set_constant("a", static_cast<Element>(pick(rng, n)));
    m.set_constant("b", static_cast<Element>(pick(rng, n)));
    FunctionTable f{1, {}};
    for (std::size_t i = 0; i < n; ++i) {
        f.values.push_back(static_cast<Element>(pick(rng, n)));
    }
    m.set_function("f", f);
    std::vector<Tuple> p;
    std::vector<Tuple> e;
    for (Element i = 0; i < n; ++i) {
        if (chance(rng, 0.5)) {
            p.push_back({i});
        }
        for (Element j = 0; j < n; ++j) {
            if (chance(rng, 0.4)) {
                e.push_back({i, j});
            }
        }
    }
    m.set_relation("P", RelationTable(1, p));
    m.set_relation("E", RelationTable(2, e));
    return m;
}

std::vector<FiniteStructure> structure_family(std::size_t per_size, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<FiniteStructure> out;
    for (std::size_t n = 1; n <= 3; ++n) {
        for (std::size_t i = 0; i < per_size; ++i) {
            out.push_back(random_structure(n, rng));
        }
    }
    return out;
}

Term random_term(Rng& rng, const std::vector<std::string>& pool) {
    double r = std::uniform_real_distribution<double>(0, 1)(rng);
    if (pool.empty()) {
        Term c = Term::app(chance(rng, 0.5) ? "a" : "b");
        return r < 0.8 ? c : Term::app("f", {c});
    }
    if (r < 0.6) {
        return Term::var(pool[pick(rng, pool.size())]);
    }
    if (r < 0.85) {
        return Term::app(chance(rng, 0.5) ? "a" : "b");
    }
    return Term::app("f", {Term::var(pool[pick(rng, pool.size())])});
}

namespace {

Formula random_literal(Rng& rng) {
    Formula atom = Formula::top();
    switch (pick(rng, 3)) {
    case 0:
        atom = Formula::equal(random_term(rng, kPool), random_term(rng, kPool));
        break;
    case 1:
        atom = Formula::predicate("P", {random_term(rng, kPool)});
        break;
    default:
        atom = Formula::predicate("E", {random_term(rng, kPool), random_term(rng, kPool)});
        break;
    }
    return chance(rng, 0.3) ? Formula::negate(atom) : atom;
}

Formula random_atom(Rng& rng, const PredicateVariable& v) {
    std::vector<Term> args;
    for (std::size_t i = 0; i < v.arity; ++i) {
        args.push_back(random_term(rng, kPool));
    }
    return Formula::atom(v, std::move(args));
}

} // namespace

GeneratedProblem random_horn(Rng& rng, const HornShape& shape) {
    GeneratedProblem p;
    std::size_t nvars = 1 + pick(rng, shape.max_vars);
    const char* names[] = {"X", "Y", "Z", "W"};
    for (std::size_t j = 0; j < nvars; ++j) {
        p.vars.push_back({names[j], pick(rng, shape.max_arity + 1)});
    }
    std::size_t nclauses = 1 + pick(rng, shape.max_clauses);
    for (std::size_t c = 0; c < nclauses; ++c) {
        std::vector<Formula> premise;
        std::size_t nlit = pick(rng, 3);
        for (std::size_t i = 0; i < nlit; ++i) {
            premise.push_back(random_literal(rng));
        }
        double r = std::uniform_real_distribution<double>(0, 1)(rng);
        std::size_t nbody = r < 0.4 ? 0 : (r < 0.8 ? 1 : shape.max_body);
        for (std::size_t i = 0; i < nbody; ++i) {
            premise.push_back(random_atom(rng, p.vars[pick(rng, nvars)]));
        }
        Formula head = chance(rng, 0.75) ? random_atom(rng, p.vars[pick(rng, nvars)])
                                         : Formula::bottom();
        Formula matrix = Formula::implies(conjoin(premise), head);
        std::vector<std::string> free;
        collect_free_variables(matrix, free);
        p.formulas.push_back(Formula::forall(free, matrix));
    }
    return p;
}

ClauseSet random_horn_clauses(Rng& rng, const HornShape& shape) {
    auto p = random_horn(rng, shape);
    return normalize(p.formulas, p.vars);
}

Formula random_formula(Rng& rng, const std::vector<PredicateVariable>& vars, int depth,
                       bool closed) {
    std::vector<std::string> scope = closed ? std::vector<std::string>{} : kPool;
    // Closed formulas bind every variable they use; build with a scope list.
    struct Builder {
        Rng& rng;
        const std::vector<PredicateVariable>& vars;
        Formula build(int d, std::vector<std::string> scope) {
            std::size_t choices = d <= 0 ? 2 : 8;
            switch (pick(rng, choices)) {
            case 0: {
                if (scope.empty()) {
                    return Formula::predicate("P", {Term::app("a")});
                }
                Formula atom = Formula::predicate("E", {random_term(rng, scope), random_term(rng, scope)});
                return chance(rng, 0.5) ? atom
                                        : Formula::equal(random_term(rng, scope), random_term(rng, scope));
            }
            case 1: {
                if (vars.empty()) {
                    return Formula::predicate("P", {random_term(rng, scope)});
                }
                const auto& v = vars[pick(rng, vars.size())];
                std::vector<Term> args;
                for (std::size_t i = 0; i < v.arity; ++i) {
                    args.push_back(random_term(rng, scope));
                }
                return Formula::atom(v, std::move(args));
            }
            case 2:
                return Formula::negate(build(d - 1, scope));
            case 3:
                return Formula::conj({build(d - 1, scope), build(d - 1, scope)});
            case 4:
                return Formula::disj({build(d - 1, scope), build(d - 1, scope)});
            case 5:
                return Formula::implies(build(d - 1, scope), build(d - 1, scope));
            default: {
                std::string x = kPool[pick(rng, kPool.size())];
                scope.push_back(x);
                Formula body = build(d - 1, scope);
                return chance(rng, 0.5) ? Formula::forall(x, body) : Formula::exists(x, body);
            }
            }
        }
    };
    return Builder{rng, vars}.build(depth, scope);
}

RelationTable random_digraph(std::size_t n, double density, Rng& rng) {
    std::vector<Tuple> edges;
    for (Element i = 0; i < n; ++i) {
        for (Element j = 0; j < n; ++j) {
            if (i != j && chance(rng, density)) {
                edges.push_back({i, j});
            }
        }
    }
    return RelationTable(2, std::move(edges));
}

} // namespace fixhorn::gen
