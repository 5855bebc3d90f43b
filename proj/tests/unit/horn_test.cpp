#include <gtest/gtest.h>

#include "fixhorn/horn/solve.hpp"
#include "fixhorn/logic/errors.hpp"
#include "helpers.hpp"
#include "oracle.hpp"

namespace fixhorn {
namespace {

using testing::parse;

const PredicateVariable X1{"X", 1};
const PredicateVariable Y1{"Y", 1};
const PredicateVariable Z1{"Z", 1};
const PredicateVariable X2{"X", 2};

Signature dual_example_signature() {
    Signature sig = gen::corpus_signature();
    sig.add_function("g", 2);
    return sig;
}

std::vector<Formula> dual_example() {
    Signature sig = dual_example_signature();
    return {parse("(X a)", {X1, Y1}, sig),
            parse("(forall (u v) (=> (and (X u) (X v)) (Y (g u v))))", {X1, Y1}, sig),
            parse("(forall (w) (=> (Y w) false))", {X1, Y1}, sig)};
}

Signature graph_signature() {
    Signature sig;
    sig.add_function("a", 0);
    sig.add_function("b", 0);
    sig.add_function("c", 0);
    sig.add_predicate("E", 2);
    return sig;
}

std::vector<Formula> reach_clauses(bool with_end) {
    Signature sig = graph_signature();
    std::vector<Formula> fs{parse("(forall (u) (X u u))", {X2}, sig),
                            parse("(forall (u w v) (=> (and (X u w) (E w v)) (X u v)))", {X2}, sig)};
    if (with_end) {
        fs.push_back(parse("(=> (X a c) false)", {X2}, sig));
    }
    return fs;
}

FiniteStructure abc_graph(const RelationTable& edges) {
    FiniteStructure m({"a", "b", "c"});
    m.set_constant("a", 0);
    m.set_constant("b", 1);
    m.set_constant("c", 2);
    m.set_relation("E", edges);
    return m;
}

TEST(Classify, DualizationExampleClauses) {
    HornSystem h = classify(dual_example(), {X1, Y1});
    ASSERT_EQ(h.clauses().size(), 3u);
    EXPECT_EQ(h.base(0), std::vector<std::size_t>{0});
    EXPECT_TRUE(h.induction(0).empty());
    EXPECT_TRUE(h.base(1).empty());
    EXPECT_EQ(h.induction(1), std::vector<std::size_t>{1});
    EXPECT_EQ(h.end(), std::vector<std::size_t>{2});
    EXPECT_EQ(h.clauses()[0].constraint, Formula::top());
    EXPECT_EQ(h.clauses()[1].body.size(), 2u);
    EXPECT_EQ(h.clauses()[2].kind(), ClauseKind::End);
}

TEST(Classify, SingleBaseClause) {
    HornSystem h = classify({parse("(forall (u) (=> (P u) (X u)))", {X1})}, {X1});
    EXPECT_EQ(h.base(0).size(), 1u);
    EXPECT_TRUE(h.induction(0).empty());
    EXPECT_TRUE(h.end().empty());
    EXPECT_EQ(h.clauses()[0].constraint, parse("(P u)"));
}

TEST(Classify, DisjunctiveHeadIsNotHorn) {
    auto f = parse("(forall (u) (=> (X u) (or (Y u) (Z u))))", {X1, Y1, Z1});
    EXPECT_THROW(classify({f}, {X1, Y1, Z1}), NotHornError);
    EXPECT_NO_THROW(normalize({f}, {X1, Y1, Z1}));
}

TEST(Classify, NegatedBodyAtomIsNotHorn) {
    EXPECT_THROW(classify({parse("(=> (and (P a) (not (X a))) (X b))", {X1})}, {X1}), NotHornError);
}

TEST(Classify, PredicateVariableInsideConstraintIsNotHorn) {
    EXPECT_THROW(classify({parse("(=> (exists (u) (X u)) (X a))", {X1})}, {X1}), NotHornError);
    EXPECT_THROW(classify({parse("(=> (or (P a) (X b)) (X a))", {X1})}, {X1}), NotHornError);
}

TEST(Classify, NormalizationShapes) {
    // Conjuncts reordered, multiple constraints conjoined, missing constraint is true.
    Clause c = classify({parse("(=> (and (X u) (P u) (E u v)) (X v))", {X1})}, {X1}).clauses()[0];
    EXPECT_EQ(c.constraint, parse("(and (P u) (E u v))"));
    EXPECT_EQ(c.body.size(), 1u);
    EXPECT_EQ(c.variables, (std::vector<std::string>{"u", "v"}));

    // A predicate-free conclusion moves into the constraint negated.
    Clause e = classify({parse("(=> (X u) (P u))", {X1})}, {X1}).clauses()[0];
    EXPECT_EQ(e.kind(), ClauseKind::End);
    EXPECT_EQ(e.constraint, parse("(not (P u))"));

    // A negated atom as a whole clause is an end clause; a bare atom is a fact.
    HornSystem h = classify({parse("(not (X a))", {X1}), parse("(X b)", {X1})}, {X1});
    EXPECT_EQ(h.clauses()[0].kind(), ClauseKind::End);
    EXPECT_EQ(h.clauses()[1].kind(), ClauseKind::Base);

    // Conjunctive conclusions split; `true` clauses vanish.
    HornSystem s = classify({parse("(=> (P a) (and (X a) (X b)))", {X1}), Formula::top()}, {X1});
    EXPECT_EQ(s.clauses().size(), 2u);
}

TEST(Classify, UndeclaredAndArityErrors) {
    EXPECT_THROW(normalize({Formula::atom(Y1, {Term::app("a")})}, {X1}), UndeclaredSymbolError);
    EXPECT_THROW(normalize({Formula::atom({"X", 2}, {Term::app("a"), Term::app("a")})}, {X1}),
                 ArityError);
}

TEST(BuildPhi, ReachabilityShapeAndSemantics) {
    HornSystem h = classify(reach_clauses(false), {X2});
    auto phi = build_phi(h);
    Formula expected = parse(
        "(exists (u w v) (or (and (= _arg0 u) (= _arg1 u))"
        " (and (E w v) (X u w) (= _arg0 u) (= _arg1 v))))",
        {X2}, graph_signature());
    EXPECT_EQ(phi->component(0).body, expected) << to_sexpr(*phi);
    EXPECT_EQ(phi->component(0).params, (std::vector<std::string>{"_arg0", "_arg1"}));

    RelationTable edges(2, {{0, 1}, {1, 2}});
    auto r = lfp_solve(abc_graph(edges), *phi);
    EXPECT_EQ(r.relations.front(), oracle::warshall_closure(edges, 3));
}

TEST(BuildPhi, NoClausesGivesFalse) {
    HornSystem h = classify({parse("(=> (X a) false)", {X1})}, {X1});
    EXPECT_EQ(build_phi(h)->component(0).body, Formula::bottom());
}

TEST(BuildPhi, SingleFact) {
    HornSystem h = classify({parse("(X a)", {X1})}, {X1});
    EXPECT_EQ(build_phi(h)->component(0).body, parse("(= _arg0 a)"));
}

TEST(BuildPhi, ParametersAvoidClauseVariables) {
    HornSystem h = classify({parse("(forall (_arg0) (=> (P _arg0) (X _arg0)))", {X1})}, {X1});
    auto phi = build_phi(h);
    EXPECT_EQ(phi->component(0).params, std::vector<std::string>{"_arg0_1"});
}

TEST(Dualize, DualizationExample) {
    ClauseSet d = dualize(classify(dual_example(), {X1, Y1}));
    Signature sig = dual_example_signature();
    ClauseSet expected = normalize({parse("(=> (X a) false)", {X1, Y1}, sig),
                                    parse("(forall (u v) (=> (Y (g u v)) (or (X u) (X v))))", {X1, Y1}, sig),
                                    parse("(forall (w) (Y w))", {X1, Y1}, sig)},
                                   {X1, Y1});
    EXPECT_EQ(d, expected);
    EXPECT_TRUE(d.is_dual_horn());
    EXPECT_FALSE(d.is_horn());
}

TEST(Dualize, FactBecomesEndClause) {
    ClauseSet d = dualize(normalize({parse("(X a)", {X1})}, {X1}));
    EXPECT_EQ(d.clauses[0].head.size(), 0u);
    EXPECT_EQ(d.clauses[0].body.size(), 1u);
}

TEST(Dualize, RejectsMixedShapes) {
    ClauseSet s = normalize({parse("(forall (u v) (=> (and (X u) (X v)) (or (Y u) (Y v))))", {X1, Y1})},
                            {X1, Y1});
    EXPECT_THROW(dualize(s), NotHornError);
}

TEST(Dualize, ClauseLevelDualMatchesFormulaLevelDual) {
    // psi^D holds under R iff psi holds under the complement of R.
    gen::Rng rng(41);
    auto structures = gen::structure_family(2);
    for (int i = 0; i < 60; ++i) {
        ClauseSet s = gen::random_horn_clauses(rng);
        ClauseSet d = dualize(s);
        for (const auto& m : structures) {
            oracle::AssignmentSpace space(s.vars, m.size());
            auto sat_s = oracle::satisfying_assignments(m, space, s.formula());
            auto sat_d = oracle::satisfying_assignments(m, space, d.formula());
            auto sat_formula_dual = oracle::satisfying_assignments(m, space, dualize_formula(s.formula()));
            EXPECT_EQ(sat_d, sat_formula_dual);
            std::uint64_t all = space.count() - 1;
            for (std::uint64_t a = 0; a < space.count(); a += 1 + space.count() / 128) {
                EXPECT_EQ(sat_d.contains(a), sat_s.contains(all & ~a));
            }
        }
    }
}

TEST(SolveMin, UnreachableEndClauseHolds) {
    HornSystem h = classify(reach_clauses(true), {X2});
    auto r = solve_min(abc_graph(RelationTable(2, {{0, 1}, {2, 1}})), h);
    EXPECT_TRUE(r.satisfies_all());
    EXPECT_FALSE(r.relations[0].contains({0, 2}));
}

TEST(SolveMin, ReachableEndClauseViolated) {
    HornSystem h = classify(reach_clauses(true), {X2});
    RelationTable edges(2, {{0, 1}, {1, 2}});
    auto r = solve_min(abc_graph(edges), h);
    EXPECT_EQ(r.violated, std::vector<std::size_t>{2});
    EXPECT_EQ(r.relations[0], oracle::warshall_closure(edges, 3));
}

TEST(SolveMin, NoEndClausesAlwaysSatisfied) {
    gen::Rng rng(43);
    auto structures = gen::structure_family();
    int seen = 0;
    while (seen < 40) {
        ClauseSet s = gen::random_horn_clauses(rng);
        ClauseSet kept{s.vars, {}};
        for (const auto& c : s.clauses) {
            if (!c.head.empty()) {
                kept.clauses.push_back(c);
            }
        }
        ++seen;
        HornSystem h = classify(kept);
        for (const auto& m : structures) {
            EXPECT_TRUE(solve_min(m, h).satisfies_all());
        }
    }
}

TEST(SolveMin, BaseAndInductionClausesHoldUnderMu) {
    gen::Rng rng(47);
    auto structures = gen::structure_family();
    for (int i = 0; i < 60; ++i) {
        HornSystem h = classify(gen::random_horn_clauses(rng));
        for (const auto& m : structures) {
            auto r = solve_min(m, h);
            for (auto v : r.violated) {
                EXPECT_EQ(h.clauses()[v].kind(), ClauseKind::End);
            }
            Evaluator ev(m);
            EXPECT_EQ(violated_clauses(ev, h.clause_set(), r.relations), r.violated);
        }
    }
}

TEST(SolveMax, DualExampleIsMaximal) {
    Signature sig = dual_example_signature();
    ClauseSet d = dualize(classify(dual_example(), {X1, Y1}));
    for (const auto& base : gen::structure_family()) {
        FiniteStructure m = base;
        FunctionTable g{2, {}};
        for (std::size_t i = 0; i < m.size() * m.size(); ++i) {
            g.values.push_back(static_cast<Element>((i * 7 + 1) % m.size()));
        }
        m.set_function("g", g);
        auto nu = solve_max(m, d);
        oracle::AssignmentSpace space(d.vars, m.size());
        auto sat = oracle::satisfying_assignments(m, space, d.formula());
        EXPECT_EQ(nu.satisfies_all(), !sat.empty());
        if (sat.empty()) {
            continue;
        }
        EXPECT_TRUE(sat.contains(space.encode(nu.relations)));
        std::uint64_t nu_bits = space.encode(nu.relations);
        sat.for_each([&](std::uint64_t a) { EXPECT_EQ(a & ~nu_bits, 0u); });
    }
}

TEST(SolveMax, NoBaseDualsGivesFullRelations) {
    // D has no end clauses, so its dual has no base clauses and the lfp is empty.
    ClauseSet d = normalize(reach_clauses(false), {X2});
    ASSERT_TRUE(d.is_dual_horn());
    auto r = solve_max(abc_graph(RelationTable(2, {{0, 1}})), d);
    EXPECT_EQ(r.relations[0], RelationTable::full(2, 3));
    EXPECT_TRUE(r.satisfies_all());
}

TEST(SolveMax, ComplementOfMinOfDual) {
    gen::Rng rng(53);
    auto structures = gen::structure_family(2);
    for (int i = 0; i < 40; ++i) {
        ClauseSet d = dualize(gen::random_horn_clauses(rng));
        for (const auto& m : structures) {
            auto nu = solve_max(m, d);
            auto mu = solve_min(m, classify(dualize(d)));
            for (std::size_t j = 0; j < d.vars.size(); ++j) {
                EXPECT_EQ(nu.relations[j], mu.relations[j].complement(m.size()));
            }
        }
    }
}

Lambda table_lambda(const RelationTable& r, const FiniteStructure& m) {
    // chi(x1..xk) = \/_{t in r} /\ xi = ti, using constants naming elements.
    std::vector<std::string> params;
    for (std::size_t i = 0; i < r.arity(); ++i) {
        params.push_back("p" + std::to_string(i));
    }
    std::vector<Formula> rows;
    for (const auto& t : r) {
        std::vector<Formula> eqs;
        for (std::size_t i = 0; i < t.size(); ++i) {
            eqs.push_back(Formula::equal(Term::var(params[i]), Term::app(m.element_name(t[i]))));
        }
        rows.push_back(conjoin(eqs));
    }
    return {params, disjoin(rows)};
}

TEST(Interpolant, BoundsAreInsideAndMissingTupleIsBelow) {
    HornSystem h = classify(reach_clauses(true), {X2});
    ASSERT_TRUE(is_linear(h.clause_set()));
    FiniteStructure m = abc_graph(RelationTable(2, {{0, 1}, {2, 1}}));
    auto mu = solve_min(m, h);
    ASSERT_TRUE(mu.satisfies_all());
    auto nu = solve_max(m, h.clause_set());
    EXPECT_TRUE(mu.relations[0].subset_of(nu.relations[0]));

    EXPECT_EQ(check_interpolant(m, h, {table_lambda(mu.relations[0], m)}).verdict,
              InterpolantVerdict::Inside);
    EXPECT_EQ(check_interpolant(m, h, {table_lambda(nu.relations[0], m)}).verdict,
              InterpolantVerdict::Inside);

    RelationTable missing = mu.relations[0];
    missing.erase(missing.tuples().back());
    auto below = check_interpolant(m, h, {table_lambda(missing, m)});
    EXPECT_EQ(below.verdict, InterpolantVerdict::BelowMu);
    EXPECT_FALSE(below.chi_solves);
    EXPECT_TRUE(below.fixpoint_free);

    auto above = check_interpolant(m, h, {table_lambda(RelationTable::full(2, 3), m)});
    EXPECT_EQ(above.verdict, InterpolantVerdict::AboveNu);
}

TEST(Interpolant, LfpWitnessFormulasAreInside) {
    HornSystem h = classify(reach_clauses(true), {X2});
    FiniteStructure m = abc_graph(RelationTable(2, {{0, 1}, {2, 1}}));
    auto mu = solve_min(m, h);
    const auto& comp = mu.system->component(0);
    std::vector<Term> args{Term::var(comp.params[0]), Term::var(comp.params[1])};
    auto r = check_interpolant(m, h, {{comp.params, Formula::lfp(mu.system, 0, args)}});
    EXPECT_EQ(r.verdict, InterpolantVerdict::Inside);
    EXPECT_TRUE(r.chi_solves);
    EXPECT_FALSE(r.fixpoint_free);
}

TEST(Interpolant, RejectsNonLinear) {
    HornSystem h = classify(dual_example(), {X1, Y1});
    FiniteStructure m({"e"});
    EXPECT_THROW(check_interpolant(m, h, {{{"p"}, Formula::top()}, {{"p"}, Formula::top()}}),
                 std::invalid_argument);
}

TEST(IsLinear, Examples) {
    EXPECT_TRUE(is_linear(normalize(reach_clauses(true), {X2})));
    EXPECT_FALSE(is_linear(normalize(dual_example(), {X1, Y1})));
    EXPECT_TRUE(is_linear(ClauseSet{}));
}

TEST(HornProperties, MinimalSolutionDecidesSolvability) {
    gen::Rng rng(59);
    auto structures = gen::structure_family();
    for (int i = 0; i < 60; ++i) {
        ClauseSet s = gen::random_horn_clauses(rng);
        HornSystem h = classify(s);
        for (const auto& m : structures) {
            oracle::AssignmentSpace space(s.vars, m.size());
            auto sat = oracle::satisfying_assignments(m, space, s.formula());
            auto r = solve_min(m, h);
            ASSERT_EQ(r.satisfies_all(), !sat.empty()) << to_sexpr(s.formula());
            std::uint64_t mu = space.encode(r.relations);
            EXPECT_EQ(sat.contains(mu), r.satisfies_all());
            sat.for_each([&](std::uint64_t a) { EXPECT_EQ(a & mu, mu); });
        }
    }
}

TEST(HornProperties, LinearSandwich) {
    gen::Rng rng(61);
    gen::HornShape shape;
    shape.max_body = 1;
    auto structures = gen::structure_family();
    for (int i = 0; i < 60; ++i) {
        ClauseSet s = gen::random_horn_clauses(rng, shape);
        ASSERT_TRUE(is_linear(s));
        HornSystem h = classify(s);
        for (const auto& m : structures) {
            auto mu = solve_min(m, h);
            if (!mu.satisfies_all()) {
                continue;
            }
            auto nu = solve_max(m, s);
            EXPECT_TRUE(nu.satisfies_all());
            for (std::size_t j = 0; j < s.vars.size(); ++j) {
                EXPECT_TRUE(mu.relations[j].subset_of(nu.relations[j]));
            }
        }
    }
}

} // namespace
} // namespace fixhorn
