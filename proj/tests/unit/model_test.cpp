#include <gtest/gtest.h>

#include "fixhorn/horn/phi.hpp"
#include "fixhorn/logic/polarity.hpp"
#include "fixhorn/model/evaluator.hpp"
#include "helpers.hpp"
#include "oracle.hpp"

namespace fixhorn {
namespace {

using testing::parse;

const PredicateVariable T{"T", 2};

FiniteStructure graph(std::size_t n, const RelationTable& edges) {
    std::vector<std::string> dom;
    for (std::size_t i = 0; i < n; ++i) {
        dom.push_back(std::string(1, static_cast<char>('a' + i)));
    }
    FiniteStructure m(dom);
    m.set_relation("E", edges);
    return m;
}

Signature graph_signature(std::size_t n) {
    Signature sig;
    sig.add_predicate("E", 2);
    for (std::size_t i = 0; i < n; ++i) {
        sig.add_function(std::string(1, static_cast<char>('a' + i)), 0);
    }
    return sig;
}

void name_constants(FiniteStructure& m) {
    for (Element i = 0; i < m.size(); ++i) {
        m.set_constant(m.element_name(i), i);
    }
}

std::shared_ptr<const FixpointSystem> path_system() {
    Formula body = parse("(or (= x y) (exists (w) (and (T x w) (E w y))))", {T});
    return std::make_shared<const FixpointSystem>(
        std::vector<FixpointComponent>{{T, {"x", "y"}, body}});
}

TEST(Eval, Tautology) {
    FiniteStructure m({"a", "b"});
    m.set_relation("P", RelationTable(1, {{0}}));
    Signature sig;
    sig.add_predicate("P", 1);
    EXPECT_TRUE(eval(m, {}, {}, parse("(forall (u) (=> (P u) (P u)))", {}, sig)));
}

TEST(Eval, PathAtomOnTwoNodeGraph) {
    FiniteStructure m = graph(2, RelationTable(2, {{0, 1}}));
    name_constants(m);
    Signature sig = graph_signature(2);
    const char* path = "(lfp T ((T (x y) (or (= x y) (exists (w) (and (T x w) (E w y)))))) ";
    EXPECT_TRUE(eval(m, {}, {}, parse(std::string(path) + "a b)", {}, sig)));
    EXPECT_FALSE(eval(m, {}, {}, parse(std::string(path) + "b a)", {}, sig)));
    auto closure = oracle::warshall_closure(RelationTable(2, {{0, 1}}), 2);
    EXPECT_FALSE(closure.contains({1, 0}));
}

TEST(Eval, UnboundVariableThrows) {
    FiniteStructure m = graph(2, RelationTable(2));
    Signature sig = graph_signature(2);
    EXPECT_THROW(eval(m, {}, {}, parse("(E u a)", {}, sig)), EvalError);
    EXPECT_THROW(eval(m, {}, {}, parse("(T a a)", {T}, sig)), EvalError);
}

TEST(Eval, RelationArityMismatchThrows) {
    FiniteStructure m = graph(2, RelationTable(2));
    name_constants(m);
    RelationEnv env{{"T", RelationTable(1)}};
    EXPECT_THROW(eval(m, {}, env, parse("(T a a)", {T}, graph_signature(2))), EvalError);
}

TEST(Lfp, PathOnThreeNodeChainIsClosure) {
    RelationTable edges(2, {{0, 1}, {1, 2}});
    FiniteStructure m = graph(3, edges);
    LfpResult r = lfp_solve(m, *path_system());
    RelationTable expected(2, {{0, 0}, {1, 1}, {2, 2}, {0, 1}, {1, 2}, {0, 2}});
    EXPECT_EQ(r.relations.front(), expected);
    EXPECT_EQ(r.relations.front(), oracle::warshall_closure(edges, 3));
}

TEST(Lfp, EmptyDisjunctionGivesEmptyRelation) {
    FiniteStructure m({"a", "b"});
    FixpointSystem sys({{{"X", 1}, {"x"}, Formula::bottom()}});
    LfpResult r = lfp_solve(m, sys);
    EXPECT_TRUE(r.relations.front().empty());
    EXPECT_EQ(r.iterations, 0u);
}

TEST(Lfp, TrivialBodyGivesFullRelationInOneStep) {
    FiniteStructure m({"a", "b", "c"});
    FixpointSystem sys({{{"X", 1}, {"x"}, parse("(= x x)")}});
    LfpResult r = lfp_solve(m, sys);
    EXPECT_EQ(r.relations.front(), RelationTable::full(1, 3));
    EXPECT_EQ(r.iterations, 1u);
}

TEST(Lfp, SimultaneousComponentsUpdateFromPreviousStage) {
    // X(x) <- x = a;  Y(x) <- X(x). Y lags one stage behind X.
    FiniteStructure m({"a", "b"});
    m.set_constant("a", 0);
    Signature sig;
    sig.add_function("a", 0);
    PredicateVariable x{"X", 1};
    PredicateVariable y{"Y", 1};
    FixpointSystem sys({{x, {"u"}, parse("(= u a)", {}, sig)}, {y, {"u"}, parse("(X u)", {x}, sig)}});
    LfpResult r = lfp_solve(m, sys, true);
    EXPECT_EQ(r.iterations, 2u);
    ASSERT_EQ(r.stages.size(), 3u);
    EXPECT_TRUE(r.stages[1][1].empty());
    EXPECT_EQ(r.stages[2][1], RelationTable(1, {{0}}));
}

TEST(ApplyF, FixedPointIsPreserved) {
    FiniteStructure m = graph(3, RelationTable(2, {{0, 1}, {1, 2}, {2, 0}}));
    auto sys = path_system();
    LfpResult r = lfp_solve(m, *sys);
    EXPECT_EQ(apply_F(m, *sys, r.relations), r.relations);
}

TEST(ApplyF, EmptyStageGivesDiagonal) {
    gen::Rng rng(3);
    for (int i = 0; i < 20; ++i) {
        std::size_t n = 1 + i % 5;
        FiniteStructure m = graph(n, gen::random_digraph(n, 0.4, rng));
        std::vector<RelationTable> empty{RelationTable(2)};
        std::vector<Tuple> diag;
        for (Element v = 0; v < n; ++v) {
            diag.push_back({v, v});
        }
        EXPECT_EQ(apply_F(m, *path_system(), empty).front(), RelationTable(2, diag));
    }
}

RelationTable random_relation(std::size_t arity, std::size_t n, gen::Rng& rng) {
    std::vector<Tuple> tuples;
    for (std::size_t r = 0; r < tuple_count(arity, n); ++r) {
        if (rng() % 2) {
            tuples.push_back(tuple_at(r, arity, n));
        }
    }
    return RelationTable(arity, std::move(tuples));
}

TEST(ApplyF, MonotoneOnSampledPairs) {
    gen::Rng rng(5);
    for (int i = 0; i < 100; ++i) {
        std::size_t n = 1 + i % 4;
        FiniteStructure m = graph(n, gen::random_digraph(n, 0.5, rng));
        RelationTable small = random_relation(2, n, rng);
        RelationTable big = small;
        for (const auto& t : random_relation(2, n, rng)) {
            big.insert(t);
        }
        auto fs = apply_F(m, *path_system(), std::vector<RelationTable>{small});
        auto fb = apply_F(m, *path_system(), std::vector<RelationTable>{big});
        EXPECT_TRUE(fs.front().subset_of(fb.front()));
    }
}

// Random Phi systems come from the Horn construction over the corpus language.
std::vector<std::shared_ptr<const FixpointSystem>> random_systems(std::size_t count,
                                                                  std::size_t max_arity,
                                                                  std::uint64_t seed) {
    gen::Rng rng(seed);
    gen::HornShape shape;
    shape.max_arity = max_arity;
    std::vector<std::shared_ptr<const FixpointSystem>> out;
    while (out.size() < count) {
        out.push_back(build_phi(classify(gen::random_horn_clauses(rng, shape))));
    }
    return out;
}

TEST(LfpProperties, StagesAscendAndEndAtAFixedPoint) {
    auto structures = gen::structure_family();
    for (const auto& sys : random_systems(60, 2, 21)) {
        for (const auto& m : structures) {
            LfpResult r = lfp_solve(m, *sys, true);
            ASSERT_EQ(r.stages.size(), r.iterations + 1);
            for (std::size_t i = 0; i + 1 < r.stages.size(); ++i) {
                for (std::size_t j = 0; j < sys->size(); ++j) {
                    EXPECT_TRUE(r.stages[i][j].subset_of(r.stages[i + 1][j]));
                }
                EXPECT_NE(r.stages[i], r.stages[i + 1]);
            }
            EXPECT_EQ(r.stages.back(), r.relations);
            EXPECT_EQ(apply_F(m, *sys, r.relations), r.relations);
            std::size_t bound = 1;
            for (const auto& c : sys->components()) {
                bound += tuple_count(c.var.arity, m.size());
            }
            EXPECT_LE(r.iterations, bound);
        }
    }
}

TEST(LfpProperties, LeastAmongAllPrefixedPoints) {
    auto structures = gen::structure_family(2);
    for (const auto& sys : random_systems(25, 1, 23)) {
        std::vector<PredicateVariable> vars;
        for (const auto& c : sys->components()) {
            vars.push_back(c.var);
        }
        for (const auto& m : structures) {
            oracle::AssignmentSpace space(vars, m.size());
            LfpResult r = lfp_solve(m, *sys);
            for (std::uint64_t a = 0; a < space.count(); ++a) {
                auto rel = space.decode(a);
                auto next = apply_F(m, *sys, rel);
                bool prefixed = true;
                for (std::size_t j = 0; j < rel.size(); ++j) {
                    prefixed = prefixed && next[j].subset_of(rel[j]);
                }
                if (prefixed) {
                    for (std::size_t j = 0; j < rel.size(); ++j) {
                        EXPECT_TRUE(r.relations[j].subset_of(rel[j]));
                    }
                }
            }
        }
    }
}

TEST(LfpProperties, PathPrefixedPointsExhaustive) {
    // All 512 binary relations on three nodes.
    FiniteStructure m = graph(3, RelationTable(2, {{0, 1}, {1, 2}}));
    auto sys = path_system();
    auto mu = lfp_solve(m, *sys).relations.front();
    oracle::AssignmentSpace space({T}, 3);
    std::size_t prefixed = 0;
    for (std::uint64_t a = 0; a < space.count(); ++a) {
        auto rel = space.decode(a);
        if (apply_F(m, *sys, rel).front().subset_of(rel.front())) {
            ++prefixed;
            EXPECT_TRUE(mu.subset_of(rel.front()));
        }
    }
    EXPECT_GT(prefixed, 1u);
}

TEST(EvalProperties, MonotoneInPositiveVariables) {
    gen::Rng rng(29);
    const PredicateVariable x{"X", 1};
    auto structures = gen::structure_family(2);
    int checked = 0;
    while (checked < 200) {
        Formula f = gen::random_formula(rng, {x}, 4);
        if (polarity(x, f) != Polarity::Positive) {
            continue;
        }
        ++checked;
        for (const auto& m : structures) {
            RelationTable small = random_relation(1, m.size(), rng);
            RelationTable big = small;
            for (const auto& t : random_relation(1, m.size(), rng)) {
                big.insert(t);
            }
            bool lo = eval(m, {}, {{"X", small}}, f);
            bool hi = eval(m, {}, {{"X", big}}, f);
            EXPECT_TRUE(!lo || hi) << to_sexpr(f);
        }
    }
}

TEST(EvalProperties, AgreesWithGroundingOracle) {
    gen::Rng rng(31);
    const PredicateVariable x{"X", 1};
    const PredicateVariable y{"Y", 2};
    auto structures = gen::structure_family(2);
    for (int i = 0; i < 100; ++i) {
        Formula f = gen::random_formula(rng, {x, y}, 4);
        for (const auto& m : structures) {
            oracle::AssignmentSpace space({x, y}, m.size());
            auto sat = oracle::satisfying_assignments(m, space, f);
            Evaluator ev(m);
            for (std::uint64_t a = 0; a < space.count(); a += 1 + space.count() / 64) {
                auto rel = space.decode(a);
                EXPECT_EQ(ev.eval(f, {}, {{"X", rel[0]}, {"Y", rel[1]}}), sat.contains(a));
            }
        }
    }
}

TEST(Evaluator, MemoizesClosedNestedSystems) {
    FiniteStructure m = graph(3, RelationTable(2, {{0, 1}, {1, 2}}));
    name_constants(m);
    Signature sig = graph_signature(3);
    Formula f = parse(
        "(forall (u v) (=> (lfp T ((T (x y) (or (= x y) (exists (w) (and (T x w) (E w y)))))) u v)"
        " (lfp T ((T (x y) (or (= x y) (exists (w) (and (T x w) (E w y)))))) u v)))",
        {}, sig);
    Evaluator ev(m);
    EXPECT_TRUE(ev.eval(f));
    EXPECT_EQ(ev.cache_size(), 1u);
}

TEST(Evaluator, NestedSystemWithFreePredicateVariable) {
    // Reach(x, y) over the edges of a free relation variable R.
    FiniteStructure m = graph(3, RelationTable(2));
    name_constants(m);
    Signature sig = graph_signature(3);
    PredicateVariable r{"R", 2};
    Formula f = parse("(lfp T ((T (x y) (or (R x y) (exists (w) (and (T x w) (R w y)))))) a c)", {r},
                      sig);
    EXPECT_TRUE(eval(m, {}, {{"R", RelationTable(2, {{0, 1}, {1, 2}})}}, f));
    EXPECT_FALSE(eval(m, {}, {{"R", RelationTable(2, {{0, 1}})}}, f));
}

} // namespace
} // namespace fixhorn
