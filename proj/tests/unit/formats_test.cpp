#include <gtest/gtest.h>

#include "fixhorn/formats/problem.hpp"
#include "fixhorn/formats/structure_json.hpp"
#include "fixhorn/horn/system.hpp"
#include "helpers.hpp"

namespace fixhorn {
namespace {

const std::filesystem::path kData = FIXHORN_DATA_DIR;

TEST(SExpr, LocationsAndComments) {
    auto es = parse_sexprs("; comment\n(a (b c)\n  \"s t\")  x");
    ASSERT_EQ(es.size(), 2u);
    EXPECT_EQ(es[0].loc.line, 2u);
    EXPECT_EQ(es[0].loc.column, 1u);
    EXPECT_EQ(es[0].items[1].items[1].text, "c");
    EXPECT_TRUE(es[0].items[2].is_string());
    EXPECT_EQ(es[0].items[2].text, "s t");
    EXPECT_EQ(es[0].items[2].loc.line, 3u);
    EXPECT_EQ(es[0].items[2].loc.column, 3u);
    EXPECT_TRUE(es[1].is_symbol("x"));
}

TEST(SExpr, Errors) {
    EXPECT_THROW(parse_sexprs("(a b"), ParseError);
    EXPECT_THROW(parse_sexprs("a)"), ParseError);
    EXPECT_THROW(parse_sexpr("a b"), ParseError);
    try {
        parse_sexprs("(a\n  \"open");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.location().line, 2u);
        EXPECT_EQ(e.location().column, 3u);
    }
}

TEST(Problem, ReachabilityGolden) {
    ProblemFile p = load_problem(kData / "reach.horn");
    EXPECT_EQ(p.clauses.size(), 2u);
    EXPECT_EQ(p.vars, (std::vector<PredicateVariable>{{"X", 2}}));
    EXPECT_EQ(p.structure, std::optional<std::string>("g3.json"));
    HornSystem h = classify(p.clauses, p.vars);
    EXPECT_EQ(h.base(0).size(), 1u);
    EXPECT_EQ(h.induction(0).size(), 1u);
}

TEST(Problem, ArityErrorCarriesLocation) {
    try {
        parse_problem("(declare-var X 2)\n(clause (forall (u v w)\n   (X u v w)))");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.location().line, 3u);
        EXPECT_EQ(e.location().column, 4u);
        EXPECT_NE(std::string(e.what()).find("expects 2"), std::string::npos);
    }
}

TEST(Problem, EmptyFileIsValid) {
    ProblemFile p = parse_problem("");
    EXPECT_TRUE(p.clauses.empty());
    EXPECT_EQ(p.mode, Mode::Concrete);
}

TEST(Problem, DeclarationsPrecedeUses) {
    EXPECT_THROW(parse_problem("(clause (X a))\n(declare-var X 1)"), ParseError);
    EXPECT_THROW(parse_problem("(declare-var X 1)\n(clause (X (f a)))"), ParseError);
}

TEST(Problem, ModeRules) {
    EXPECT_THROW(parse_problem("(declare-var X 1)\n(mode affine)"), ParseError);
    EXPECT_THROW(parse_problem("(mode affine)\n(mode affine)"), ParseError);
    EXPECT_THROW(parse_problem("(mode fancy)"), ParseError);
    EXPECT_THROW(parse_problem("(declare-var X 1)\n(clause (forall (x) (=> (aff= x 0) (X x))))"),
                 ParseError);
    ProblemFile p = load_problem(kData / "karr.horn");
    EXPECT_EQ(p.mode, Mode::Affine);
    EXPECT_EQ(p.clauses.size(), 3u);
}

TEST(Problem, UnknownDirectiveAndDuplicates) {
    EXPECT_THROW(parse_problem("(declare-thing X 1)"), ParseError);
    EXPECT_THROW(parse_problem("(declare-var X 1)(declare-pred X 1)"), ParseError);
    EXPECT_THROW(parse_problem("(declare-var X one)"), ParseError);
}

TEST(Problem, RoundTripCorpus) {
    for (const char* name : {"reach.horn", "reach_unsat.horn", "notahorn.horn", "dual_example.horn",
                             "karr.horn", "mutual.horn"}) {
        ProblemFile p = load_problem(kData / name);
        std::string text = print_problem(p);
        ProblemFile q = parse_problem(text);
        EXPECT_EQ(p, q) << name << "\n" << text;
        EXPECT_EQ(print_problem(q), text);
    }
}

TEST(Problem, RoundTripRandomClauseSets) {
    gen::Rng rng(71);
    for (int i = 0; i < 100; ++i) {
        auto g = gen::random_horn(rng);
        ProblemFile p;
        p.signature = gen::corpus_signature();
        p.vars = g.vars;
        p.clauses = g.formulas;
        EXPECT_EQ(parse_problem(print_problem(p)), p) << print_problem(p);
    }
}

TEST(Problem, MissingFile) {
    EXPECT_THROW(load_problem(kData / "does-not-exist.horn"), std::runtime_error);
}

TEST(StructureJson, LoadsGraph) {
    FiniteStructure m = load_structure(kData / "path3.json");
    EXPECT_EQ(m.size(), 3u);
    EXPECT_EQ(m.constant("c"), 2u);
    EXPECT_EQ(*m.relation("E"), RelationTable(2, {{0, 1}, {1, 2}}));
}

TEST(StructureJson, NestedFunctionTablesRoundTrip) {
    auto j = nlohmann::json::parse(R"({
      "domain": ["0", "1"],
      "functions": {"z": "0", "s": ["1", "0"], "+": [["0", "1"], ["1", "0"]]},
      "relations": {"P": ["1"], "Q": {"arity": 2, "tuples": []}},
      "modulus": 2})");
    FiniteStructure m = structure_from_json(j);
    std::vector<Element> args{1, 1};
    EXPECT_EQ(m.apply("+", args), 0u);
    EXPECT_EQ(m.constant("3"), 1u);
    EXPECT_EQ(m.relation("Q")->arity(), 2u);
    FiniteStructure back = structure_from_json(nlohmann::json::parse(structure_to_json(m).dump()));
    EXPECT_EQ(structure_to_json(back), structure_to_json(m));
}

TEST(StructureJson, Errors) {
    using nlohmann::json;
    EXPECT_THROW(structure_from_json(json::parse(R"({"domain": []})")), std::invalid_argument);
    EXPECT_THROW(structure_from_json(json::parse(R"({"domain": ["a"], "functions": {"f": ["b"]}})")),
                 std::invalid_argument);
    EXPECT_THROW(structure_from_json(json::parse(R"({"domain": ["a", "b"], "functions": {"f": ["a"]}})")),
                 std::invalid_argument);
    EXPECT_THROW(structure_from_json(json::parse(R"({"domain": ["a"], "relations": {"E": []}})")),
                 std::invalid_argument);
    EXPECT_THROW(structure_from_json(json::parse(R"({"domain": ["a"], "extra": 1})")),
                 std::invalid_argument);
}

} // namespace
} // namespace fixhorn
