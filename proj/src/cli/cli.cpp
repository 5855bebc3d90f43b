#include "fixhorn/cli/cli.hpp"

#include <CLI11.hpp>
#include <filesystem>
#include <iostream>
#include <random>

#include "fixhorn/affine/abstract_fixpoint.hpp"
#include "fixhorn/affine/domain.hpp"
#include "fixhorn/cli/report.hpp"
#include "fixhorn/formats/problem.hpp"
#include "fixhorn/formats/structure_json.hpp"
#include "fixhorn/horn/phi.hpp"
#include "fixhorn/horn/solve.hpp"
#include "fixhorn/imp/arith.hpp"
#include "fixhorn/imp/conditions.hpp"
#include "fixhorn/logic/errors.hpp"
#include "fixhorn/logic/printer.hpp"

namespace fixhorn {

namespace {

namespace fs = std::filesystem;

class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string file;
    std::string structure;
    std::size_t modulus = 5;
    std::size_t fuel = 200;
    std::string mode;
    std::uint64_t seed = 20240531;
    bool json = false;
    std::string pre = "true";
    std::string post = "true";
    std::string chi;
    bool greatest = false;
    std::size_t samples = 500;
    std::size_t max_arity = 3;
};

struct Outcome {
    Report report;
    int code = kExitOk;
};

Report vars_report(const std::vector<PredicateVariable>& vars) {
    Report out = Report::array();
    for (const auto& v : vars) {
        out.push_back(Report{{"name", v.name}, {"arity", v.arity}});
    }
    return out;
}

Report clauses_report(const std::vector<Clause>& clauses, bool kinds) {
    Report out = Report::array();
    for (std::size_t i = 0; i < clauses.size(); ++i) {
        Report c{{"index", i}};
        if (kinds) {
            c["kind"] = to_string(clauses[i].kind());
        }
        c["clause"] = to_sexpr(clauses[i].formula());
        out.push_back(std::move(c));
    }
    return out;
}

ProblemFile load(const Options& o) {
    if (!fs::exists(o.file)) {
        throw InputError("no such file: " + o.file);
    }
    return load_problem(o.file);
}

Mode effective_mode(const Options& o, const ProblemFile& p) {
    if (o.mode.empty()) {
        return p.mode;
    }
    Mode m = o.mode == "affine" ? Mode::Affine : Mode::Concrete;
    if (m != p.mode) {
        throw InputError(o.file + " is a " + to_string(p.mode) + " problem, not " + o.mode);
    }
    return m;
}

FiniteStructure structure_for(const Options& o, const ProblemFile& p, std::string& used) {
    if (!o.structure.empty()) {
        used = o.structure;
    } else if (p.structure) {
        used = (fs::path(o.file).parent_path() / *p.structure).string();
    } else {
        throw InputError("no structure: pass --structure or add (structure \"path\") to the problem");
    }
    if (!fs::exists(used)) {
        throw InputError("no such file: " + used);
    }
    FiniteStructure m = load_structure(used);
    m.check_interprets(p.signature);
    return m;
}

HornSystem horn_system(const ProblemFile& p) {
    ClauseSet set = normalize(p.clauses, p.vars);
    for (std::size_t i = 0; i < set.clauses.size(); ++i) {
        if (!set.clauses[i].is_horn()) {
            throw NotHornError("clause " + std::to_string(i) + " has " +
                               std::to_string(set.clauses[i].head.size()) + " head atoms: " +
                               to_sexpr(set.clauses[i].formula()) +
                               (set.is_dual_horn() ? " (the set is dual Horn)" : ""));
        }
    }
    return classify(std::move(set));
}

Outcome cmd_classify(const Options& o) {
    ProblemFile p = load(o);
    ClauseSet set = normalize(p.clauses, p.vars);
    Report r{{"command", "classify"}, {"file", o.file}, {"mode", to_string(p.mode)},
             {"vars", vars_report(p.vars)}, {"horn", set.is_horn()},
             {"dual_horn", set.is_dual_horn()}, {"linear", is_linear(set)}};
    HornSystem h = horn_system(p);
    r["clauses"] = clauses_report(h.clauses(), true);
    return {r};
}

Outcome cmd_phi(const Options& o) {
    ProblemFile p = load(o);
    auto phi = build_phi(horn_system(p));
    Report comps = Report::array();
    for (const auto& c : phi->components()) {
        comps.push_back(Report{{"var", c.var.name}, {"params", c.params}, {"body", to_sexpr(c.body)}});
    }
    return {Report{{"command", "phi"}, {"file", o.file}, {"components", comps}, {"phi", to_sexpr(*phi)}}};
}

Outcome cmd_affine_solve(const Options& o, const ProblemFile& p) {
    AffineHornSystem sys = to_affine(horn_system(p));
    AbstractLfpResult lfp = abstract_lfp(sys);
    AbstractEndReport ends = check_end_clauses_abstract(sys, lfp.value);
    Report values = Report::array();
    for (std::size_t j = 0; j < sys.vars.size(); ++j) {
        Report v{{"var", sys.vars[j].name}};
        v.update(subspace_report(lfp.value[j], default_coordinate_names(sys.vars[j].arity)));
        v["strict_steps"] = lfp.strict_steps[j];
        values.push_back(std::move(v));
    }
    std::size_t relaxed = 0;
    for (const auto& c : sys.clauses) {
        relaxed += c.relaxed;
    }
    Report violations = Report::array();
    for (const auto& v : ends.violations) {
        const auto& c = sys.clauses[v.clause];
        Report w{{"clause", c.source}};
        w["witness"] = subspace_report(v.witness, c.variables);
        violations.push_back(std::move(w));
    }
    Report r{{"command", "affine-solve"}, {"file", o.file}, {"mode", "affine"},
             {"relaxed_constraints", relaxed}, {"iterations", lfp.iterations}, {"bound", lfp.bound},
             {"dimensions", lfp.dimensions()}, {"lfp", values},
             {"end_clauses_satisfied", ends.satisfied()}, {"violations", violations}};
    return {r, ends.satisfied() ? kExitOk : kExitViolation};
}

Outcome cmd_solve(const Options& o) {
    ProblemFile p = load(o);
    if (effective_mode(o, p) == Mode::Affine) {
        return cmd_affine_solve(o, p);
    }
    std::string used;
    FiniteStructure m = structure_for(o, p, used);
    SolutionReport s;
    std::vector<Clause> clauses;
    if (o.greatest) {
        ClauseSet set = normalize(p.clauses, p.vars);
        if (!set.is_dual_horn()) {
            throw NotHornError("--greatest needs dual Horn clauses");
        }
        s = solve_max(m, set);
        clauses = set.clauses;
    } else {
        HornSystem h = horn_system(p);
        s = solve_min(m, h);
        clauses = h.clauses();
    }
    Report rels = Report::array();
    for (std::size_t j = 0; j < s.vars.size(); ++j) {
        rels.push_back(relation_report(m, s.vars[j].name, s.relations[j]));
    }
    Report violated = Report::array();
    for (auto i : s.violated) {
        violated.push_back(Report{{"index", i}, {"clause", to_sexpr(clauses[i].formula())}});
    }
    Report r{{"command", "solve"}, {"file", o.file}, {"structure", used},
             {"solution", o.greatest ? "greatest" : "least"}, {"iterations", s.iterations},
             {"relations", rels}, {"satisfied", s.satisfies_all()}, {"violated", violated}};
    return {r, s.satisfies_all() ? kExitOk : kExitViolation};
}

Outcome cmd_dualize(const Options& o) {
    ProblemFile p = load(o);
    ClauseSet set = normalize(p.clauses, p.vars);
    ClauseSet d = dualize(set);
    Report r{{"command", "dualize"}, {"file", o.file}, {"horn", d.is_horn()}, {"dual_horn", d.is_dual_horn()},
             {"clauses", clauses_report(d.clauses, false)}};
    return {r};
}

std::vector<Lambda> parse_chi(const Options& o, const ProblemFile& p) {
    if (o.chi.empty()) {
        throw InputError("interpolate needs --chi");
    }
    std::string text = fs::exists(o.chi) ? read_file(o.chi) : o.chi;
    std::map<std::string, Lambda> by_name;
    FormulaContext ctx = p.context();
    ctx.vars.clear();
    for (const auto& e : parse_sexprs(text)) {
        if (e.kind != SExpr::Kind::List || e.items.size() != 3 || !e.items[0].is_symbol() ||
            e.items[1].kind != SExpr::Kind::List) {
            throw ParseError("expected (X (params...) formula)", e.loc);
        }
        Lambda l{{}, Formula::top()};
        for (const auto& v : e.items[1].items) {
            l.params.push_back(v.text);
        }
        l.body = parse_formula(e.items[2], ctx);
        by_name.insert_or_assign(e.items[0].text, std::move(l));
    }
    std::vector<Lambda> chi;
    for (const auto& v : p.vars) {
        auto it = by_name.find(v.name);
        if (it == by_name.end()) {
            throw InputError("--chi has no candidate for " + v.name);
        }
        chi.push_back(it->second);
    }
    return chi;
}

Outcome cmd_interpolate(const Options& o) {
    ProblemFile p = load(o);
    std::string used;
    FiniteStructure m = structure_for(o, p, used);
    HornSystem h = horn_system(p);
    InterpolantReport ir = check_interpolant(m, h, parse_chi(o, p));
    Report per_var = Report::array();
    for (std::size_t j = 0; j < h.vars().size(); ++j) {
        per_var.push_back(Report{{"var", h.vars()[j].name},
                                 {"mu_size", ir.mu[j].size()},
                                 {"chi_size", ir.chi[j].size()},
                                 {"nu_size", ir.nu[j].size()},
                                 {"chi", relation_report(m, h.vars()[j].name, ir.chi[j])["tuples"]}});
    }
    Report r{{"command", "interpolate"}, {"file", o.file}, {"structure", used},
             {"verdict", to_string(ir.verdict)}, {"failing_var", ir.variable.empty() ? Report() : Report(ir.variable)},
             {"chi_solves", ir.chi_solves}, {"fixpoint_free", ir.fixpoint_free}, {"vars", per_var}};
    return {r, ir.verdict == InterpolantVerdict::Inside ? kExitOk : kExitViolation};
}

Formula state_formula(const std::string& text) {
    static const Signature sig = arith_signature();
    return parse_formula(text, FormulaContext{&sig, {}, false});
}

Program load_program(const Options& o) {
    if (!fs::exists(o.file)) {
        throw InputError("no such file: " + o.file);
    }
    return parse_program(read_file(o.file));
}

void check_modulus(const Options& o) {
    if (o.modulus < 1) {
        throw InputError("--modulus must be positive");
    }
}

Outcome cmd_vcgen(const Options& o) {
    HoareTriple t{state_formula(o.pre), load_program(o), state_formula(o.post)};
    VcResult vc = vcgen(t);
    Report conds = Report::array();
    for (const auto& c : vc.conditions) {
        conds.push_back(to_sexpr(c));
    }
    Report r{{"command", "vcgen"}, {"file", o.file}, {"pre", to_sexpr(t.pre)}, {"post", to_sexpr(t.post)},
             {"invariants", vars_report(vc.invariants)}, {"linear", is_linear(vc.clauses)},
             {"conditions", conds}, {"clauses", clauses_report(vc.system.clauses(), true)}};
    return {r};
}

Outcome cmd_transformer(const Options& o, bool strongest) {
    check_modulus(o);
    Program prog = load_program(o);
    FiniteStructure m = arith_structure(o.modulus);
    Formula f = state_formula(strongest ? o.pre : o.post);
    RelationTable fixed = strongest ? sp_lfp(m, prog, f) : wp_dual(m, prog, f);
    StateSet brute = strongest ? sp_oracle(m, prog, f, o.fuel) : wp_oracle(m, prog, f, o.fuel);
    bool agrees = fixed == brute.states;
    Report r{{"command", strongest ? "sp" : "wp"}, {"file", o.file}, {"modulus", o.modulus},
             {strongest ? "pre" : "post", to_sexpr(f)}, {"program_vars", prog.vars},
             {"states", relation_report(m, strongest ? "sp" : "wp", fixed)},
             {"oracle", Report{{"fuel", o.fuel}, {"complete", brute.complete}, {"agrees", agrees}}}};
    return {r, brute.complete && !agrees ? kExitViolation : kExitOk};
}

Outcome cmd_hoare(const Options& o) {
    check_modulus(o);
    HoareTriple t{state_formula(o.pre), load_program(o), state_formula(o.post)};
    FiniteStructure m = arith_structure(o.modulus);
    HoareVerdict v = check_hoare(m, t);
    Report inv = Report::array();
    for (std::size_t i = 0; i < v.invariants.size(); ++i) {
        inv.push_back(relation_report(m, v.vc.invariants[i].name, v.invariants[i]));
    }
    Report violated = Report::array();
    for (auto i : v.solution.violated) {
        violated.push_back(Report{{"index", i}, {"clause", to_sexpr(v.vc.system.clauses()[i].formula())}});
    }
    Report r{{"command", "hoare"}, {"file", o.file}, {"modulus", o.modulus}, {"pre", to_sexpr(t.pre)},
             {"post", to_sexpr(t.post)}, {"provable", v.provable}, {"invariants", inv}, {"violated", violated}};
    return {r, v.provable ? kExitOk : kExitViolation};
}

Outcome cmd_galois(const Options& o) {
    if (o.max_arity < 1) {
        throw InputError("--max-arity must be at least 1");
    }
    std::mt19937_64 rng(o.seed);
    std::uniform_int_distribution<int> num(-4, 4);
    std::uniform_int_distribution<int> den(1, 3);
    auto point = [&](std::size_t k) {
        Vector p;
        for (std::size_t i = 0; i < k; ++i) {
            p.push_back(Rational(num(rng), den(rng)));
        }
        return p;
    };
    std::vector<GaloisCase> cases;
    for (std::size_t i = 0; i < o.samples; ++i) {
        std::size_t k = 1 + i % o.max_arity;
        std::size_t dim = std::uniform_int_distribution<std::size_t>(0, k + 1)(rng);
        AffineSubspace y = AffineSubspace::empty(k);
        if (dim > 0) {
            Matrix dirs;
            for (std::size_t d = 1; d < dim; ++d) {
                dirs.push_back(point(k));
            }
            y = AffineSubspace::from_generators(point(k), dirs);
        }
        GaloisCase c{k, {}, y};
        auto inside = y.spanning_points();
        for (std::size_t j = 0; j <= i % 4; ++j) {
            c.sample.push_back(!inside.empty() && i % 2 == 0 ? inside[j % inside.size()] : point(k));
        }
        cases.push_back(std::move(c));
    }
    GaloisReport g = galois_law_check(AffineDomain{}, cases);
    Report r{{"command", "galois-check"}, {"domain", "affine"}, {"seed", o.seed}, {"pairs", g.pairs},
             {"max_arity", o.max_arity}, {"both_true", g.law_holds_both_true},
             {"both_false", g.law_holds_both_false}, {"law_failures", g.law_failures},
             {"extensivity_failures", g.extensivity_failures}, {"roundtrip_failures", g.roundtrip_failures},
             {"ok", g.ok()}, {"messages", g.messages}};
    return {r, g.ok() ? kExitOk : kExitViolation};
}

std::string diagnostic(const std::exception& e) {
    if (dynamic_cast<const NotHornError*>(&e)) {
        return std::string("NotHorn: ") + e.what();
    }
    if (dynamic_cast<const ParseError*>(&e)) {
        return std::string("parse error: ") + e.what();
    }
    if (dynamic_cast<const AffineError*>(&e)) {
        return std::string("not affine: ") + e.what();
    }
    if (dynamic_cast<const ArityError*>(&e) || dynamic_cast<const UndeclaredSymbolError*>(&e)) {
        return std::string("declaration error: ") + e.what();
    }
    return std::string("error: ") + e.what();
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Horn clause fixed points, verification conditions and affine abstraction"};
    app.name("fixhorn");
    app.require_subcommand(1);

    auto output_flags = [&](CLI::App* c) {
        auto* j = c->add_flag("--json", o.json, "Print the JSON report");
        c->add_flag("--text{false}", o.json, "Print the text rendering (default)")->excludes(j);
    };
    auto problem = [&](const char* name, const char* help) {
        auto* c = app.add_subcommand(name, help);
        c->add_option("file", o.file, "Problem file")->required();
        c->add_option("--mode", o.mode, "Expected mode")->check(CLI::IsMember({"concrete", "affine"}));
        output_flags(c);
        return c;
    };
    auto program = [&](const char* name, const char* help) {
        auto* c = app.add_subcommand(name, help);
        c->add_option("file", o.file, "Program file")->required();
        c->add_option("--pre", o.pre, "Precondition (s-expression)");
        c->add_option("--post", o.post, "Postcondition (s-expression)");
        c->add_option("--modulus", o.modulus, "Interpret over the integers modulo m");
        c->add_option("--fuel", o.fuel, "Loop-body executions allowed per run");
        output_flags(c);
        return c;
    };

    auto* classify_cmd = problem("classify", "Normalize and tag clauses B/I/E");
    auto* phi_cmd = problem("phi", "Print the fixed-point system of a Horn problem");
    auto* solve_cmd = problem("solve", "Least (or greatest) solution on a finite structure");
    solve_cmd->add_option("--structure", o.structure, "Structure JSON");
    solve_cmd->add_flag("--greatest", o.greatest, "Greatest solution of a dual Horn problem");
    auto* dualize_cmd = problem("dualize", "Swap bodies and heads of every clause");
    auto* interp_cmd = problem("interpolate", "Check candidates against the least and greatest solutions");
    interp_cmd->add_option("--structure", o.structure, "Structure JSON");
    interp_cmd->add_option("--chi", o.chi, "Candidates (X (params) formula)..., inline or a file path");
    auto* vcgen_cmd = program("vcgen", "Verification conditions of a Hoare triple");
    auto* sp_cmd = program("sp", "Strongest postcondition as a least fixed point");
    auto* wp_cmd = program("wp", "Weakest liberal precondition as a greatest fixed point");
    auto* hoare_cmd = program("hoare", "Decide a Hoare triple over the integers modulo m");
    auto* affine_cmd = problem("affine-solve", "Abstract least fixed point in affine subspaces");
    auto* galois_cmd = app.add_subcommand("galois-check", "Sample the Galois laws of the affine domain");
    galois_cmd->add_option("--seed", o.seed, "Random seed");
    galois_cmd->add_option("--samples", o.samples, "Number of sampled pairs");
    galois_cmd->add_option("--max-arity", o.max_arity, "Largest arity sampled");
    output_flags(galois_cmd);

    std::vector<const char*> argv{"fixhorn"};
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInputError;
    }

    try {
        Outcome result;
        if (classify_cmd->parsed()) {
            result = cmd_classify(o);
        } else if (phi_cmd->parsed()) {
            result = cmd_phi(o);
        } else if (solve_cmd->parsed()) {
            result = cmd_solve(o);
        } else if (dualize_cmd->parsed()) {
            result = cmd_dualize(o);
        } else if (interp_cmd->parsed()) {
            result = cmd_interpolate(o);
        } else if (vcgen_cmd->parsed()) {
            result = cmd_vcgen(o);
        } else if (sp_cmd->parsed()) {
            result = cmd_transformer(o, true);
        } else if (wp_cmd->parsed()) {
            result = cmd_transformer(o, false);
        } else if (hoare_cmd->parsed()) {
            result = cmd_hoare(o);
        } else if (affine_cmd->parsed()) {
            ProblemFile p = load(o);
            if (p.mode != Mode::Affine) {
                throw InputError(o.file + " is not an affine problem; add (mode affine)");
            }
            result = cmd_affine_solve(o, p);
        } else {
            result = cmd_galois(o);
        }
        out << (o.json ? result.report.dump(2) + "\n" : render_text(result.report));
        return result.code;
    } catch (const std::exception& e) {
        err << diagnostic(e) << "\n";
        return kExitInputError;
    }
}

} // namespace fixhorn
