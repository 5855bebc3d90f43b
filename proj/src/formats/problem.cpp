#include "fixhorn/formats/problem.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "fixhorn/logic/printer.hpp"

namespace fixhorn {

std::string to_string(Mode m) { return m == Mode::Affine ? "affine" : "concrete"; }

Signature affine_signature() {
    Signature sig;
    sig.add_function("+", 2);
    sig.add_function("-", 2);
    sig.add_function("*", 2);
    sig.set_numerals(true);
    return sig;
}

FormulaContext ProblemFile::context() const {
    return {&signature, vars, mode == Mode::Affine};
}

namespace {

std::size_t arity_of(const SExpr& e) {
    std::size_t n = 0;
    auto [ptr, ec] = std::from_chars(e.text.data(), e.text.data() + e.text.size(), n);
    if (!e.is_symbol() || ec != std::errc{} || ptr != e.text.data() + e.text.size()) {
        throw ParseError("expected an arity", e.loc);
    }
    return n;
}

std::string declared_name(const SExpr& e) {
    if (!e.is_symbol() || e.text.empty() || e.text.front() == '-' ||
        std::isdigit(static_cast<unsigned char>(e.text.front()))) {
        throw ParseError("expected a symbol name", e.loc);
    }
    return e.text;
}

} // namespace

ProblemFile parse_problem(std::string_view text) {
    ProblemFile p;
    bool mode_allowed = true;
    for (const auto& d : parse_sexprs(text)) {
        std::string_view head = d.head();
        if (head.empty()) {
            throw ParseError("expected a directive", d.loc);
        }
        if (head == "mode") {
            if (!mode_allowed || d.items.size() != 2) {
                throw ParseError("(mode ...) must come first and appear once", d.loc);
            }
            if (d.items[1].is_symbol("affine")) {
                p.mode = Mode::Affine;
                p.signature = affine_signature();
            } else if (!d.items[1].is_symbol("concrete")) {
                throw ParseError("mode must be concrete or affine", d.items[1].loc);
            }
            mode_allowed = false;
            continue;
        }
        mode_allowed = false;
        if (head == "declare-fun" || head == "declare-pred" || head == "declare-var") {
            if (d.items.size() != 3) {
                throw ParseError(std::string(head) + " takes a name and an arity", d.loc);
            }
            std::string name = declared_name(d.items[1]);
            std::size_t arity = arity_of(d.items[2]);
            bool taken = p.signature.function_arity(name) || p.signature.predicate_arity(name) ||
                         std::any_of(p.vars.begin(), p.vars.end(),
                                     [&](const PredicateVariable& v) { return v.name == name; });
            if (taken) {
                throw ParseError("symbol " + name + " declared twice", d.items[1].loc);
            }
            if (head == "declare-fun") {
                p.signature.add_function(name, arity);
            } else if (head == "declare-pred") {
                p.signature.add_predicate(name, arity);
            } else {
                p.vars.push_back({name, arity});
            }
        } else if (head == "structure") {
            if (d.items.size() != 2 || !d.items[1].is_string() || p.structure) {
                throw ParseError("(structure \"path\") expected once", d.loc);
            }
            p.structure = d.items[1].text;
        } else if (head == "clause") {
            if (d.items.size() != 2) {
                throw ParseError("(clause ...) takes one formula", d.loc);
            }
            p.clauses.push_back(parse_formula(d.items[1], p.context()));
            p.clause_locations.push_back(d.items[1].loc);
        } else {
            throw ParseError("unknown directive " + std::string(head), d.loc);
        }
    }
    return p;
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot read " + path.string());
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

ProblemFile load_problem(const std::filesystem::path& path) {
    return parse_problem(read_file(path));
}

std::string print_problem(const ProblemFile& p) {
    std::ostringstream out;
    Signature builtin;
    if (p.mode == Mode::Affine) {
        out << "(mode affine)\n";
        builtin = affine_signature();
    }
    for (const auto& [name, arity] : p.signature.functions()) {
        if (!builtin.function_arity(name)) {
            out << "(declare-fun " << name << " " << arity << ")\n";
        }
    }
    for (const auto& [name, arity] : p.signature.predicates()) {
        out << "(declare-pred " << name << " " << arity << ")\n";
    }
    for (const auto& v : p.vars) {
        out << "(declare-var " << v.name << " " << v.arity << ")\n";
    }
    if (p.structure) {
        std::string escaped;
        for (char c : *p.structure) {
            if (c == '"' || c == '\\') {
                escaped.push_back('\\');
            }
            escaped.push_back(c);
        }
        out << "(structure \"" << escaped << "\")\n";
    }
    for (const auto& c : p.clauses) {
        out << "(clause " << to_sexpr(c) << ")\n";
    }
    return out.str();
}

} // namespace fixhorn
