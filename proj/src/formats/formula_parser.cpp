#include "fixhorn/formats/formula_parser.hpp"

#include <algorithm>
#include <memory>

#include "fixhorn/logic/errors.hpp"

namespace fixhorn {

namespace {

const Signature& sig_of(const FormulaContext& ctx) {
    static const Signature empty;
    return ctx.signature ? *ctx.signature : empty;
}

bool reserved(std::string_view s) {
    static const char* const words[] = {"and", "or",  "not",  "=>",  "=",   "aff=",
                                        "forall", "exists", "lfp", "true", "false"};
    return std::find(std::begin(words), std::end(words), s) != std::end(words);
}

std::string identifier(const SExpr& e, const char* what) {
    if (!e.is_symbol() || e.text.empty()) {
        throw ParseError(std::string("expected ") + what, e.loc);
    }
    if (reserved(e.text)) {
        throw ParseError("reserved word " + e.text + " used as " + what, e.loc);
    }
    return e.text;
}

const PredicateVariable* find_var(const FormulaContext& ctx, const std::string& name) {
    // Later entries shadow earlier ones (lfp-bound variables are appended).
    for (auto it = ctx.vars.rbegin(); it != ctx.vars.rend(); ++it) {
        if (it->name == name) {
            return &*it;
        }
    }
    return nullptr;
}

void expect_size(const SExpr& e, std::size_t n, std::string_view op) {
    if (e.items.size() != n) {
        throw ParseError(std::string(op) + " takes " + std::to_string(n - 1) + " operand(s)", e.loc);
    }
}

std::vector<std::string> binder_list(const SExpr& e) {
    if (!e.is_list()) {
        throw ParseError("expected a variable list", e.loc);
    }
    std::vector<std::string> vars;
    for (const auto& v : e.items) {
        vars.push_back(identifier(v, "variable"));
    }
    return vars;
}

std::vector<Term> term_args(const SExpr& e, std::size_t from, const FormulaContext& ctx) {
    std::vector<Term> args;
    for (std::size_t i = from; i < e.items.size(); ++i) {
        args.push_back(parse_term(e.items[i], ctx));
    }
    return args;
}

Formula parse_lfp(const SExpr& e, const FormulaContext& ctx) {
    // (lfp X ((X (u v) body) (Y (w) body) ...) t ...)
    if (e.items.size() < 3 || !e.items[2].is_list()) {
        throw ParseError("lfp expects a variable, a component list and arguments", e.loc);
    }
    std::string target = identifier(e.items[1], "predicate variable");
    FormulaContext inner = ctx;
    for (const auto& comp : e.items[2].items) {
        if (!comp.is_list() || comp.items.size() != 3) {
            throw ParseError("lfp component must be (X (params) body)", comp.loc);
        }
        auto params = binder_list(comp.items[1]);
        inner.vars.push_back({identifier(comp.items[0], "predicate variable"), params.size()});
    }
    std::vector<FixpointComponent> comps;
    for (const auto& comp : e.items[2].items) {
        auto params = binder_list(comp.items[1]);
        PredicateVariable v{comp.items[0].text, params.size()};
        comps.push_back({v, std::move(params), parse_formula(comp.items[2], inner)});
    }
    std::shared_ptr<const FixpointSystem> system;
    try {
        system = std::make_shared<const FixpointSystem>(std::move(comps));
    } catch (const std::exception& ex) {
        throw ParseError(ex.what(), e.loc);
    }
    auto index = system->index_of(target);
    if (!index) {
        throw ParseError("lfp target " + target + " is not a component", e.items[1].loc);
    }
    auto args = term_args(e, 3, ctx);
    if (args.size() != system->component(*index).var.arity) {
        throw ParseError("lfp atom for " + target + " has wrong number of arguments", e.loc);
    }
    return Formula::lfp(std::move(system), *index, std::move(args));
}

Formula application(const SExpr& e, const std::string& name, std::vector<Term> args,
                    const FormulaContext& ctx) {
    if (const auto* v = find_var(ctx, name)) {
        if (v->arity != args.size()) {
            throw ParseError("predicate variable " + name + " expects " +
                                 std::to_string(v->arity) + " arguments, got " +
                                 std::to_string(args.size()),
                             e.loc);
        }
        return Formula::atom(*v, std::move(args));
    }
    auto arity = sig_of(ctx).predicate_arity(name);
    if (!arity) {
        throw ParseError("undeclared predicate " + name, e.loc);
    }
    if (*arity != args.size()) {
        throw ParseError("predicate " + name + " expects " + std::to_string(*arity) +
                             " arguments, got " + std::to_string(args.size()),
                         e.loc);
    }
    return Formula::predicate(name, std::move(args));
}

} // namespace

Term parse_term(const SExpr& e, const FormulaContext& ctx) {
    const Signature& sig = sig_of(ctx);
    if (e.is_symbol()) {
        if (e.text.empty() || reserved(e.text)) {
            throw ParseError("expected a term", e.loc);
        }
        if (auto arity = sig.function_arity(e.text)) {
            if (*arity != 0) {
                throw ParseError("function " + e.text + " expects " + std::to_string(*arity) +
                                     " arguments, got 0",
                                 e.loc);
            }
            return Term::app(e.text);
        }
        if (is_numeral(e.text)) {
            throw ParseError("numeral " + e.text + " is not allowed here", e.loc);
        }
        return Term::var(e.text);
    }
    if (!e.is_list() || e.items.empty() || !e.items.front().is_symbol()) {
        throw ParseError("expected a term", e.loc);
    }
    const std::string& f = e.items.front().text;
    auto arity = sig.function_arity(f);
    if (!arity) {
        throw ParseError("undeclared function " + f, e.loc);
    }
    if (*arity != e.items.size() - 1) {
        throw ParseError("function " + f + " expects " + std::to_string(*arity) +
                             " arguments, got " + std::to_string(e.items.size() - 1),
                         e.loc);
    }
    return Term::app(f, term_args(e, 1, ctx));
}

Formula parse_formula(const SExpr& e, const FormulaContext& ctx) {
    if (e.is_string()) {
        throw ParseError("unexpected string literal", e.loc);
    }
    if (e.is_symbol()) {
        if (e.text == "true") {
            return Formula::top();
        }
        if (e.text == "false") {
            return Formula::bottom();
        }
        return application(e, identifier(e, "formula"), {}, ctx);
    }
    if (e.items.empty() || !e.items.front().is_symbol()) {
        throw ParseError("expected a formula", e.loc);
    }
    const std::string& op = e.items.front().text;
    auto subformulas = [&](std::size_t from) {
        std::vector<Formula> parts;
        for (std::size_t i = from; i < e.items.size(); ++i) {
            parts.push_back(parse_formula(e.items[i], ctx));
        }
        return parts;
    };
    if (op == "and" || op == "or") {
        auto parts = subformulas(1);
        if (parts.empty()) {
            return op == "and" ? Formula::top() : Formula::bottom();
        }
        if (parts.size() == 1) {
            return parts.front();
        }
        return op == "and" ? Formula::conj(std::move(parts)) : Formula::disj(std::move(parts));
    }
    if (op == "not") {
        expect_size(e, 2, op);
        return Formula::negate(parse_formula(e.items[1], ctx));
    }
    if (op == "=>") {
        expect_size(e, 3, op);
        return Formula::implies(parse_formula(e.items[1], ctx), parse_formula(e.items[2], ctx));
    }
    if (op == "=" || op == "aff=") {
        if (op == "aff=" && !ctx.affine) {
            throw ParseError("aff= is only available in affine mode", e.loc);
        }
        expect_size(e, 3, op);
        return Formula::equal(parse_term(e.items[1], ctx), parse_term(e.items[2], ctx));
    }
    if (op == "forall" || op == "exists") {
        expect_size(e, 3, op);
        auto vars = binder_list(e.items[1]);
        Formula body = parse_formula(e.items[2], ctx);
        return op == "forall" ? Formula::forall(vars, body) : Formula::exists(vars, body);
    }
    if (op == "lfp") {
        return parse_lfp(e, ctx);
    }
    if (op == "true" || op == "false") {
        throw ParseError(op + " takes no arguments", e.loc);
    }
    return application(e, op, term_args(e, 1, ctx), ctx);
}

Formula parse_formula(std::string_view text, const FormulaContext& ctx) {
    return parse_formula(parse_sexpr(text), ctx);
}

} // namespace fixhorn
