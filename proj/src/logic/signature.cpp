#include "fixhorn/logic/signature.hpp"

#include <cctype>

#include "fixhorn/logic/errors.hpp"

namespace fixhorn {

void Signature::add_function(const std::string& name, std::size_t arity) {
    auto [it, inserted] = functions_.emplace(name, arity);
    if (!inserted && it->second != arity) {
        throw ArityError("function symbol " + name + " redeclared with a different arity");
    }
}

void Signature::add_predicate(const std::string& name, std::size_t arity) {
    auto [it, inserted] = predicates_.emplace(name, arity);
    if (!inserted && it->second != arity) {
        throw ArityError("predicate symbol " + name + " redeclared with a different arity");
    }
}

std::optional<std::size_t> Signature::function_arity(const std::string& name) const {
    if (auto it = functions_.find(name); it != functions_.end()) {
        return it->second;
    }
    if (numerals_ && is_numeral(name)) {
        return 0;
    }
    return std::nullopt;
}

std::optional<std::size_t> Signature::predicate_arity(const std::string& name) const {
    if (auto it = predicates_.find(name); it != predicates_.end()) {
        return it->second;
    }
    return std::nullopt;
}

bool Signature::is_constant(const std::string& name) const {
    auto a = function_arity(name);
    return a && *a == 0;
}

bool is_numeral(std::string_view text) {
    std::size_t i = 0;
    if (i < text.size() && text[i] == '-') {
        ++i;
    }
    auto digits = [&]() {
        std::size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            ++i;
        }
        return i > start;
    };
    if (!digits()) {
        return false;
    }
    if (i < text.size() && text[i] == '/') {
        ++i;
        if (!digits()) {
            return false;
        }
    }
    return i == text.size();
}

void validate(const Signature& sig, const Term& t) {
    if (t.is_var()) {
        return;
    }
    auto arity = sig.function_arity(t.name());
    if (!arity) {
        throw UndeclaredSymbolError("undeclared function symbol " + t.name());
    }
    if (*arity != t.args().size()) {
        throw ArityError("function symbol " + t.name() + " expects " + std::to_string(*arity) +
                         " arguments, got " + std::to_string(t.args().size()));
    }
    for (const auto& a : t.args()) {
        validate(sig, a);
    }
}

void validate(const Signature& sig, const Formula& f) {
    if (f.is(FormulaKind::Predicate)) {
        auto arity = sig.predicate_arity(f.name());
        if (!arity) {
            throw UndeclaredSymbolError("undeclared predicate symbol " + f.name());
        }
        if (*arity != f.args().size()) {
            throw ArityError("predicate symbol " + f.name() + " expects " +
                             std::to_string(*arity) + " arguments, got " +
                             std::to_string(f.args().size()));
        }
    }
    for (const auto& t : f.args()) {
        validate(sig, t);
    }
    for (const auto& c : f.children()) {
        validate(sig, c);
    }
    if (f.is(FormulaKind::Lfp)) {
        for (const auto& c : f.system().components()) {
            validate(sig, c.body);
        }
    }
}

} // namespace fixhorn
