#include "fixhorn/model/structure.hpp"

#include <charconv>
#include <stdexcept>

#include "fixhorn/logic/errors.hpp"

namespace fixhorn {

FiniteStructure::FiniteStructure(std::vector<std::string> domain) : domain_(std::move(domain)) {
    if (domain_.empty()) {
        throw std::invalid_argument("a structure needs a non-empty domain");
    }
    for (std::size_t i = 0; i < domain_.size(); ++i) {
        if (!index_.emplace(domain_[i], static_cast<Element>(i)).second) {
            throw std::invalid_argument("duplicate domain element " + domain_[i]);
        }
    }
}

std::optional<Element> FiniteStructure::element(const std::string& name) const {
    if (auto it = index_.find(name); it != index_.end()) {
        return it->second;
    }
    return std::nullopt;
}

void FiniteStructure::set_function(const std::string& name, FunctionTable table) {
    if (table.values.size() != tuple_count(table.arity, size())) {
        throw std::invalid_argument("function table for " + name + " is not total");
    }
    for (auto v : table.values) {
        if (v >= size()) {
            throw std::invalid_argument("function table for " + name + " leaves the domain");
        }
    }
    functions_[name] = std::move(table);
}

void FiniteStructure::set_constant(const std::string& name, Element value) {
    set_function(name, FunctionTable{0, {value}});
}

void FiniteStructure::set_relation(const std::string& name, RelationTable rel) {
    for (const auto& t : rel) {
        for (auto e : t) {
            if (e >= size()) {
                throw std::invalid_argument("relation " + name + " has a tuple outside the domain");
            }
        }
    }
    relations_.insert_or_assign(name, std::move(rel));
}

void FiniteStructure::set_numeral_modulus(std::optional<std::size_t> m) {
    if (m && *m != size()) {
        throw std::invalid_argument("numeral modulus must equal the domain size");
    }
    numeral_modulus_ = m;
}

const FunctionTable* FiniteStructure::function(const std::string& name) const {
    auto it = functions_.find(name);
    return it == functions_.end() ? nullptr : &it->second;
}

const RelationTable* FiniteStructure::relation(const std::string& name) const {
    auto it = relations_.find(name);
    return it == relations_.end() ? nullptr : &it->second;
}

Element FiniteStructure::constant(const std::string& name) const {
    if (const auto* f = function(name)) {
        if (f->arity != 0) {
            throw ArityError(name + " is not a constant");
        }
        return f->values.front();
    }
    if (numeral_modulus_ && is_numeral(name) && name.find('/') == std::string::npos) {
        long long v = 0;
        std::from_chars(name.data(), name.data() + name.size(), v);
        auto m = static_cast<long long>(*numeral_modulus_);
        return static_cast<Element>(((v % m) + m) % m);
    }
    throw UndeclaredSymbolError("constant " + name + " is not interpreted by the structure");
}

Element FiniteStructure::apply(const std::string& name, std::span<const Element> args) const {
    if (args.empty()) {
        return constant(name);
    }
    const auto* f = function(name);
    if (!f) {
        throw UndeclaredSymbolError("function " + name + " is not interpreted by the structure");
    }
    if (f->arity != args.size()) {
        throw ArityError("function " + name + " applied to " + std::to_string(args.size()) +
                         " arguments");
    }
    std::size_t rank = 0;
    for (auto a : args) {
        rank = rank * size() + a;
    }
    return f->values[rank];
}

void FiniteStructure::check_interprets(const Signature& sig) const {
    for (const auto& [name, arity] : sig.functions()) {
        const auto* f = function(name);
        if (!f) {
            throw UndeclaredSymbolError("structure does not interpret function " + name);
        }
        if (f->arity != arity) {
            throw ArityError("structure interprets " + name + " with arity " +
                             std::to_string(f->arity));
        }
    }
    for (const auto& [name, arity] : sig.predicates()) {
        const auto* r = relation(name);
        if (!r) {
            throw UndeclaredSymbolError("structure does not interpret predicate " + name);
        }
        if (r->arity() != arity) {
            throw ArityError("structure interprets " + name + " with arity " +
                             std::to_string(r->arity()));
        }
    }
}

} // namespace fixhorn
