#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fixhorn/logic/signature.hpp"
#include "fixhorn/model/relation.hpp"

namespace fixhorn {

// Total function domain^arity -> domain, stored densely in lexicographic tuple order.
struct FunctionTable {
    std::size_t arity = 0;
    std::vector<Element> values;
};

// An explicit finite L-structure. Elements are opaque names with an injective
// index; functions are total tables and base relations are RelationTables.
class FiniteStructure {
public:
    explicit FiniteStructure(std::vector<std::string> domain);

    std::size_t size() const { return domain_.size(); }
    const std::vector<std::string>& domain() const { return domain_; }
    const std::string& element_name(Element e) const { return domain_.at(e); }
    std::optional<Element> element(const std::string& name) const;

    void set_function(const std::string& name, FunctionTable table);
    // Shorthand for a nullary function.
    void set_constant(const std::string& name, Element value);
    void set_relation(const std::string& name, RelationTable rel);
    // Numeral constants `c` evaluate to element (c mod m) when set.
    void set_numeral_modulus(std::optional<std::size_t> m);

    const FunctionTable* function(const std::string& name) const;
    const RelationTable* relation(const std::string& name) const;
    std::optional<std::size_t> numeral_modulus() const { return numeral_modulus_; }
    const std::map<std::string, FunctionTable>& functions() const { return functions_; }
    const std::map<std::string, RelationTable>& relations() const { return relations_; }

    // Value of a constant symbol, including numerals. Throws when uninterpreted.
    Element constant(const std::string& name) const;
    Element apply(const std::string& name, std::span<const Element> args) const;

    // Every symbol of `sig` is interpreted with matching arity.
    void check_interprets(const Signature& sig) const;

private:
    std::vector<std::string> domain_;
    std::map<std::string, Element> index_;
    std::map<std::string, FunctionTable> functions_;
    std::map<std::string, RelationTable> relations_;
    std::optional<std::size_t> numeral_modulus_;
};

} // namespace fixhorn
