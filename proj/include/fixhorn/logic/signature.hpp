#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "fixhorn/logic/formula.hpp"

namespace fixhorn {

// The ambient first-order language: function symbols (constants have arity 0)
// and base predicate symbols. Equality is built in and never declared.
class Signature {
public:
    void add_function(const std::string& name, std::size_t arity);
    void add_predicate(const std::string& name, std::size_t arity);
    // When enabled, decimal literals such as `3` or `-1/2` are constant symbols.
    void set_numerals(bool enabled) { numerals_ = enabled; }

    std::optional<std::size_t> function_arity(const std::string& name) const;
    std::optional<std::size_t> predicate_arity(const std::string& name) const;
    bool is_constant(const std::string& name) const;
    bool numerals() const { return numerals_; }

    const std::map<std::string, std::size_t>& functions() const { return functions_; }
    const std::map<std::string, std::size_t>& predicates() const { return predicates_; }

    friend bool operator==(const Signature&, const Signature&) = default;

private:
    std::map<std::string, std::size_t> functions_;
    std::map<std::string, std::size_t> predicates_;
    bool numerals_ = false;
};

// Decimal integer or fraction literal (`12`, `-3`, `1/2`).
bool is_numeral(std::string_view text);

// Checks symbols and arities of `t` / `f` against `sig`. Throws
// UndeclaredSymbolError or ArityError.
void validate(const Signature& sig, const Term& t);
void validate(const Signature& sig, const Formula& f);

} // namespace fixhorn
