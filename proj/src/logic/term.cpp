#include "fixhorn/logic/term.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace fixhorn {

Term Term::var(std::string name) {
    if (name.empty()) {
        throw std::invalid_argument("variable name must be non-empty");
    }
    Term t;
    t.is_var_ = true;
    t.name_ = std::move(name);
    return t;
}

Term Term::app(std::string symbol, std::vector<Term> args) {
    if (symbol.empty()) {
        throw std::invalid_argument("function symbol must be non-empty");
    }
    Term t;
    t.is_var_ = false;
    t.name_ = std::move(symbol);
    t.args_ = std::move(args);
    return t;
}

std::size_t Term::hash() const {
    std::size_t h = std::hash<std::string>{}(name_) ^ (is_var_ ? 0x9e3779b9u : 0x7f4a7c15u);
    for (const auto& a : args_) {
        h = h * 31 + a.hash();
    }
    return h;
}

void collect_variables(const Term& t, std::vector<std::string>& out) {
    if (t.is_var()) {
        if (std::find(out.begin(), out.end(), t.name()) == out.end()) {
            out.push_back(t.name());
        }
        return;
    }
    for (const auto& a : t.args()) {
        collect_variables(a, out);
    }
}

std::set<std::string> variables(const Term& t) {
    std::vector<std::string> vs;
    collect_variables(t, vs);
    return {vs.begin(), vs.end()};
}

bool occurs(const std::string& var, const Term& t) {
    if (t.is_var()) {
        return t.name() == var;
    }
    return std::any_of(t.args().begin(), t.args().end(),
                       [&](const Term& a) { return occurs(var, a); });
}

} // namespace fixhorn
