#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <vector>

namespace fixhorn {

// A first-order term: an individual variable or a function symbol applied to
// argument terms. Constants are nullary applications.
class Term {
public:
    static Term var(std::string name);
    static Term app(std::string symbol, std::vector<Term> args = {});

    bool is_var() const { return is_var_; }
    const std::string& name() const { return name_; }
    const std::vector<Term>& args() const { return args_; }

    friend bool operator==(const Term&, const Term&) = default;
    friend auto operator<=>(const Term&, const Term&) = default;

    std::size_t hash() const;

private:
    bool is_var_ = true;
    std::string name_;
    std::vector<Term> args_;
};

// Variables of `t` in first-occurrence order, appended to `out` when not yet present.
void collect_variables(const Term& t, std::vector<std::string>& out);
std::set<std::string> variables(const Term& t);
bool occurs(const std::string& var, const Term& t);

} // namespace fixhorn
