#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "fixhorn/logic/term.hpp"

namespace fixhorn {

struct PredicateVariable {
    std::string name;
    std::size_t arity = 0;

    friend bool operator==(const PredicateVariable&, const PredicateVariable&) = default;
    friend auto operator<=>(const PredicateVariable&, const PredicateVariable&) = default;
};

enum class FormulaKind {
    True,
    False,
    Predicate,          // base predicate symbol of the signature
    PredicateVariable,  // X(t...)
    Equal,
    Not,
    And,
    Or,
    Implies,
    Forall,
    Exists,
    Lfp,                // [lfp_{X_j} Phi](t...)
};

class FixpointSystem;

// Immutable first-order formula with predicate variables and a simultaneous
// least-fixed-point predicate former. Copies share structure.
class Formula {
public:
    static Formula top();
    static Formula bottom();
    static Formula predicate(std::string symbol, std::vector<Term> args);
    static Formula atom(const PredicateVariable& var, std::vector<Term> args);
    static Formula equal(Term lhs, Term rhs);
    static Formula negate(Formula f);
    static Formula conj(std::vector<Formula> parts);
    static Formula disj(std::vector<Formula> parts);
    static Formula implies(Formula premise, Formula conclusion);
    static Formula forall(std::string var, Formula body);
    static Formula exists(std::string var, Formula body);
    static Formula forall(const std::vector<std::string>& vars, Formula body);
    static Formula exists(const std::vector<std::string>& vars, Formula body);
    static Formula lfp(std::shared_ptr<const FixpointSystem> system, std::size_t index,
                       std::vector<Term> args);

    FormulaKind kind() const;
    bool is(FormulaKind k) const { return kind() == k; }

    // Predicate, PredicateVariable: the symbol. Forall/Exists: the bound variable.
    const std::string& name() const;
    // PredicateVariable only.
    PredicateVariable variable() const;
    // Predicate, PredicateVariable, Lfp: argument terms. Equal: both sides.
    const std::vector<Term>& args() const;
    // Not/And/Or/Implies: operands. Forall/Exists: the body as the single child.
    const std::vector<Formula>& children() const;
    const Formula& child(std::size_t i) const { return children().at(i); }
    const Formula& body() const { return children().at(0); }

    const FixpointSystem& system() const;
    const std::shared_ptr<const FixpointSystem>& system_ptr() const;
    std::size_t lfp_index() const;

    std::size_t hash() const;
    // Structural equality (bound variable names are significant).
    friend bool operator==(const Formula& a, const Formula& b);

    struct Node;

private:
    explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

struct FixpointComponent {
    PredicateVariable var;
    std::vector<std::string> params;
    Formula body;

    friend bool operator==(const FixpointComponent&, const FixpointComponent&) = default;
};

// Phi = (phi_1(X_1..X_n, x_1), ..., phi_n(X_1..X_n, x_n)). Construction checks that
// every X_i occurs only positively in every body, that |x_j| = arity(X_j), and that
// the free individual variables of phi_j are among x_j.
class FixpointSystem {
public:
    explicit FixpointSystem(std::vector<FixpointComponent> components);

    const std::vector<FixpointComponent>& components() const { return components_; }
    const FixpointComponent& component(std::size_t i) const { return components_.at(i); }
    std::size_t size() const { return components_.size(); }
    std::optional<std::size_t> index_of(const std::string& var) const;
    bool binds(const std::string& var) const { return index_of(var).has_value(); }

    std::size_t hash() const { return hash_; }
    friend bool operator==(const FixpointSystem& a, const FixpointSystem& b) {
        return a.hash_ == b.hash_ && a.components_ == b.components_;
    }

private:
    std::vector<FixpointComponent> components_;
    std::size_t hash_ = 0;
};

// Convenience builders that flatten and drop neutral elements.
Formula conjoin(const std::vector<Formula>& parts);
Formula disjoin(const std::vector<Formula>& parts);

std::set<std::string> free_individual_variables(const Formula& f);
// Same set in first-occurrence order (left to right), appended to `out`.
void collect_free_variables(const Formula& f, std::vector<std::string>& out);
// Predicate variables occurring free (not bound by an enclosing lfp system).
std::set<std::string> free_predicate_variables(const Formula& f);
bool has_predicate_variables(const Formula& f);
bool has_fixpoints(const Formula& f);
// All variable names occurring anywhere (free or bound).
void collect_all_variables(const Formula& f, std::set<std::string>& out);

} // namespace fixhorn

template <>
struct std::hash<fixhorn::Formula> {
    std::size_t operator()(const fixhorn::Formula& f) const noexcept { return f.hash(); }
};
