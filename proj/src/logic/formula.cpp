#include "fixhorn/logic/formula.hpp"

#include <algorithm>
#include <functional>

#include "fixhorn/logic/errors.hpp"
#include "fixhorn/logic/polarity.hpp"

namespace fixhorn {

struct Formula::Node {
    FormulaKind kind = FormulaKind::True;
    std::string name;
    std::size_t arity = 0;
    std::vector<Term> args;
    std::vector<Formula> children;
    std::shared_ptr<const FixpointSystem> system;
    std::size_t index = 0;
    std::size_t hash = 0;
};

namespace {

std::size_t mix(std::size_t h, std::size_t v) {
    return h ^ (v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2));
}

std::shared_ptr<const Formula::Node> finish(Formula::Node n) {
    std::size_t h = static_cast<std::size_t>(n.kind) * 0x100000001b3ull;
    h = mix(h, std::hash<std::string>{}(n.name));
    h = mix(h, n.arity);
    for (const auto& t : n.args) {
        h = mix(h, t.hash());
    }
    for (const auto& c : n.children) {
        h = mix(h, c.hash());
    }
    if (n.system) {
        h = mix(h, n.system->hash());
        h = mix(h, n.index);
    }
    n.hash = h;
    return std::make_shared<const Formula::Node>(std::move(n));
}

Formula::Node make_node(FormulaKind kind, std::string name = {}, std::size_t arity = 0) {
    Formula::Node n;
    n.kind = kind;
    n.name = std::move(name);
    n.arity = arity;
    return n;
}

} // namespace

Formula Formula::top() {
    static const Formula t{finish(make_node(FormulaKind::True))};
    return t;
}

Formula Formula::bottom() {
    static const Formula f{finish(make_node(FormulaKind::False))};
    return f;
}

Formula Formula::predicate(std::string symbol, std::vector<Term> args) {
    Node n = make_node(FormulaKind::Predicate, std::move(symbol));
    n.arity = args.size();
    n.args = std::move(args);
    return Formula{finish(std::move(n))};
}

Formula Formula::atom(const PredicateVariable& var, std::vector<Term> args) {
    if (args.size() != var.arity) {
        throw ArityError("predicate variable " + var.name + " expects " +
                         std::to_string(var.arity) + " arguments, got " +
                         std::to_string(args.size()));
    }
    Node n = make_node(FormulaKind::PredicateVariable, var.name, var.arity);
    n.args = std::move(args);
    return Formula{finish(std::move(n))};
}

Formula Formula::equal(Term lhs, Term rhs) {
    Node n = make_node(FormulaKind::Equal);
    n.args = {std::move(lhs), std::move(rhs)};
    return Formula{finish(std::move(n))};
}

Formula Formula::negate(Formula f) {
    Node n = make_node(FormulaKind::Not);
    n.children = {std::move(f)};
    return Formula{finish(std::move(n))};
}

Formula Formula::conj(std::vector<Formula> parts) {
    Node n = make_node(FormulaKind::And);
    n.children = std::move(parts);
    return Formula{finish(std::move(n))};
}

Formula Formula::disj(std::vector<Formula> parts) {
    Node n = make_node(FormulaKind::Or);
    n.children = std::move(parts);
    return Formula{finish(std::move(n))};
}

Formula Formula::implies(Formula premise, Formula conclusion) {
    Node n = make_node(FormulaKind::Implies);
    n.children = {std::move(premise), std::move(conclusion)};
    return Formula{finish(std::move(n))};
}

Formula Formula::forall(std::string var, Formula body) {
    Node n = make_node(FormulaKind::Forall, Term::var(std::move(var)).name());
    n.children = {std::move(body)};
    return Formula{finish(std::move(n))};
}

Formula Formula::exists(std::string var, Formula body) {
    Node n = make_node(FormulaKind::Exists, Term::var(std::move(var)).name());
    n.children = {std::move(body)};
    return Formula{finish(std::move(n))};
}

Formula Formula::forall(const std::vector<std::string>& vars, Formula body) {
    for (auto it = vars.rbegin(); it != vars.rend(); ++it) {
        body = forall(*it, std::move(body));
    }
    return body;
}

Formula Formula::exists(const std::vector<std::string>& vars, Formula body) {
    for (auto it = vars.rbegin(); it != vars.rend(); ++it) {
        body = exists(*it, std::move(body));
    }
    return body;
}

Formula Formula::lfp(std::shared_ptr<const FixpointSystem> system, std::size_t index,
                     std::vector<Term> args) {
    if (!system || index >= system->size()) {
        throw std::invalid_argument("lfp atom refers to a missing system component");
    }
    const auto& comp = system->component(index);
    if (args.size() != comp.var.arity) {
        throw ArityError("lfp atom for " + comp.var.name + " expects " +
                         std::to_string(comp.var.arity) + " arguments, got " +
                         std::to_string(args.size()));
    }
    Node n = make_node(FormulaKind::Lfp, comp.var.name, comp.var.arity);
    n.args = std::move(args);
    n.system = std::move(system);
    n.index = index;
    return Formula{finish(std::move(n))};
}

FormulaKind Formula::kind() const { return node_->kind; }

const std::string& Formula::name() const { return node_->name; }

PredicateVariable Formula::variable() const { return {node_->name, node_->arity}; }

const std::vector<Term>& Formula::args() const { return node_->args; }

const std::vector<Formula>& Formula::children() const { return node_->children; }

const FixpointSystem& Formula::system() const {
    if (!node_->system) {
        throw std::logic_error("not an lfp atom");
    }
    return *node_->system;
}

const std::shared_ptr<const FixpointSystem>& Formula::system_ptr() const { return node_->system; }

std::size_t Formula::lfp_index() const { return node_->index; }

std::size_t Formula::hash() const { return node_->hash; }

bool operator==(const Formula& a, const Formula& b) {
    if (a.node_ == b.node_) {
        return true;
    }
    const auto& x = *a.node_;
    const auto& y = *b.node_;
    if (x.hash != y.hash || x.kind != y.kind || x.name != y.name || x.arity != y.arity ||
        x.index != y.index || x.args != y.args || x.children != y.children) {
        return false;
    }
    if (x.system == y.system) {
        return true;
    }
    return x.system && y.system && *x.system == *y.system;
}

// ---------------------------------------------------------------------------

namespace {

void scan_atoms(const Formula& f, const std::string& var, std::size_t arity) {
    switch (f.kind()) {
    case FormulaKind::PredicateVariable:
        if (f.name() == var && f.args().size() != arity) {
            throw ArityError("predicate variable " + var + " used with inconsistent arity");
        }
        return;
    case FormulaKind::Lfp:
        if (f.system().binds(var)) {
            return;
        }
        for (const auto& c : f.system().components()) {
            scan_atoms(c.body, var, arity);
        }
        return;
    default:
        for (const auto& c : f.children()) {
            scan_atoms(c, var, arity);
        }
    }
}

} // namespace

FixpointSystem::FixpointSystem(std::vector<FixpointComponent> components)
    : components_(std::move(components)) {
    std::set<std::string> names;
    for (const auto& c : components_) {
        if (!names.insert(c.var.name).second) {
            throw std::invalid_argument("fixed-point system binds " + c.var.name + " twice");
        }
        if (c.params.size() != c.var.arity) {
            throw ArityError("fixed-point component " + c.var.name + " has " +
                             std::to_string(c.params.size()) + " parameters but arity " +
                             std::to_string(c.var.arity));
        }
        std::set<std::string> ps(c.params.begin(), c.params.end());
        if (ps.size() != c.params.size()) {
            throw std::invalid_argument("fixed-point component " + c.var.name +
                                        " repeats a parameter");
        }
    }
    for (const auto& c : components_) {
        for (const auto& other : components_) {
            scan_atoms(c.body, other.var.name, other.var.arity);
            Polarity p = polarity(other.var, c.body);
            if (p == Polarity::Negative || p == Polarity::Both) {
                throw PositivityError(other.var.name + " occurs negatively in the body of " +
                                      c.var.name);
            }
        }
        for (const auto& v : free_individual_variables(c.body)) {
            if (std::find(c.params.begin(), c.params.end(), v) == c.params.end()) {
                throw std::invalid_argument("fixed-point component " + c.var.name +
                                            " has free variable " + v +
                                            " outside its parameters");
            }
        }
    }
    std::size_t h = components_.size();
    for (const auto& c : components_) {
        h = mix(h, std::hash<std::string>{}(c.var.name));
        h = mix(h, c.var.arity);
        for (const auto& p : c.params) {
            h = mix(h, std::hash<std::string>{}(p));
        }
        h = mix(h, c.body.hash());
    }
    hash_ = h;
}

std::optional<std::size_t> FixpointSystem::index_of(const std::string& var) const {
    for (std::size_t i = 0; i < components_.size(); ++i) {
        if (components_[i].var.name == var) {
            return i;
        }
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------

Formula conjoin(const std::vector<Formula>& parts) {
    std::vector<Formula> flat;
    for (const auto& p : parts) {
        if (p.is(FormulaKind::True)) {
            continue;
        }
        if (p.is(FormulaKind::False)) {
            return Formula::bottom();
        }
        if (p.is(FormulaKind::And)) {
            for (const auto& c : p.children()) {
                flat.push_back(c);
            }
            continue;
        }
        flat.push_back(p);
    }
    if (flat.empty()) {
        return Formula::top();
    }
    if (flat.size() == 1) {
        return flat.front();
    }
    return Formula::conj(std::move(flat));
}

Formula disjoin(const std::vector<Formula>& parts) {
    std::vector<Formula> flat;
    for (const auto& p : parts) {
        if (p.is(FormulaKind::False)) {
            continue;
        }
        if (p.is(FormulaKind::True)) {
            return Formula::top();
        }
        if (p.is(FormulaKind::Or)) {
            for (const auto& c : p.children()) {
                flat.push_back(c);
            }
            continue;
        }
        flat.push_back(p);
    }
    if (flat.empty()) {
        return Formula::bottom();
    }
    if (flat.size() == 1) {
        return flat.front();
    }
    return Formula::disj(std::move(flat));
}

namespace {

void free_vars_rec(const Formula& f, std::vector<std::string>& bound,
                   std::vector<std::string>& out) {
    auto add_term = [&](const Term& t) {
        std::vector<std::string> vs;
        collect_variables(t, vs);
        for (auto& v : vs) {
            if (std::find(bound.begin(), bound.end(), v) == bound.end() &&
                std::find(out.begin(), out.end(), v) == out.end()) {
                out.push_back(v);
            }
        }
    };
    switch (f.kind()) {
    case FormulaKind::Predicate:
    case FormulaKind::PredicateVariable:
    case FormulaKind::Equal:
    case FormulaKind::Lfp:
        for (const auto& t : f.args()) {
            add_term(t);
        }
        return;
    case FormulaKind::Forall:
    case FormulaKind::Exists:
        bound.push_back(f.name());
        free_vars_rec(f.body(), bound, out);
        bound.pop_back();
        return;
    default:
        for (const auto& c : f.children()) {
            free_vars_rec(c, bound, out);
        }
    }
}

void free_pvars_rec(const Formula& f, std::set<std::string>& bound, std::set<std::string>& out) {
    switch (f.kind()) {
    case FormulaKind::PredicateVariable:
        if (!bound.contains(f.name())) {
            out.insert(f.name());
        }
        return;
    case FormulaKind::Lfp: {
        std::set<std::string> inner = bound;
        for (const auto& c : f.system().components()) {
            inner.insert(c.var.name);
        }
        for (const auto& c : f.system().components()) {
            free_pvars_rec(c.body, inner, out);
        }
        return;
    }
    default:
        for (const auto& c : f.children()) {
            free_pvars_rec(c, bound, out);
        }
    }
}

} // namespace

void collect_free_variables(const Formula& f, std::vector<std::string>& out) {
    std::vector<std::string> bound;
    free_vars_rec(f, bound, out);
}

std::set<std::string> free_individual_variables(const Formula& f) {
    std::vector<std::string> vs;
    collect_free_variables(f, vs);
    return {vs.begin(), vs.end()};
}

std::set<std::string> free_predicate_variables(const Formula& f) {
    std::set<std::string> bound;
    std::set<std::string> out;
    free_pvars_rec(f, bound, out);
    return out;
}

bool has_predicate_variables(const Formula& f) { return !free_predicate_variables(f).empty(); }

bool has_fixpoints(const Formula& f) {
    if (f.is(FormulaKind::Lfp)) {
        return true;
    }
    return std::any_of(f.children().begin(), f.children().end(),
                       [](const Formula& c) { return has_fixpoints(c); });
}

void collect_all_variables(const Formula& f, std::set<std::string>& out) {
    for (const auto& t : f.args()) {
        for (auto& v : variables(t)) {
            out.insert(v);
        }
    }
    if (f.is(FormulaKind::Forall) || f.is(FormulaKind::Exists)) {
        out.insert(f.name());
    }
    for (const auto& c : f.children()) {
        collect_all_variables(c, out);
    }
}

} // namespace fixhorn
