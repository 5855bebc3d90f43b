#include "fixhorn/model/evaluator.hpp"

#include <deque>

namespace fixhorn {

namespace {

struct DenseRelation {
    std::size_t arity = 0;
    std::vector<bool> bits;

    friend bool operator==(const DenseRelation&, const DenseRelation&) = default;
};

DenseRelation to_dense(const RelationTable& r, std::size_t n) {
    DenseRelation d{r.arity(), std::vector<bool>(tuple_count(r.arity(), n), false)};
    for (const auto& t : r) {
        d.bits[tuple_rank(t, n)] = true;
    }
    return d;
}

RelationTable to_table(const DenseRelation& d, std::size_t n) {
    std::vector<Tuple> tuples;
    for (std::size_t i = 0; i < d.bits.size(); ++i) {
        if (d.bits[i]) {
            tuples.push_back(tuple_at(i, d.arity, n));
        }
    }
    return RelationTable(d.arity, std::move(tuples));
}

struct CTerm {
    int slot = -1;
    const FunctionTable* fn = nullptr;
    Element constant = 0;
    std::vector<CTerm> args;
};

enum class Op { True, False, Atom, Eq, Not, And, Or, Implies, Forall, Exists };

struct CNode {
    Op op = Op::True;
    const DenseRelation* rel = nullptr;
    int slot = -1;
    std::vector<CTerm> args;
    std::vector<CNode> kids;
};

using PredicateBindings = std::map<std::string, const DenseRelation*>;

// Compiles formulas against one structure, owning the dense copies of every
// relation the compiled trees point into.
class Compiler {
public:
    Compiler(Evaluator& ev, const PredicateBindings& pvars, const RelationEnv& env)
        : ev_(ev), m_(ev.structure()), pvars_(pvars), env_(env) {}

    std::size_t slot_count() const { return slot_count_; }

    int bind_free(const std::string& var) {
        int s = static_cast<int>(slot_count_++);
        scope_.emplace_back(var, s);
        return s;
    }

    CNode compile(const Formula& f) {
        CNode n;
        switch (f.kind()) {
        case FormulaKind::True:
            n.op = Op::True;
            return n;
        case FormulaKind::False:
            n.op = Op::False;
            return n;
        case FormulaKind::Predicate: {
            n.op = Op::Atom;
            const RelationTable* r = m_.relation(f.name());
            if (!r) {
                throw EvalError("predicate " + f.name() + " is not interpreted by the structure");
            }
            if (r->arity() != f.args().size()) {
                throw EvalError("predicate " + f.name() + " used with wrong arity");
            }
            n.rel = &owned_.emplace_back(to_dense(*r, m_.size()));
            n.args = compile_terms(f.args());
            return n;
        }
        case FormulaKind::PredicateVariable: {
            n.op = Op::Atom;
            n.rel = lookup_pvar(f.name(), f.args().size());
            n.args = compile_terms(f.args());
            return n;
        }
        case FormulaKind::Lfp: {
            n.op = Op::Atom;
            RelationEnv inner_env = env_;
            for (const auto& [name, rel] : pvars_) {
                inner_env.insert_or_assign(name, to_table(*rel, m_.size()));
            }
            LfpResult res = ev_.lfp(f.system(), inner_env);
            n.rel = &owned_.emplace_back(to_dense(res.relations.at(f.lfp_index()), m_.size()));
            n.args = compile_terms(f.args());
            return n;
        }
        case FormulaKind::Equal:
            n.op = Op::Eq;
            n.args = compile_terms(f.args());
            return n;
        case FormulaKind::Not:
        case FormulaKind::And:
        case FormulaKind::Or:
        case FormulaKind::Implies:
            n.op = f.is(FormulaKind::Not)   ? Op::Not
                   : f.is(FormulaKind::And) ? Op::And
                   : f.is(FormulaKind::Or)  ? Op::Or
                                            : Op::Implies;
            for (const auto& c : f.children()) {
                n.kids.push_back(compile(c));
            }
            return n;
        case FormulaKind::Forall:
        case FormulaKind::Exists: {
            n.op = f.is(FormulaKind::Forall) ? Op::Forall : Op::Exists;
            n.slot = static_cast<int>(slot_count_++);
            scope_.emplace_back(f.name(), n.slot);
            n.kids.push_back(compile(f.body()));
            scope_.pop_back();
            return n;
        }
        }
        return n;
    }

private:
    std::vector<CTerm> compile_terms(const std::vector<Term>& ts) {
        std::vector<CTerm> out;
        out.reserve(ts.size());
        for (const auto& t : ts) {
            out.push_back(compile_term(t));
        }
        return out;
    }

    CTerm compile_term(const Term& t) {
        CTerm c;
        if (t.is_var()) {
            for (auto it = scope_.rbegin(); it != scope_.rend(); ++it) {
                if (it->first == t.name()) {
                    c.slot = it->second;
                    return c;
                }
            }
            throw EvalError("unbound variable " + t.name());
        }
        if (t.args().empty()) {
            try {
                c.constant = m_.constant(t.name());
            } catch (const std::exception& e) {
                throw EvalError(e.what());
            }
            return c;
        }
        c.fn = m_.function(t.name());
        if (!c.fn) {
            throw EvalError("function " + t.name() + " is not interpreted by the structure");
        }
        if (c.fn->arity != t.args().size()) {
            throw EvalError("function " + t.name() + " used with wrong arity");
        }
        c.args = compile_terms(t.args());
        return c;
    }

    const DenseRelation* lookup_pvar(const std::string& name, std::size_t arity) {
        if (auto it = pvars_.find(name); it != pvars_.end()) {
            if (it->second->arity != arity) {
                throw EvalError("predicate variable " + name + " used with wrong arity");
            }
            return it->second;
        }
        if (auto it = env_.find(name); it != env_.end()) {
            if (it->second.arity() != arity) {
                throw EvalError("predicate variable " + name + " is interpreted with arity " +
                                std::to_string(it->second.arity()));
            }
            return &owned_.emplace_back(to_dense(it->second, m_.size()));
        }
        throw EvalError("unbound predicate variable " + name);
    }

    Evaluator& ev_;
    const FiniteStructure& m_;
    const PredicateBindings& pvars_;
    const RelationEnv& env_;
    std::vector<std::pair<std::string, int>> scope_;
    std::size_t slot_count_ = 0;
    std::deque<DenseRelation> owned_;
};

class Machine {
public:
    Machine(std::size_t domain_size, std::size_t slots) : n_(domain_size), env_(slots, 0) {}

    std::vector<Element>& env() { return env_; }

    Element term(const CTerm& t) const {
        if (t.slot >= 0) {
            return env_[static_cast<std::size_t>(t.slot)];
        }
        if (!t.fn) {
            return t.constant;
        }
        std::size_t rank = 0;
        for (const auto& a : t.args) {
            rank = rank * n_ + term(a);
        }
        return t.fn->values[rank];
    }

    bool run(const CNode& node) {
        switch (node.op) {
        case Op::True:
            return true;
        case Op::False:
            return false;
        case Op::Atom: {
            std::size_t rank = 0;
            for (const auto& a : node.args) {
                rank = rank * n_ + term(a);
            }
            return node.rel->bits[rank];
        }
        case Op::Eq:
            return term(node.args[0]) == term(node.args[1]);
        case Op::Not:
            return !run(node.kids[0]);
        case Op::And:
            for (const auto& k : node.kids) {
                if (!run(k)) {
                    return false;
                }
            }
            return true;
        case Op::Or:
            for (const auto& k : node.kids) {
                if (run(k)) {
                    return true;
                }
            }
            return false;
        case Op::Implies:
            return !run(node.kids[0]) || run(node.kids[1]);
        case Op::Forall:
        case Op::Exists: {
            bool want = node.op == Op::Exists;
            auto slot = static_cast<std::size_t>(node.slot);
            for (std::size_t e = 0; e < n_; ++e) {
                env_[slot] = static_cast<Element>(e);
                if (run(node.kids[0]) == want) {
                    return want;
                }
            }
            return !want;
        }
        }
        return false;
    }

private:
    std::size_t n_;
    std::vector<Element> env_;
};

DenseRelation dense_extension(Evaluator& ev, const std::vector<std::string>& params,
                              const Formula& f, const PredicateBindings& pvars,
                              const RelationEnv& env) {
    const std::size_t n = ev.structure().size();
    Compiler compiler(ev, pvars, env);
    std::vector<int> slots;
    for (const auto& p : params) {
        slots.push_back(compiler.bind_free(p));
    }
    CNode root = compiler.compile(f);
    Machine machine(n, compiler.slot_count());
    DenseRelation out{params.size(), std::vector<bool>(tuple_count(params.size(), n), false)};
    std::vector<Element> digits(params.size(), 0);
    for (std::size_t rank = 0; rank < out.bits.size(); ++rank) {
        for (std::size_t i = 0; i < params.size(); ++i) {
            machine.env()[static_cast<std::size_t>(slots[i])] = digits[i];
        }
        out.bits[rank] = machine.run(root);
        for (std::size_t i = params.size(); i-- > 0;) {
            if (++digits[i] < n) {
                break;
            }
            digits[i] = 0;
        }
    }
    return out;
}

std::vector<DenseRelation> dense_apply(Evaluator& ev, const FixpointSystem& sys,
                                       const std::vector<DenseRelation>& stage,
                                       const RelationEnv& env) {
    PredicateBindings bindings;
    for (std::size_t i = 0; i < sys.size(); ++i) {
        bindings.emplace(sys.component(i).var.name, &stage[i]);
    }
    std::vector<DenseRelation> next;
    next.reserve(sys.size());
    for (const auto& comp : sys.components()) {
        next.push_back(dense_extension(ev, comp.params, comp.body, bindings, env));
    }
    return next;
}

bool depends_on(const FixpointSystem& sys, const RelationEnv& env) {
    for (const auto& c : sys.components()) {
        for (const auto& v : free_predicate_variables(c.body)) {
            if (!sys.binds(v)) {
                if (!env.contains(v)) {
                    throw EvalError("unbound predicate variable " + v + " in fixed-point system");
                }
                return true;
            }
        }
    }
    return false;
}

} // namespace

bool Evaluator::eval(const Formula& f, const Valuation& valuation, const RelationEnv& env) {
    PredicateBindings none;
    Compiler compiler(*this, none, env);
    std::vector<std::pair<int, Element>> init;
    for (const auto& v : free_individual_variables(f)) {
        auto it = valuation.find(v);
        if (it == valuation.end()) {
            throw EvalError("unbound variable " + v);
        }
        if (it->second >= structure_.size()) {
            throw EvalError("valuation of " + v + " lies outside the domain");
        }
        init.emplace_back(compiler.bind_free(v), it->second);
    }
    CNode root = compiler.compile(f);
    Machine machine(structure_.size(), compiler.slot_count());
    for (auto [slot, value] : init) {
        machine.env()[static_cast<std::size_t>(slot)] = value;
    }
    return machine.run(root);
}

LfpResult Evaluator::lfp(const FixpointSystem& system, const RelationEnv& env, bool record_stages) {
    const bool closed = !depends_on(system, env);
    if (closed && !record_stages) {
        if (auto it = cache_.find(system); it != cache_.end()) {
            return it->second;
        }
    }
    const std::size_t n = structure_.size();
    std::vector<DenseRelation> stage;
    std::size_t bound = 1;
    for (const auto& c : system.components()) {
        stage.push_back({c.var.arity, std::vector<bool>(tuple_count(c.var.arity, n), false)});
        bound += tuple_count(c.var.arity, n);
    }
    auto snapshot = [&](const std::vector<DenseRelation>& s) {
        std::vector<RelationTable> out;
        for (const auto& d : s) {
            out.push_back(to_table(d, n));
        }
        return out;
    };
    LfpResult result;
    if (record_stages) {
        result.stages.push_back(snapshot(stage));
    }
    for (;;) {
        std::vector<DenseRelation> next = dense_apply(*this, system, stage, env);
        if (next == stage) {
            break;
        }
        stage = std::move(next);
        ++result.iterations;
        if (record_stages) {
            result.stages.push_back(snapshot(stage));
        }
        if (result.iterations > bound) {
            throw std::logic_error("Kleene iteration exceeded the lattice height");
        }
    }
    result.relations = snapshot(stage);
    if (closed && !record_stages) {
        cache_.emplace(system, result);
    }
    return result;
}

std::vector<RelationTable> Evaluator::apply(const FixpointSystem& system,
                                            std::span<const RelationTable> stage,
                                            const RelationEnv& env) {
    if (stage.size() != system.size()) {
        throw EvalError("stage has " + std::to_string(stage.size()) + " relations, system has " +
                        std::to_string(system.size()) + " components");
    }
    const std::size_t n = structure_.size();
    std::vector<DenseRelation> dense;
    for (std::size_t i = 0; i < stage.size(); ++i) {
        if (stage[i].arity() != system.component(i).var.arity) {
            throw EvalError("relation for " + system.component(i).var.name + " has arity " +
                            std::to_string(stage[i].arity()));
        }
        dense.push_back(to_dense(stage[i], n));
    }
    std::vector<RelationTable> out;
    for (const auto& d : dense_apply(*this, system, dense, env)) {
        out.push_back(to_table(d, n));
    }
    return out;
}

RelationTable Evaluator::extension(const std::vector<std::string>& params, const Formula& f,
                                   const RelationEnv& env) {
    for (const auto& v : free_individual_variables(f)) {
        if (std::find(params.begin(), params.end(), v) == params.end()) {
            throw EvalError("unbound variable " + v);
        }
    }
    PredicateBindings none;
    return to_table(dense_extension(*this, params, f, none, env), structure_.size());
}

bool eval(const FiniteStructure& structure, const Valuation& valuation, const RelationEnv& env,
          const Formula& f) {
    Evaluator ev(structure);
    return ev.eval(f, valuation, env);
}

LfpResult lfp_solve(const FiniteStructure& structure, const FixpointSystem& system,
                    bool record_stages) {
    Evaluator ev(structure);
    return ev.lfp(system, {}, record_stages);
}

std::vector<RelationTable> apply_F(const FiniteStructure& structure, const FixpointSystem& system,
                                   std::span<const RelationTable> stage) {
    Evaluator ev(structure);
    return ev.apply(system, stage);
}

} // namespace fixhorn
