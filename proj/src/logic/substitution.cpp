#include "fixhorn/logic/substitution.hpp"

#include <algorithm>
#include <stdexcept>

#include "fixhorn/logic/errors.hpp"

namespace fixhorn {

std::string fresh_name(const std::string& base, const std::set<std::string>& taken) {
    if (!taken.contains(base)) {
        return base;
    }
    for (std::size_t i = 1;; ++i) {
        std::string candidate = base + "_" + std::to_string(i);
        if (!taken.contains(candidate)) {
            return candidate;
        }
    }
}

Term substitute(const Term& t, const TermSubstitution& sigma) {
    if (t.is_var()) {
        if (auto it = sigma.find(t.name()); it != sigma.end()) {
            return it->second;
        }
        return t;
    }
    std::vector<Term> args;
    args.reserve(t.args().size());
    for (const auto& a : t.args()) {
        args.push_back(substitute(a, sigma));
    }
    return Term::app(t.name(), std::move(args));
}

namespace {

std::vector<Term> substitute_all(const std::vector<Term>& ts, const TermSubstitution& sigma) {
    std::vector<Term> out;
    out.reserve(ts.size());
    for (const auto& t : ts) {
        out.push_back(substitute(t, sigma));
    }
    return out;
}

Formula rebuild(const Formula& f, std::vector<Formula> children) {
    switch (f.kind()) {
    case FormulaKind::Not:
        return Formula::negate(std::move(children.at(0)));
    case FormulaKind::And:
        return Formula::conj(std::move(children));
    case FormulaKind::Or:
        return Formula::disj(std::move(children));
    case FormulaKind::Implies:
        return Formula::implies(std::move(children.at(0)), std::move(children.at(1)));
    case FormulaKind::Forall:
        return Formula::forall(f.name(), std::move(children.at(0)));
    case FormulaKind::Exists:
        return Formula::exists(f.name(), std::move(children.at(0)));
    default:
        return f;
    }
}

Formula quantify(FormulaKind kind, std::string var, Formula body) {
    return kind == FormulaKind::Forall ? Formula::forall(std::move(var), std::move(body))
                                       : Formula::exists(std::move(var), std::move(body));
}

Formula term_subst(const Formula& f, const TermSubstitution& sigma) {
    if (sigma.empty()) {
        return f;
    }
    switch (f.kind()) {
    case FormulaKind::True:
    case FormulaKind::False:
        return f;
    case FormulaKind::Predicate:
        return Formula::predicate(f.name(), substitute_all(f.args(), sigma));
    case FormulaKind::PredicateVariable:
        return Formula::atom(f.variable(), substitute_all(f.args(), sigma));
    case FormulaKind::Equal:
        return Formula::equal(substitute(f.args()[0], sigma), substitute(f.args()[1], sigma));
    case FormulaKind::Lfp:
        return Formula::lfp(f.system_ptr(), f.lfp_index(), substitute_all(f.args(), sigma));
    case FormulaKind::Forall:
    case FormulaKind::Exists: {
        const std::string& x = f.name();
        std::set<std::string> body_free = free_individual_variables(f.body());
        TermSubstitution inner;
        std::set<std::string> range_vars;
        for (const auto& [y, t] : sigma) {
            if (y == x || !body_free.contains(y)) {
                continue;
            }
            inner.emplace(y, t);
            for (auto& v : variables(t)) {
                range_vars.insert(v);
            }
        }
        if (inner.empty()) {
            return f;
        }
        if (range_vars.contains(x)) {
            std::set<std::string> taken = range_vars;
            collect_all_variables(f, taken);
            for (const auto& [y, _] : inner) {
                taken.insert(y);
            }
            std::string renamed = fresh_name(x, taken);
            inner.emplace(x, Term::var(renamed));
            return quantify(f.kind(), renamed, term_subst(f.body(), inner));
        }
        return quantify(f.kind(), x, term_subst(f.body(), inner));
    }
    default: {
        std::vector<Formula> children;
        children.reserve(f.children().size());
        for (const auto& c : f.children()) {
            children.push_back(term_subst(c, sigma));
        }
        return rebuild(f, std::move(children));
    }
    }
}

struct PredicateSubstituter {
    const PredicateSubstitution& sigma;
    std::set<std::string> capture_risk;  // non-parameter free variables of the bodies

    Formula run(const Formula& f) const {
        switch (f.kind()) {
        case FormulaKind::PredicateVariable: {
            auto it = sigma.find(f.name());
            if (it == sigma.end()) {
                return f;
            }
            const Lambda& lam = it->second;
            if (lam.params.size() != f.args().size()) {
                throw ArityError("substitution for " + f.name() + " has " +
                                 std::to_string(lam.params.size()) + " parameters but the atom has " +
                                 std::to_string(f.args().size()) + " arguments");
            }
            TermSubstitution bind;
            for (std::size_t i = 0; i < lam.params.size(); ++i) {
                bind.emplace(lam.params[i], f.args()[i]);
            }
            return substitute(lam.body, bind);
        }
        case FormulaKind::Forall:
        case FormulaKind::Exists: {
            if (capture_risk.contains(f.name())) {
                std::set<std::string> taken = capture_risk;
                collect_all_variables(f, taken);
                std::string renamed = fresh_name(f.name(), taken);
                Formula body = substitute(f.body(), TermSubstitution{{f.name(), Term::var(renamed)}});
                return quantify(f.kind(), renamed, run(body));
            }
            return quantify(f.kind(), f.name(), run(f.body()));
        }
        case FormulaKind::Lfp:
            return run_lfp(f);
        case FormulaKind::Not:
        case FormulaKind::And:
        case FormulaKind::Or:
        case FormulaKind::Implies: {
            std::vector<Formula> children;
            children.reserve(f.children().size());
            for (const auto& c : f.children()) {
                children.push_back(run(c));
            }
            return rebuild(f, std::move(children));
        }
        default:
            return f;
        }
    }

    Formula run_lfp(const Formula& f) const {
        const FixpointSystem& sys = f.system();
        std::set<std::string> free_in_system;
        for (const auto& c : sys.components()) {
            for (auto& v : free_predicate_variables(c.body)) {
                if (!sys.binds(v)) {
                    free_in_system.insert(v);
                }
            }
        }
        PredicateSubstitution inner;
        for (const auto& [x, lam] : sigma) {
            if (free_in_system.contains(x) && !sys.binds(x)) {
                inner.emplace(x, lam);
            }
        }
        if (inner.empty()) {
            return f;
        }
        for (const auto& [x, lam] : inner) {
            for (auto& v : free_predicate_variables(lam.body)) {
                if (sys.binds(v)) {
                    throw std::invalid_argument("substitution for " + x +
                                                " would capture fixed-point variable " + v);
                }
            }
        }
        PredicateSubstituter nested{inner, {}};
        for (const auto& [x, lam] : inner) {
            for (auto& v : free_individual_variables(lam.body)) {
                if (std::find(lam.params.begin(), lam.params.end(), v) == lam.params.end()) {
                    nested.capture_risk.insert(v);
                }
            }
        }
        std::vector<FixpointComponent> comps;
        for (const auto& c : sys.components()) {
            comps.push_back({c.var, c.params, nested.run(c.body)});
        }
        auto new_sys = std::make_shared<const FixpointSystem>(std::move(comps));
        return Formula::lfp(std::move(new_sys), f.lfp_index(), f.args());
    }
};

void collect_pvars(const Formula& f, std::map<std::string, std::size_t>& out,
                   std::set<std::string>& bound) {
    if (f.is(FormulaKind::PredicateVariable)) {
        if (!bound.contains(f.name())) {
            out.emplace(f.name(), f.args().size());
        }
        return;
    }
    if (f.is(FormulaKind::Lfp)) {
        std::set<std::string> inner = bound;
        for (const auto& c : f.system().components()) {
            inner.insert(c.var.name);
        }
        for (const auto& c : f.system().components()) {
            collect_pvars(c.body, out, inner);
        }
        return;
    }
    for (const auto& c : f.children()) {
        collect_pvars(c, out, bound);
    }
}

} // namespace

Formula substitute(const Formula& f, const TermSubstitution& sigma) { return term_subst(f, sigma); }

Formula substitute(const Formula& f, const PredicateSubstitution& sigma) {
    if (sigma.empty()) {
        return f;
    }
    PredicateSubstituter s{sigma, {}};
    for (const auto& [x, lam] : sigma) {
        for (auto& v : free_individual_variables(lam.body)) {
            if (std::find(lam.params.begin(), lam.params.end(), v) == lam.params.end()) {
                s.capture_risk.insert(v);
            }
        }
    }
    return s.run(f);
}

Formula dualize_formula(const Formula& f) {
    std::map<std::string, std::size_t> pvars;
    std::set<std::string> bound;
    collect_pvars(f, pvars, bound);
    PredicateSubstitution sigma;
    for (const auto& [name, arity] : pvars) {
        std::vector<std::string> params;
        std::vector<Term> args;
        for (std::size_t i = 0; i < arity; ++i) {
            params.push_back("_d" + std::to_string(i));
            args.push_back(Term::var(params.back()));
        }
        sigma.emplace(name, Lambda{params, Formula::negate(Formula::atom({name, arity}, args))});
    }
    return substitute(f, sigma);
}

namespace {

using Scope = std::vector<std::string>;

std::ptrdiff_t depth_of(const Scope& scope, const std::string& v) {
    for (std::ptrdiff_t i = static_cast<std::ptrdiff_t>(scope.size()) - 1; i >= 0; --i) {
        if (scope[static_cast<std::size_t>(i)] == v) {
            return i;
        }
    }
    return -1;
}

bool alpha_terms(const Term& a, const Term& b, const Scope& sa, const Scope& sb) {
    if (a.is_var() != b.is_var()) {
        return false;
    }
    if (a.is_var()) {
        auto da = depth_of(sa, a.name());
        auto db = depth_of(sb, b.name());
        if (da != db) {
            return false;
        }
        return da >= 0 || a.name() == b.name();
    }
    if (a.name() != b.name() || a.args().size() != b.args().size()) {
        return false;
    }
    for (std::size_t i = 0; i < a.args().size(); ++i) {
        if (!alpha_terms(a.args()[i], b.args()[i], sa, sb)) {
            return false;
        }
    }
    return true;
}

bool alpha_rec(const Formula& a, const Formula& b, Scope& sa, Scope& sb) {
    if (a.kind() != b.kind() || a.args().size() != b.args().size() ||
        a.children().size() != b.children().size()) {
        return false;
    }
    switch (a.kind()) {
    case FormulaKind::Forall:
    case FormulaKind::Exists: {
        sa.push_back(a.name());
        sb.push_back(b.name());
        bool ok = alpha_rec(a.body(), b.body(), sa, sb);
        sa.pop_back();
        sb.pop_back();
        return ok;
    }
    case FormulaKind::Predicate:
    case FormulaKind::PredicateVariable:
        if (a.name() != b.name()) {
            return false;
        }
        break;
    case FormulaKind::Lfp:
        if (a.lfp_index() != b.lfp_index() || !(a.system() == b.system())) {
            return false;
        }
        break;
    default:
        break;
    }
    for (std::size_t i = 0; i < a.args().size(); ++i) {
        if (!alpha_terms(a.args()[i], b.args()[i], sa, sb)) {
            return false;
        }
    }
    for (std::size_t i = 0; i < a.children().size(); ++i) {
        if (!alpha_rec(a.child(i), b.child(i), sa, sb)) {
            return false;
        }
    }
    return true;
}

} // namespace

bool alpha_equivalent(const Formula& a, const Formula& b) {
    Scope sa;
    Scope sb;
    return alpha_rec(a, b, sa, sb);
}

} // namespace fixhorn
