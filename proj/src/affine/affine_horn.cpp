#include "fixhorn/affine/affine_horn.hpp"

#include <algorithm>

#include "fixhorn/logic/signature.hpp"

namespace fixhorn {

bool LinearForm::is_constant() const {
    return std::all_of(coeffs.begin(), coeffs.end(), [](const Rational& c) { return c == 0; });
}

namespace {

LinearForm scaled(LinearForm f, const Rational& k) {
    for (auto& c : f.coeffs) {
        c *= k;
    }
    f.constant *= k;
    return f;
}

LinearForm combined(LinearForm a, const LinearForm& b, int sign) {
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
        a.coeffs[i] += sign * b.coeffs[i];
    }
    a.constant += sign * b.constant;
    return a;
}

void flatten(const Formula& f, std::vector<Formula>& out) {
    if (f.is(FormulaKind::And)) {
        for (const auto& c : f.children()) {
            flatten(c, out);
        }
    } else if (!f.is(FormulaKind::True)) {
        out.push_back(f);
    }
}

} // namespace

LinearForm linearize(const Term& t, const std::vector<std::string>& variables) {
    const std::size_t n = variables.size();
    if (t.is_var()) {
        auto it = std::find(variables.begin(), variables.end(), t.name());
        if (it == variables.end()) {
            throw AffineError("unbound variable " + t.name());
        }
        LinearForm f{Vector(n, Rational(0)), 0};
        f.coeffs[it - variables.begin()] = 1;
        return f;
    }
    const auto& args = t.args();
    if (args.empty() && is_numeral(t.name())) {
        return LinearForm{Vector(n, Rational(0)), parse_rational(t.name())};
    }
    if (args.size() == 2 && (t.name() == "+" || t.name() == "-")) {
        return combined(linearize(args[0], variables), linearize(args[1], variables),
                        t.name() == "+" ? 1 : -1);
    }
    if (args.size() == 2 && t.name() == "*") {
        LinearForm a = linearize(args[0], variables);
        LinearForm b = linearize(args[1], variables);
        if (a.is_constant()) {
            return scaled(b, a.constant);
        }
        if (b.is_constant()) {
            return scaled(a, b.constant);
        }
        throw AffineError("nonlinear product");
    }
    throw AffineError("non-affine function symbol " + t.name());
}

Matrix AffineAtom::map() const {
    Matrix m;
    for (const auto& a : args) {
        m.push_back(a.coeffs);
    }
    return m;
}

Vector AffineAtom::offset() const {
    Vector c;
    for (const auto& a : args) {
        c.push_back(a.constant);
    }
    return c;
}

ClauseKind AffineClause::kind() const {
    if (!head) {
        return ClauseKind::End;
    }
    return body.empty() ? ClauseKind::Base : ClauseKind::Induction;
}

AffineHornSystem to_affine(const HornSystem& system) {
    AffineHornSystem out{system.vars(), {}};
    for (std::size_t ci = 0; ci < system.clauses().size(); ++ci) {
        const Clause& c = system.clauses()[ci];
        const bool end = c.head.empty();
        AffineClause ac;
        ac.variables = c.variables;
        ac.source = ci;
        const std::size_t n = c.variables.size();
        auto atom = [&](const PredicateAtom& a) {
            AffineAtom r{system.var_index(a.var.name), {}};
            for (const auto& t : a.args) {
                r.args.push_back(linearize(t, c.variables));
            }
            return r;
        };
        std::vector<Formula> parts;
        flatten(c.constraint, parts);
        Matrix rows;
        bool unsat = false;
        for (const auto& p : parts) {
            if (has_fixpoints(p)) {
                throw AffineError("clause " + std::to_string(ci) + " has an lfp constraint");
            }
            if (p.is(FormulaKind::Equal)) {
                LinearForm d = combined(linearize(p.args()[0], c.variables),
                                        linearize(p.args()[1], c.variables), -1);
                Vector row = d.coeffs;
                row.push_back(-d.constant);
                rows.push_back(std::move(row));
            } else if (p.is(FormulaKind::False)) {
                unsat = true;
            } else if (end) {
                throw AffineError("end clause " + std::to_string(ci) +
                                  " has a constraint that is not an affine equality");
            } else {
                ++ac.relaxed;
            }
        }
        ac.constraint = unsat ? AffineSubspace::empty(n) : AffineSubspace::from_equations(n, rows);
        for (const auto& b : c.body) {
            ac.body.push_back(atom(b));
        }
        if (!end) {
            ac.head = atom(c.head.front());
        }
        out.clauses.push_back(std::move(ac));
    }
    return out;
}

} // namespace fixhorn
