#include "fixhorn/logic/polarity.hpp"

namespace fixhorn {

std::string_view to_string(Polarity p) {
    switch (p) {
    case Polarity::Absent:
        return "absent";
    case Polarity::Positive:
        return "positive-only";
    case Polarity::Negative:
        return "negative-only";
    case Polarity::Both:
        return "both";
    }
    return "?";
}

Polarity polarity(const PredicateVariable& var, const Formula& f) {
    switch (f.kind()) {
    case FormulaKind::True:
    case FormulaKind::False:
    case FormulaKind::Predicate:
    case FormulaKind::Equal:
        return Polarity::Absent;
    case FormulaKind::PredicateVariable:
        return f.name() == var.name ? Polarity::Positive : Polarity::Absent;
    case FormulaKind::Not:
        return flip(polarity(var, f.body()));
    case FormulaKind::And:
    case FormulaKind::Or: {
        Polarity p = Polarity::Absent;
        for (const auto& c : f.children()) {
            p = p | polarity(var, c);
        }
        return p;
    }
    case FormulaKind::Implies:
        return flip(polarity(var, f.child(0))) | polarity(var, f.child(1));
    case FormulaKind::Forall:
    case FormulaKind::Exists:
        return polarity(var, f.body());
    case FormulaKind::Lfp: {
        if (f.system().binds(var.name)) {
            return Polarity::Absent;
        }
        Polarity p = Polarity::Absent;
        for (const auto& c : f.system().components()) {
            p = p | polarity(var, c.body);
        }
        return p;
    }
    }
    return Polarity::Absent;
}

} // namespace fixhorn
