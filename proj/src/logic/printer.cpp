#include "fixhorn/logic/printer.hpp"

namespace fixhorn {

namespace {

void print(const Term& t, std::string& out) {
    if (t.is_var() || t.args().empty()) {
        out += t.name();
        return;
    }
    out += '(';
    out += t.name();
    for (const auto& a : t.args()) {
        out += ' ';
        print(a, out);
    }
    out += ')';
}

void print(const Formula& f, std::string& out);

void print_system(const FixpointSystem& sys, std::string& out) {
    out += '(';
    bool first = true;
    for (const auto& c : sys.components()) {
        if (!first) {
            out += ' ';
        }
        first = false;
        out += '(';
        out += c.var.name;
        out += " (";
        for (std::size_t i = 0; i < c.params.size(); ++i) {
            if (i) {
                out += ' ';
            }
            out += c.params[i];
        }
        out += ") ";
        print(c.body, out);
        out += ')';
    }
    out += ')';
}

void print_application(const std::string& head, const std::vector<Term>& args, std::string& out) {
    out += '(';
    out += head;
    for (const auto& a : args) {
        out += ' ';
        print(a, out);
    }
    out += ')';
}

void print(const Formula& f, std::string& out) {
    switch (f.kind()) {
    case FormulaKind::True:
        out += "true";
        return;
    case FormulaKind::False:
        out += "false";
        return;
    case FormulaKind::Predicate:
    case FormulaKind::PredicateVariable:
        print_application(f.name(), f.args(), out);
        return;
    case FormulaKind::Equal:
        print_application("=", f.args(), out);
        return;
    case FormulaKind::Not:
    case FormulaKind::And:
    case FormulaKind::Or:
    case FormulaKind::Implies: {
        const char* op = f.is(FormulaKind::Not)   ? "not"
                         : f.is(FormulaKind::And) ? "and"
                         : f.is(FormulaKind::Or)  ? "or"
                                                  : "=>";
        out += '(';
        out += op;
        for (const auto& c : f.children()) {
            out += ' ';
            print(c, out);
        }
        out += ')';
        return;
    }
    case FormulaKind::Forall:
    case FormulaKind::Exists: {
        out += f.is(FormulaKind::Forall) ? "(forall (" : "(exists (";
        const Formula* cur = &f;
        bool first = true;
        while (cur->kind() == f.kind()) {
            if (!first) {
                out += ' ';
            }
            first = false;
            out += cur->name();
            cur = &cur->body();
        }
        out += ") ";
        print(*cur, out);
        out += ')';
        return;
    }
    case FormulaKind::Lfp:
        out += "(lfp ";
        out += f.name();
        out += ' ';
        print_system(f.system(), out);
        for (const auto& a : f.args()) {
            out += ' ';
            print(a, out);
        }
        out += ')';
        return;
    }
}

} // namespace

std::string to_sexpr(const Term& t) {
    std::string out;
    print(t, out);
    return out;
}

std::string to_sexpr(const Formula& f) {
    std::string out;
    print(f, out);
    return out;
}

std::string to_sexpr(const FixpointSystem& sys) {
    std::string out;
    print_system(sys, out);
    return out;
}

} // namespace fixhorn
