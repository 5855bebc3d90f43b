#include "fixhorn/imp/program.hpp"

#include <algorithm>

namespace fixhorn {

CommandPtr Command::skip() {
    static const CommandPtr s = std::make_shared<const Command>();
    return s;
}

CommandPtr Command::assign(std::string var, Term value) {
    Command c;
    c.kind = CommandKind::Assign;
    c.var = std::move(var);
    c.value = std::move(value);
    return std::make_shared<const Command>(std::move(c));
}

CommandPtr Command::seq(CommandPtr first, CommandPtr second) {
    Command c;
    c.kind = CommandKind::Seq;
    c.parts = {std::move(first), std::move(second)};
    return std::make_shared<const Command>(std::move(c));
}

CommandPtr Command::if_then_else(Formula guard, CommandPtr then_part, CommandPtr else_part) {
    Command c;
    c.kind = CommandKind::If;
    c.guard = std::move(guard);
    c.parts = {std::move(then_part), std::move(else_part)};
    return std::make_shared<const Command>(std::move(c));
}

CommandPtr Command::while_do(Formula guard, CommandPtr body) {
    Command c;
    c.kind = CommandKind::While;
    c.guard = std::move(guard);
    c.parts = {std::move(body)};
    return std::make_shared<const Command>(std::move(c));
}

bool operator==(const Command& a, const Command& b) {
    if (a.kind != b.kind || a.var != b.var || !(a.value == b.value) || !(a.guard == b.guard) ||
        a.parts.size() != b.parts.size()) {
        return false;
    }
    for (std::size_t i = 0; i < a.parts.size(); ++i) {
        if (!(*a.parts[i] == *b.parts[i])) {
            return false;
        }
    }
    return true;
}

std::size_t loop_nesting(const Command& c) {
    std::size_t inner = 0;
    for (const auto& p : c.parts) {
        inner = std::max(inner, loop_nesting(*p));
    }
    return inner + (c.kind == CommandKind::While ? 1 : 0);
}

std::size_t depth(const Command& c) {
    std::size_t inner = 0;
    for (const auto& p : c.parts) {
        inner = std::max(inner, depth(*p));
    }
    return inner + 1;
}

namespace {

bool binary_op(const Term& t) {
    return !t.is_var() && t.args().size() == 2 &&
           (t.name() == "+" || t.name() == "-" || t.name() == "*");
}

std::string operand(const Term& t) {
    return binary_op(t) ? "(" + to_source(t) + ")" : to_source(t);
}

std::string wrap(const Formula& f) { return "(" + to_source(f) + ")"; }

void print(const Command& c, int indent, std::string& out) {
    std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
    switch (c.kind) {
    case CommandKind::Skip:
        out += pad + "skip";
        return;
    case CommandKind::Assign:
        out += pad + c.var + " := " + to_source(c.value);
        return;
    case CommandKind::Seq:
        print(*c.parts[0], indent, out);
        out += ";\n";
        print(*c.parts[1], indent, out);
        return;
    case CommandKind::If:
        out += pad + "if " + to_source(c.guard) + " then {\n";
        print(*c.parts[0], indent + 1, out);
        out += "\n" + pad + "} else {\n";
        print(*c.parts[1], indent + 1, out);
        out += "\n" + pad + "}";
        return;
    case CommandKind::While:
        out += pad + "while " + to_source(c.guard) + " do {\n";
        print(*c.parts[0], indent + 1, out);
        out += "\n" + pad + "}";
        return;
    }
}

} // namespace

std::string to_source(const Term& t) {
    if (t.is_var() || t.args().empty()) {
        return t.name();
    }
    if (binary_op(t)) {
        return operand(t.args()[0]) + " " + t.name() + " " + operand(t.args()[1]);
    }
    std::string s = t.name() + "(";
    for (std::size_t i = 0; i < t.args().size(); ++i) {
        s += (i ? ", " : "") + to_source(t.args()[i]);
    }
    return s + ")";
}

std::string to_source(const Formula& f) {
    switch (f.kind()) {
    case FormulaKind::True:
        return "true";
    case FormulaKind::False:
        return "false";
    case FormulaKind::Equal:
        return to_source(f.args()[0]) + " = " + to_source(f.args()[1]);
    case FormulaKind::Predicate:
        if (f.name() == "<=" && f.args().size() == 2) {
            return to_source(f.args()[0]) + " <= " + to_source(f.args()[1]);
        }
        break;
    case FormulaKind::Not:
        return "not " + wrap(f.body());
    case FormulaKind::And:
    case FormulaKind::Or: {
        std::string s;
        for (std::size_t i = 0; i < f.children().size(); ++i) {
            s += (i ? (f.is(FormulaKind::And) ? " and " : " or ") : "") + wrap(f.child(i));
        }
        return s;
    }
    default:
        break;
    }
    throw std::invalid_argument("guard is not quantifier-free arithmetic");
}

std::string to_source(const Program& p) {
    std::string out = "vars";
    for (std::size_t i = 0; i < p.vars.size(); ++i) {
        out += (i ? ", " : " ") + p.vars[i];
    }
    out += ";\n";
    print(*p.body, 0, out);
    out += "\n";
    return out;
}

} // namespace fixhorn
