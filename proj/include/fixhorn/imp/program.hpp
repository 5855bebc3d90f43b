#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "fixhorn/logic/formula.hpp"

namespace fixhorn {

enum class CommandKind { Skip, Assign, Seq, If, While };

struct Command;
using CommandPtr = std::shared_ptr<const Command>;

// p ::= skip | x := t | p0; p1 | if B then p0 else p1 | while B do p0
struct Command {
    CommandKind kind = CommandKind::Skip;
    std::string var;                // Assign
    Term value = Term::var("_");    // Assign
    Formula guard = Formula::top(); // If, While
    std::vector<CommandPtr> parts;  // Seq: p0 p1; If: then else; While: body

    static CommandPtr skip();
    static CommandPtr assign(std::string var, Term value);
    static CommandPtr seq(CommandPtr first, CommandPtr second);
    static CommandPtr if_then_else(Formula guard, CommandPtr then_part, CommandPtr else_part);
    static CommandPtr while_do(Formula guard, CommandPtr body);
};

bool operator==(const Command& a, const Command& b);

struct Program {
    std::vector<std::string> vars;
    CommandPtr body = Command::skip();

    friend bool operator==(const Program& a, const Program& b) {
        return a.vars == b.vars && *a.body == *b.body;
    }
};

// Number of nested while loops on the deepest path, and AST depth.
std::size_t loop_nesting(const Command& c);
std::size_t depth(const Command& c);

// Concrete syntax:
//   vars x, y;
//   x := 0;
//   while not (x = 5) do { x := x + 1 };
//   if x <= 2 then { y := y * 2 } else { skip }
// Terms use + - * over numerals and declared variables; guards use
// = != <= < >= > with not/and/or. Errors are ParseErrors with line/column.
Program parse_program(std::string_view text);
std::string to_source(const Program& p);
std::string to_source(const Term& t);
std::string to_source(const Formula& guard);

} // namespace fixhorn
