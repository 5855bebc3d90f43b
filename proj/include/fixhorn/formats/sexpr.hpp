#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace fixhorn {

struct SourceLocation {
    std::size_t line = 1;
    std::size_t column = 1;
};

// Syntax or static error in an input file, tagged with where it happened.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, SourceLocation loc)
        : std::runtime_error(std::to_string(loc.line) + ":" + std::to_string(loc.column) + ": " +
                             message),
          loc_(loc) {}

    SourceLocation location() const { return loc_; }

private:
    SourceLocation loc_;
};

struct SExpr {
    enum class Kind { Symbol, String, List };

    Kind kind = Kind::Symbol;
    std::string text;  // Symbol / String
    std::vector<SExpr> items;  // List
    SourceLocation loc;

    bool is_symbol() const { return kind == Kind::Symbol; }
    bool is_symbol(std::string_view s) const { return kind == Kind::Symbol && text == s; }
    bool is_string() const { return kind == Kind::String; }
    bool is_list() const { return kind == Kind::List; }
    // Symbol at the head of a non-empty list, else "".
    std::string_view head() const;
};

// All top-level expressions. `;` starts a comment running to the end of the line.
std::vector<SExpr> parse_sexprs(std::string_view text);
// Exactly one expression.
SExpr parse_sexpr(std::string_view text);

} // namespace fixhorn
