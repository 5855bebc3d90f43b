#include <algorithm>
#include <cctype>
#include <set>

#include "fixhorn/formats/sexpr.hpp"
#include "fixhorn/imp/program.hpp"

namespace fixhorn {

namespace {

enum class Tok { Ident, Number, Symbol, End };

struct Token {
    Tok kind = Tok::End;
    std::string text;
    SourceLocation loc;
};

const std::set<std::string> kKeywords = {"vars", "skip", "if",  "then", "else",
                                         "while", "do",  "not", "and",  "or",
                                         "true", "false"};

std::vector<Token> tokenize(std::string_view src) {
    std::vector<Token> out;
    SourceLocation loc;
    std::size_t i = 0;
    auto advance = [&](std::size_t n) {
        for (std::size_t k = 0; k < n; ++k, ++i) {
            if (src[i] == '\n') {
                ++loc.line;
                loc.column = 1;
            } else {
                ++loc.column;
            }
        }
    };
    while (i < src.size()) {
        char c = src[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            advance(1);
            continue;
        }
        if (c == '#' || (c == '/' && i + 1 < src.size() && src[i + 1] == '/')) {
            while (i < src.size() && src[i] != '\n') {
                advance(1);
            }
            continue;
        }
        Token t{Tok::Symbol, {}, loc};
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) ||
                                      src[j] == '_' || src[j] == '\'')) {
                ++j;
            }
            t.kind = Tok::Ident;
            t.text = std::string(src.substr(i, j - i));
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) {
                ++j;
            }
            t.kind = Tok::Number;
            t.text = std::string(src.substr(i, j - i));
        } else {
            static const char* const two[] = {":=", "<=", ">=", "!="};
            for (const char* op : two) {
                if (src.substr(i, 2) == op) {
                    t.text = op;
                }
            }
            if (t.text.empty()) {
                if (std::string_view("+-*()=<>{};,").find(c) == std::string_view::npos) {
                    throw ParseError(std::string("unexpected character '") + c + "'", loc);
                }
                t.text = std::string(1, c);
            }
        }
        out.push_back(t);
        advance(t.text.size());
    }
    out.push_back({Tok::End, "", loc});
    return out;
}

class Parser {
public:
    explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

    Program program() {
        Program p;
        expect_word("vars");
        do {
            const Token& t = peek();
            if (t.kind != Tok::Ident || kKeywords.contains(t.text)) {
                throw ParseError("expected a variable name", t.loc);
            }
            if (std::find(p.vars.begin(), p.vars.end(), t.text) != p.vars.end()) {
                throw ParseError("variable " + t.text + " declared twice", t.loc);
            }
            p.vars.push_back(t.text);
            ++pos_;
            accept(",");
        } while (peek().kind == Tok::Ident && !kKeywords.contains(peek().text));
        expect(";");
        vars_ = p.vars;
        p.body = statements();
        if (peek().kind != Tok::End) {
            throw ParseError("unexpected '" + peek().text + "'", peek().loc);
        }
        return p;
    }

private:
    const Token& peek() const { return toks_[pos_]; }

    bool is(std::string_view s) const {
        return peek().kind != Tok::End && peek().kind != Tok::Number && peek().text == s;
    }

    bool accept(std::string_view s) {
        if (is(s)) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(std::string_view s) {
        if (!accept(s)) {
            throw ParseError("expected '" + std::string(s) + "'", peek().loc);
        }
    }

    void expect_word(std::string_view s) { expect(s); }

    CommandPtr statements() {
        std::vector<CommandPtr> list;
        if (is("}") || peek().kind == Tok::End) {
            return Command::skip();
        }
        list.push_back(statement());
        while (accept(";")) {
            if (is("}") || peek().kind == Tok::End) {
                break;
            }
            list.push_back(statement());
        }
        // p0; p1; p2 is p0; (p1; p2).
        CommandPtr c = list.back();
        for (std::size_t i = list.size() - 1; i-- > 0;) {
            c = Command::seq(list[i], c);
        }
        return c;
    }

    CommandPtr block() {
        expect("{");
        CommandPtr c = statements();
        expect("}");
        return c;
    }

    CommandPtr statement() {
        const Token& t = peek();
        if (accept("skip")) {
            return Command::skip();
        }
        if (accept("if")) {
            Formula g = guard();
            expect("then");
            CommandPtr a = block();
            CommandPtr b = accept("else") ? block() : Command::skip();
            return Command::if_then_else(g, a, b);
        }
        if (accept("while")) {
            Formula g = guard();
            expect("do");
            return Command::while_do(g, block());
        }
        if (is("{")) {
            return block();
        }
        if (t.kind == Tok::Ident && !kKeywords.contains(t.text)) {
            std::string name = variable();
            expect(":=");
            return Command::assign(name, term());
        }
        throw ParseError("expected a statement", t.loc);
    }

    std::string variable() {
        const Token& t = peek();
        if (t.kind != Tok::Ident || kKeywords.contains(t.text)) {
            throw ParseError("expected a variable", t.loc);
        }
        if (std::find(vars_.begin(), vars_.end(), t.text) == vars_.end()) {
            throw ParseError("undeclared variable " + t.text, t.loc);
        }
        ++pos_;
        return t.text;
    }

    Term term() {
        Term t = product();
        while (is("+") || is("-")) {
            std::string op = peek().text;
            ++pos_;
            t = Term::app(op, {t, product()});
        }
        return t;
    }

    Term product() {
        Term t = unary();
        while (accept("*")) {
            t = Term::app("*", {t, unary()});
        }
        return t;
    }

    Term unary() {
        if (accept("-")) {
            return Term::app("-", {Term::app("0"), unary()});
        }
        const Token& t = peek();
        if (t.kind == Tok::Number) {
            ++pos_;
            return Term::app(t.text);
        }
        if (accept("(")) {
            Term inner = term();
            expect(")");
            return inner;
        }
        return Term::var(variable());
    }

    Formula guard() {
        std::vector<Formula> parts{conjunction()};
        while (accept("or")) {
            parts.push_back(conjunction());
        }
        return parts.size() == 1 ? parts.front() : Formula::disj(parts);
    }

    Formula conjunction() {
        std::vector<Formula> parts{negation()};
        while (accept("and")) {
            parts.push_back(negation());
        }
        return parts.size() == 1 ? parts.front() : Formula::conj(parts);
    }

    Formula negation() {
        if (accept("not")) {
            return Formula::negate(negation());
        }
        if (accept("true")) {
            return Formula::top();
        }
        if (accept("false")) {
            return Formula::bottom();
        }
        if (is("(")) {
            // Either a parenthesized guard or a comparison starting with a
            // parenthesized term; try the comparison first.
            std::size_t save = pos_;
            try {
                return comparison();
            } catch (const ParseError&) {
                pos_ = save;
            }
            expect("(");
            Formula g = guard();
            expect(")");
            return g;
        }
        return comparison();
    }

    Formula comparison() {
        Term lhs = term();
        const Token& op = peek();
        auto less_eq = [](Term a, Term b) { return Formula::predicate("<=", {std::move(a), std::move(b)}); };
        if (accept("=")) {
            return Formula::equal(lhs, term());
        }
        if (accept("!=")) {
            return Formula::negate(Formula::equal(lhs, term()));
        }
        if (accept("<=")) {
            return less_eq(lhs, term());
        }
        if (accept(">=")) {
            return less_eq(term(), lhs);
        }
        if (accept("<")) {
            Term rhs = term();
            return Formula::conj({less_eq(lhs, rhs), Formula::negate(Formula::equal(lhs, rhs))});
        }
        if (accept(">")) {
            Term rhs = term();
            return Formula::conj({less_eq(rhs, lhs), Formula::negate(Formula::equal(lhs, rhs))});
        }
        throw ParseError("expected a comparison operator", op.loc);
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    std::vector<std::string> vars_;
};

} // namespace

Program parse_program(std::string_view text) { return Parser(tokenize(text)).program(); }

} // namespace fixhorn
