#include "fixhorn/formats/sexpr.hpp"

#include <cctype>

namespace fixhorn {

std::string_view SExpr::head() const {
    if (is_list() && !items.empty() && items.front().is_symbol()) {
        return items.front().text;
    }
    return {};
}

namespace {

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) {}

    void skip_space() {
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c == ';') {
                while (pos_ < text_.size() && text_[pos_] != '\n') {
                    advance();
                }
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else {
                return;
            }
        }
    }

    bool done() {
        skip_space();
        return pos_ >= text_.size();
    }

    SExpr read() {
        skip_space();
        SourceLocation start = loc_;
        if (pos_ >= text_.size()) {
            throw ParseError("unexpected end of input", loc_);
        }
        char c = text_[pos_];
        if (c == ')') {
            throw ParseError("unexpected ')'", loc_);
        }
        if (c == '(') {
            advance();
            SExpr list{SExpr::Kind::List, {}, {}, start};
            while (true) {
                skip_space();
                if (pos_ >= text_.size()) {
                    throw ParseError("unclosed '('", start);
                }
                if (text_[pos_] == ')') {
                    advance();
                    return list;
                }
                list.items.push_back(read());
            }
        }
        if (c == '"') {
            advance();
            std::string s;
            while (true) {
                if (pos_ >= text_.size()) {
                    throw ParseError("unterminated string", start);
                }
                char d = text_[pos_];
                advance();
                if (d == '"') {
                    break;
                }
                if (d == '\\' && pos_ < text_.size()) {
                    d = text_[pos_];
                    advance();
                }
                s.push_back(d);
            }
            return {SExpr::Kind::String, std::move(s), {}, start};
        }
        std::string s;
        while (pos_ < text_.size()) {
            char d = text_[pos_];
            if (std::isspace(static_cast<unsigned char>(d)) || d == '(' || d == ')' || d == ';' ||
                d == '"') {
                break;
            }
            s.push_back(d);
            advance();
        }
        return {SExpr::Kind::Symbol, std::move(s), {}, start};
    }

private:
    void advance() {
        if (text_[pos_] == '\n') {
            ++loc_.line;
            loc_.column = 1;
        } else {
            ++loc_.column;
        }
        ++pos_;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    SourceLocation loc_;
};

} // namespace

std::vector<SExpr> parse_sexprs(std::string_view text) {
    Lexer lex(text);
    std::vector<SExpr> out;
    while (!lex.done()) {
        out.push_back(lex.read());
    }
    return out;
}

SExpr parse_sexpr(std::string_view text) {
    Lexer lex(text);
    SExpr e = lex.read();
    if (!lex.done()) {
        throw ParseError("trailing input after expression", lex.read().loc);
    }
    return e;
}

} // namespace fixhorn
