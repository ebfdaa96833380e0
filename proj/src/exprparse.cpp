#include "cyops/exprparse.hpp"

#include <algorithm>
#include <cctype>

namespace cyops {

namespace {

struct Token {
    enum class Kind { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };
    Kind kind;
    std::string text;
    int line, col;
};

class Lexer {
public:
    Lexer(const std::string& text, int first_line, int first_column)
        : text_(text), line_(first_line), col_(first_column) {}

    Token next() {
        while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) advance();
        int line = line_, col = col_;
        if (pos_ >= text_.size()) return {Token::Kind::End, "", line, col};
        char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string num;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                num += text_[pos_];
                advance();
            }
            return {Token::Kind::Number, num, line, col};
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string id;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
                id += text_[pos_];
                advance();
            }
            return {Token::Kind::Ident, id, line, col};
        }
        advance();
        switch (c) {
            case '+': return {Token::Kind::Plus, "+", line, col};
            case '-': return {Token::Kind::Minus, "-", line, col};
            case '*': return {Token::Kind::Star, "*", line, col};
            case '/': return {Token::Kind::Slash, "/", line, col};
            case '^': return {Token::Kind::Caret, "^", line, col};
            case '(': return {Token::Kind::LParen, "(", line, col};
            case ')': return {Token::Kind::RParen, ")", line, col};
            default:
                throw ParseError(line, col, "a term ('" + std::string(1, c) + "' is not valid here)");
        }
    }

private:
    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }
    const std::string& text_;
    size_t pos_ = 0;
    int line_;
    int col_;
};

class Parser {
public:
    Parser(const std::string& text, const std::vector<std::string>& vars, int first_line,
           int first_column)
        : lexer_(text, first_line, first_column),
          vars_(vars),
          dim_(static_cast<int>(vars.size())) {
        cur_ = lexer_.next();
    }

    LaurentPoly parse() {
        LaurentPoly p = expr();
        expect(Token::Kind::End, "end of expression");
        return p;
    }

private:
    void bump() { cur_ = lexer_.next(); }

    void expect(Token::Kind k, const std::string& what) {
        if (cur_.kind != k) throw ParseError(cur_.line, cur_.col, what);
        bump();
    }

    LaurentPoly expr() {
        LaurentPoly acc = term();
        while (cur_.kind == Token::Kind::Plus || cur_.kind == Token::Kind::Minus) {
            bool minus = cur_.kind == Token::Kind::Minus;
            bump();
            LaurentPoly rhs = term();
            acc = minus ? acc - rhs : acc + rhs;
        }
        return acc;
    }

    LaurentPoly term() {
        LaurentPoly acc = unary();
        while (cur_.kind == Token::Kind::Star || cur_.kind == Token::Kind::Slash) {
            bool div = cur_.kind == Token::Kind::Slash;
            Token at = cur_;
            bump();
            LaurentPoly rhs = unary();
            if (div) {
                acc = divide(acc, rhs, at);
            } else {
                acc = acc * rhs;
            }
        }
        return acc;
    }

    LaurentPoly unary() {
        if (cur_.kind == Token::Kind::Minus) {
            bump();
            return LaurentPoly::constant(dim_, Rat(0)) - unary();
        }
        return power();
    }

    LaurentPoly power() {
        LaurentPoly base = atom();
        if (cur_.kind != Token::Kind::Caret) return base;
        Token caret = cur_;
        bump();
        bool neg = false;
        if (cur_.kind == Token::Kind::Minus) {
            neg = true;
            bump();
        }
        if (cur_.kind != Token::Kind::Number)
            throw ParseError(cur_.line, cur_.col, "an integer exponent");
        long e = std::stol(cur_.text);
        bump();
        if (cur_.kind == Token::Kind::Caret)
            throw ParseError(cur_.line, cur_.col, "a single exponent (no chained ^)");
        if (neg) return invert(base, caret).pow(static_cast<int>(e));
        return base.pow(static_cast<int>(e));
    }

    LaurentPoly atom() {
        if (++depth_ > 256) throw ParseError(cur_.line, cur_.col, "shallower nesting");
        struct Guard {
            int& d;
            ~Guard() { --d; }
        } guard{depth_};
        switch (cur_.kind) {
            case Token::Kind::Number: {
                Rat v(rat_from_string(cur_.text));
                bump();
                return LaurentPoly::constant(dim_, v);
            }
            case Token::Kind::Ident: {
                auto it = std::find(vars_.begin(), vars_.end(), cur_.text);
                if (it == vars_.end())
                    throw ParseError(cur_.line, cur_.col, "a known variable (got '" + cur_.text + "')");
                int idx = static_cast<int>(it - vars_.begin());
                bump();
                return LaurentPoly::variable(dim_, idx);
            }
            case Token::Kind::LParen: {
                bump();
                LaurentPoly p = expr();
                expect(Token::Kind::RParen, "')'");
                return p;
            }
            default:
                throw ParseError(cur_.line, cur_.col, "a number, variable or '('");
        }
    }

    LaurentPoly invert(const LaurentPoly& p, const Token& at) {
        if (p.terms().size() != 1)
            throw ParseError(at.line, at.col, "a monomial divisor (denominators must be single terms)");
        const auto& [e, c] = *p.terms().begin();
        LaurentPoly inv(p.dim());
        ExpVec ne(e);
        for (auto& x : ne) x = -x;
        inv.add_term(ne, 1 / c);
        return inv;
    }

    LaurentPoly divide(const LaurentPoly& a, const LaurentPoly& b, const Token& at) {
        return a * invert(b, at);
    }

    Lexer lexer_;
    Token cur_;
    const std::vector<std::string>& vars_;
    int dim_;
    int depth_ = 0;
};

}  // namespace

std::vector<std::string> scan_variables(const std::string& text) {
    std::vector<std::string> vars;
    Lexer lex(text, 1, 1);
    for (Token t = lex.next(); t.kind != Token::Kind::End; t = lex.next()) {
        if (t.kind != Token::Kind::Ident) continue;
        if (std::find(vars.begin(), vars.end(), t.text) == vars.end()) vars.push_back(t.text);
    }
    return vars;
}

LaurentPoly parse_laurent(const std::string& text, const std::vector<std::string>& vars,
                          int first_line, int first_column) {
    return Parser(text, vars, first_line, first_column).parse();
}

RatPoly parse_poly(const std::string& text, int first_line, int first_column) {
    std::vector<std::string> vars{"T"};
    LaurentPoly p = parse_laurent(text, vars, first_line, first_column);
    std::vector<Rat> coeffs;
    for (const auto& [e, c] : p.terms()) {
        if (e[0] < 0) throw ParseError(first_line, 1, "nonnegative powers of T");
        if (e[0] >= static_cast<int>(coeffs.size())) coeffs.resize(e[0] + 1, Rat(0));
        coeffs[e[0]] = c;
    }
    if (coeffs.empty()) coeffs.assign(1, Rat(0));
    return RatPoly(std::move(coeffs));
}

}  // namespace cyops
