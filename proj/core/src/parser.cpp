// Copyright 2026 The QPPL Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qppl/parser.hpp"

#include <array>
#include <algorithm>

#include "lexer.hpp"

namespace qppl {
namespace {

using detail::Tok;
using detail::Token;

constexpr std::array kReserved = {
    "def", "main", "bit", "if", "else", "new", "measure", "return", "qrand_bit",
    "qrand", "qnegate", "qneg", "rand_bit",
};

bool is_reserved(const std::string& word) {
    return std::find(kReserved.begin(), kReserved.end(), word) != kReserved.end();
}

// `a == b` is true exactly when a and b agree.
Expr desugar_eq(Expr a, Expr b) {
    if (b.kind == Expr::Kind::Const) return b.value ? std::move(a) : Expr::negate(std::move(a));
    if (a.kind == Expr::Kind::Const) return a.value ? std::move(b) : Expr::negate(std::move(b));
    Expr na = Expr::negate(a);
    Expr nb = Expr::negate(b);
    return Expr::disj(Expr::conj(std::move(a), std::move(b)), Expr::conj(std::move(na), std::move(nb)));
}

// `a ^ b` and `a != b` are true exactly when a and b differ.
Expr desugar_xor(Expr a, Expr b) {
    if (b.kind == Expr::Kind::Const) return b.value ? Expr::negate(std::move(a)) : std::move(a);
    if (a.kind == Expr::Kind::Const) return a.value ? Expr::negate(std::move(b)) : std::move(b);
    Expr na = Expr::negate(a);
    Expr nb = Expr::negate(b);
    return Expr::disj(Expr::conj(std::move(a), std::move(nb)), Expr::conj(std::move(na), std::move(b)));
}

class Parser {
public:
    explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

    Program program() {
        skip_newlines();
        if (peek().kind == Tok::Ident && peek().text != "def" && peek_at(1).kind == Tok::Colon) {
            throw ParseError("UNKNOWN_IDENTIFIER", peek().loc,
                             "declaration of '" + peek().text +
                                 "' is not supported; write black-box functions inline as expressions");
        }
        Program p;
        p.loc = peek().loc;
        expect_word("def");
        expect_word("main");
        expect(Tok::LParen, "after 'def main'");
        p.inputs = parameters();
        expect(Tok::RParen, "to close the parameter list");
        expect(Tok::Colon, "after the parameter list");
        expect(Tok::Newline, "after 'def main(...):'");
        if (accept(Tok::Indent)) {
            while (peek().kind != Tok::Dedent && peek().kind != Tok::End) {
                if (is_word("return")) {
                    p.return_loc = peek().loc;
                    advance();
                    p.returns = return_names();
                    expect(Tok::Newline, "after return");
                    if (peek().kind != Tok::Dedent && peek().kind != Tok::End) {
                        throw ParseError("SYNTAX_ERROR", peek().loc,
                                         "'return' is only allowed as the final statement");
                    }
                    break;
                }
                top_statement(p.body);
            }
            accept(Tok::Dedent);
        }
        if (peek().kind != Tok::End) {
            throw ParseError("SYNTAX_ERROR", peek().loc, "unexpected " + detail::describe(peek().kind) +
                                                             " after the end of 'main'");
        }
        return p;
    }

    Expr expression_only() {
        Expr e = expression();
        expect(Tok::Newline, "after expression");
        if (peek().kind != Tok::End) {
            throw ParseError("SYNTAX_ERROR", peek().loc, "trailing input after expression");
        }
        return e;
    }

private:
    const Token& peek() const { return toks_[std::min(pos_, toks_.size() - 1)]; }
    const Token& peek_at(size_t ahead) const { return toks_[std::min(pos_ + ahead, toks_.size() - 1)]; }
    const Token& advance() { return toks_[std::min(pos_++, toks_.size() - 1)]; }

    bool accept(Tok kind) {
        if (peek().kind != kind) return false;
        advance();
        return true;
    }

    bool is_word(std::string_view w) const { return peek().kind == Tok::Ident && peek().text == w; }

    [[noreturn]] void fail_expected(const std::string& what, const std::string& context) const {
        const Token& t = peek();
        std::string got = t.kind == Tok::Ident || t.kind == Tok::Bit ? "'" + t.text + "'" : detail::describe(t.kind);
        throw ParseError("SYNTAX_ERROR", t.loc, "expected " + what + " " + context + ", found " + got);
    }

    const Token& expect(Tok kind, const std::string& context) {
        if (peek().kind != kind) fail_expected(detail::describe(kind), context);
        return advance();
    }

    void expect_word(std::string_view w) {
        if (!is_word(w)) fail_expected("'" + std::string(w) + "'", "");
        advance();
    }

    void skip_newlines() {
        while (accept(Tok::Newline)) {
        }
    }

    std::string variable_name(const std::string& context) {
        const Token& t = peek();
        if (t.kind != Tok::Ident) fail_expected("a variable name", context);
        if (is_reserved(t.text)) {
            throw ParseError("SYNTAX_ERROR", t.loc, "'" + t.text + "' is a reserved word, not a variable");
        }
        advance();
        return t.text;
    }

    // x, y : bit   |   x : bit, y : bit   |   (empty)
    std::vector<std::string> parameters() {
        std::vector<std::string> names;
        if (peek().kind == Tok::RParen) return names;
        for (;;) {
            names.push_back(variable_name("in the parameter list"));
            if (accept(Tok::Colon)) expect_word("bit");
            if (!accept(Tok::Comma)) break;
        }
        return names;
    }

    std::vector<std::string> name_list(const std::string& context) {
        std::vector<std::string> names;
        names.push_back(variable_name(context));
        while (accept(Tok::Comma)) names.push_back(variable_name(context));
        return names;
    }

    std::vector<std::string> return_names() {
        if (peek().kind == Tok::Newline) return {};
        if (accept(Tok::LParen)) {
            if (accept(Tok::RParen)) return {};
            auto names = name_list("in 'return'");
            expect(Tok::RParen, "to close 'return'");
            return names;
        }
        return name_list("in 'return'");
    }

    void top_statement(std::vector<Stmt>& out) {
        SourceLoc loc = peek().loc;
        if (is_word("new")) {
            advance();
            const bool parens = accept(Tok::LParen);
            std::vector<std::string> names;
            std::vector<CompStmt> inits;
            for (;;) {
                SourceLoc item_loc = peek().loc;
                names.push_back(variable_name("in 'new'"));
                if (accept(Tok::Walrus)) {
                    CompStmt init = make_xor(names.back(), expression());
                    init.loc = item_loc;
                    inits.push_back(std::move(init));
                }
                if (!accept(Tok::Comma)) break;
            }
            if (parens) expect(Tok::RParen, "to close 'new'");
            expect(Tok::Newline, "after 'new'");
            out.push_back(Stmt{NewStmt{std::move(names)}, loc, {}});
            for (CompStmt& c : inits) out.push_back(make_stmt(std::move(c)));
            return;
        }
        if (is_word("measure")) {
            advance();
            expect(Tok::LParen, "after 'measure'");
            auto names = name_list("in 'measure'");
            expect(Tok::RParen, "to close 'measure'");
            expect(Tok::Newline, "after 'measure(...)'");
            out.push_back(Stmt{MeasureStmt{std::move(names)}, loc, {}});
            return;
        }
        out.push_back(make_stmt(comp_statement()));
    }

    CompStmt comp_statement() {
        SourceLoc loc = peek().loc;
        const Token& head = peek();
        if (head.kind == Tok::Indent) throw ParseError("INDENTATION_ERROR", loc, "unexpected indent");
        if (head.kind != Tok::Ident) fail_expected("a statement", "");
        if (head.text == "measure" || head.text == "new" || head.text == "return") {
            throw ParseError("SYNTAX_ERROR", loc, "'" + head.text + "' is not allowed inside 'if'");
        }
        CompStmt result;
        if (head.text == "if") {
            advance();
            Expr cond = expression();
            expect(Tok::Colon, "after the 'if' condition");
            std::vector<CompStmt> body;
            if (accept(Tok::Newline)) {
                if (!accept(Tok::Indent)) fail_expected("an indented block", "after 'if ...:'");
                while (peek().kind != Tok::Dedent && peek().kind != Tok::End) body.push_back(comp_statement());
                accept(Tok::Dedent);
            } else {
                body.push_back(comp_statement());
            }
            result = make_if(std::move(cond), std::move(body));
            result.loc = loc;
            return result;
        }
        if (head.text == "qrand_bit" || head.text == "qrand") {
            advance();
            expect(Tok::LParen, "after '" + head.text + "'");
            result = make_qrand(variable_name("as the argument of qrand"));
            expect(Tok::RParen, "to close qrand");
        } else if (head.text == "qnegate" || head.text == "qneg") {
            advance();
            expect(Tok::LParen, "after '" + head.text + "'");
            expect(Tok::RParen, "'qneg' takes no arguments");
            result = make_qneg();
        } else {
            if (peek_at(1).kind == Tok::LParen && !is_reserved(head.text)) {
                throw ParseError("UNKNOWN_IDENTIFIER", loc, "unknown statement '" + head.text + "(...)'");
            }
            std::string target = variable_name("at the start of a statement");
            if (accept(Tok::XorEq)) {
                result = make_xor(std::move(target), expression());
            } else if (accept(Tok::Walrus)) {
                if (is_word("rand_bit")) {
                    advance();
                    expect(Tok::LParen, "after 'rand_bit'");
                    expect(Tok::RParen, "'rand_bit' takes no arguments");
                    result = make_rand_assign(std::move(target));
                } else {
                    result = make_assign(std::move(target), expression());
                }
            } else {
                fail_expected("'^=' or ':='", "after '" + target + "'");
            }
        }
        expect(Tok::Newline, "at the end of the statement");
        result.loc = loc;
        return result;
    }

    // Loosest level: ==, != and ^ (left-associative).
    Expr expression() {
        Expr lhs = disjunction();
        for (;;) {
            if (accept(Tok::EqEq)) {
                lhs = desugar_eq(std::move(lhs), disjunction());
            } else if (accept(Tok::NotEq) || accept(Tok::Caret)) {
                lhs = desugar_xor(std::move(lhs), disjunction());
            } else {
                return lhs;
            }
        }
    }

    Expr disjunction() {
        Expr lhs = conjunction();
        while (accept(Tok::Or)) lhs = Expr::disj(std::move(lhs), conjunction());
        return lhs;
    }

    Expr conjunction() {
        Expr lhs = unary();
        while (accept(Tok::And)) lhs = Expr::conj(std::move(lhs), unary());
        return lhs;
    }

    Expr unary() {
        if (accept(Tok::Not)) return Expr::negate(unary());
        return primary();
    }

    Expr primary() {
        const Token& t = peek();
        if (t.kind == Tok::Bit) {
            advance();
            return Expr::constant(t.text == "1");
        }
        if (accept(Tok::LParen)) {
            Expr e = expression();
            expect(Tok::RParen, "to close '('");
            return e;
        }
        if (t.kind == Tok::Ident) {
            if (peek_at(1).kind == Tok::LParen) {
                throw ParseError("UNKNOWN_IDENTIFIER", t.loc,
                                 "unknown function '" + t.text + "'; write the function inline as an expression");
            }
            return Expr::var(variable_name("in expression"));
        }
        fail_expected("an expression", "");
    }

    std::vector<Token> toks_;
    size_t pos_ = 0;
};

} // namespace

namespace {

// Source line `line` (1-based) without comment, CR or surrounding blanks.
std::string source_line(std::string_view text, int line) {
    for (int i = 1; i < line; ++i) {
        const size_t nl = text.find('\n');
        if (nl == std::string_view::npos) return {};
        text.remove_prefix(nl + 1);
    }
    text = text.substr(0, text.find('\n'));
    text = text.substr(0, text.find('#'));
    const size_t first = text.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const size_t last = text.find_last_not_of(" \t\r");
    return std::string(text.substr(first, last - first + 1));
}

} // namespace

Program parse(std::string_view text) {
    Program p = Parser(detail::tokenize(text)).program();
    // `new y := E` expands to several statements on one line; those keep printed labels.
    for (size_t i = 0; i < p.body.size(); ++i) {
        const int line = p.body[i].loc.line;
        const bool shares_line = (i > 0 && p.body[i - 1].loc.line == line) ||
                                 (i + 1 < p.body.size() && p.body[i + 1].loc.line == line);
        if (!shares_line) p.body[i].text = source_line(text, line);
    }
    return p;
}

Expr parse_expression(std::string_view text) { return Parser(detail::tokenize(text)).expression_only(); }

} // namespace qppl
