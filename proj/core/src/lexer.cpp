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

#include "lexer.hpp"

#include <cctype>

#include "qppl/errors.hpp"

namespace qppl::detail {
namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

// Number of bytes in the UTF-8 sequence introduced by `lead`.
size_t utf8_length(unsigned char lead) {
    if (lead < 0x80) return 1;
    if ((lead >> 5) == 0x6) return 2;
    if ((lead >> 4) == 0xE) return 3;
    if ((lead >> 3) == 0x1E) return 4;
    return 1;
}

class LineLexer {
public:
    LineLexer(std::string_view line, int line_no, std::vector<Token>& out)
        : line_(line), line_no_(line_no), out_(out) {}

    // Tokenizes from byte offset `pos` (just past the indentation).
    void run(size_t pos, int column) {
        pos_ = pos;
        column_ = column;
        while (pos_ < line_.size()) {
            char c = line_[pos_];
            if (c == ' ' || c == '\t') {
                advance(1);
                continue;
            }
            if (c == '#') break;
            SourceLoc here{line_no_, column_};
            if (ident_start(c)) {
                size_t end = pos_;
                while (end < line_.size() && ident_char(line_[end])) ++end;
                std::string word(line_.substr(pos_, end - pos_));
                advance(end - pos_);
                if (word == "not") emit(Tok::Not, word, here);
                else if (word == "and") emit(Tok::And, word, here);
                else if (word == "or") emit(Tok::Or, word, here);
                else emit(Tok::Ident, word, here);
                continue;
            }
            if (std::isdigit(static_cast<unsigned char>(c))) {
                size_t end = pos_;
                while (end < line_.size() && std::isalnum(static_cast<unsigned char>(line_[end]))) ++end;
                std::string digits(line_.substr(pos_, end - pos_));
                if (digits != "0" && digits != "1") {
                    throw ParseError("SYNTAX_ERROR", here,
                                     "invalid constant '" + digits + "': only the bits 0 and 1 exist");
                }
                advance(end - pos_);
                emit(Tok::Bit, digits, here);
                continue;
            }
            if (match(":=")) { emit(Tok::Walrus, ":=", here); continue; }
            if (match("^=")) { emit(Tok::XorEq, "^=", here); continue; }
            if (match("==")) { emit(Tok::EqEq, "==", here); continue; }
            if (match("!=")) { emit(Tok::NotEq, "!=", here); continue; }
            if (match("->")) { emit(Tok::Arrow, "->", here); continue; }
            if (match("\xC2\xAC")) { emit(Tok::Not, "\xC2\xAC", here); continue; }
            if (match("\xE2\x88\xA7")) { emit(Tok::And, "\xE2\x88\xA7", here); continue; }
            if (match("\xE2\x88\xA8")) { emit(Tok::Or, "\xE2\x88\xA8", here); continue; }
            switch (c) {
            case '(': advance(1); emit(Tok::LParen, "(", here); continue;
            case ')': advance(1); emit(Tok::RParen, ")", here); continue;
            case ',': advance(1); emit(Tok::Comma, ",", here); continue;
            case ':': advance(1); emit(Tok::Colon, ":", here); continue;
            case '^': advance(1); emit(Tok::Caret, "^", here); continue;
            case '!': advance(1); emit(Tok::Not, "!", here); continue;
            default: break;
            }
            size_t len = utf8_length(static_cast<unsigned char>(c));
            throw ParseError("SYNTAX_ERROR", here,
                             "unexpected character '" + std::string(line_.substr(pos_, len)) + "'");
        }
    }

private:
    bool match(std::string_view s) {
        if (line_.substr(pos_, s.size()) != s) return false;
        advance(s.size());
        return true;
    }

    void advance(size_t bytes) {
        size_t end = pos_ + bytes;
        while (pos_ < end) {
            pos_ += utf8_length(static_cast<unsigned char>(line_[pos_]));
            ++column_;
        }
    }

    void emit(Tok kind, std::string text, SourceLoc loc) { out_.push_back({kind, std::move(text), loc}); }

    std::string_view line_;
    int line_no_;
    std::vector<Token>& out_;
    size_t pos_ = 0;
    int column_ = 1;
};

} // namespace

std::vector<Token> tokenize(std::string_view text) {
    std::vector<Token> out;
    std::vector<int> indents{0};
    int line_no = 0;
    size_t start = 0;
    while (start <= text.size()) {
        size_t nl = text.find('\n', start);
        std::string_view line = text.substr(start, nl == std::string_view::npos ? std::string_view::npos : nl - start);
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

        size_t pos = 0;
        while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
        const bool blank = pos == line.size() || line[pos] == '#';
        if (!blank) {
            if (line.substr(0, pos).find('\t') != std::string_view::npos) {
                throw ParseError("TAB_INDENT", {line_no, static_cast<int>(line.find('\t')) + 1},
                                 "tab character in indentation; indent with spaces");
            }
            const int indent = static_cast<int>(pos);
            SourceLoc loc{line_no, indent + 1};
            if (indent > indents.back()) {
                indents.push_back(indent);
                out.push_back({Tok::Indent, "", loc});
            } else {
                while (indent < indents.back()) {
                    indents.pop_back();
                    out.push_back({Tok::Dedent, "", loc});
                }
                if (indent != indents.back()) {
                    throw ParseError("INDENTATION_ERROR", loc,
                                     "unindent does not match any outer indentation level");
                }
            }
            LineLexer(line, line_no, out).run(pos, indent + 1);
            out.push_back({Tok::Newline, "", {line_no, static_cast<int>(line.size()) + 1}});
        }
        if (nl == std::string_view::npos) break;
        start = nl + 1;
    }
    SourceLoc eof{line_no + 1, 1};
    while (indents.size() > 1) {
        indents.pop_back();
        out.push_back({Tok::Dedent, "", eof});
    }
    out.push_back({Tok::End, "", eof});
    return out;
}

std::string describe(Tok kind) {
    switch (kind) {
    case Tok::Ident: return "identifier";
    case Tok::Bit: return "bit constant";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::Comma: return "','";
    case Tok::Colon: return "':'";
    case Tok::Walrus: return "':='";
    case Tok::XorEq: return "'^='";
    case Tok::Caret: return "'^'";
    case Tok::EqEq: return "'=='";
    case Tok::NotEq: return "'!='";
    case Tok::Not: return "'not'";
    case Tok::And: return "'and'";
    case Tok::Or: return "'or'";
    case Tok::Arrow: return "'->'";
    case Tok::Newline: return "end of line";
    case Tok::Indent: return "indented block";
    case Tok::Dedent: return "end of block";
    case Tok::End: return "end of file";
    }
    return "token";
}

} // namespace qppl::detail
