#pragma once

#include <cctype>
#include <string>
#include <vector>

#include "netcube/errors.hpp"

namespace netcube::detail {

struct Token {
    enum Kind { Ident, Punct, End } kind;
    std::string text;
    int line;
    int column;
};

inline bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

// Splits one logical line into tokens; '#' starts a comment.
inline std::vector<Token> tokenize_line(const std::string& line, int lineno, const std::string& punct) {
    std::vector<Token> out;
    size_t i = 0;
    while (i < line.size()) {
        char c = line[i];
        if (c == '#') break;
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        int col = static_cast<int>(i) + 1;
        if (ident_char(c)) {
            size_t j = i;
            while (j < line.size() && ident_char(line[j])) ++j;
            out.push_back({Token::Ident, line.substr(i, j - i), lineno, col});
            i = j;
        } else if (punct.find(c) != std::string::npos) {
            out.push_back({Token::Punct, std::string(1, c), lineno, col});
            ++i;
        } else {
            throw ParseError(std::string("unexpected character '") + c + "'", lineno, col);
        }
    }
    out.push_back({Token::End, "", lineno, static_cast<int>(line.size()) + 1});
    return out;
}

class TokenCursor {
public:
    explicit TokenCursor(std::vector<Token> toks) : toks_(std::move(toks)) {}

    const Token& peek() const { return toks_[pos_]; }
    bool at_end() const { return peek().kind == Token::End; }

    const Token& next() {
        const Token& t = toks_[pos_];
        if (t.kind != Token::End) ++pos_;
        return t;
    }

    std::string ident(const char* what) {
        const Token& t = peek();
        if (t.kind != Token::Ident) fail(std::string("expected ") + what);
        return next().text;
    }

    void expect(const std::string& p) {
        const Token& t = peek();
        if (t.kind != Token::Punct || t.text != p) fail("expected '" + p + "'");
        next();
    }

    bool accept(const std::string& p) {
        const Token& t = peek();
        if (t.kind == Token::Punct && t.text == p) {
            next();
            return true;
        }
        return false;
    }

    void keyword(const std::string& kw) {
        const Token& t = peek();
        if (t.kind != Token::Ident || t.text != kw) fail("expected '" + kw + "'");
        next();
    }

    // { id, id ... } with optional commas
    std::vector<std::string> id_set() {
        expect("{");
        std::vector<std::string> out;
        while (!accept("}")) {
            if (at_end()) fail("unterminated '{'");
            out.push_back(ident("identifier"));
            accept(",");
        }
        return out;
    }

    void finish() {
        if (!at_end()) fail("unexpected trailing token '" + peek().text + "'");
    }

    [[noreturn]] void fail(const std::string& msg) const {
        const Token& t = peek();
        std::string found = t.kind == Token::End ? "end of line" : "'" + t.text + "'";
        throw ParseError(msg + ", found " + found, t.line, t.column);
    }

private:
    std::vector<Token> toks_;
    size_t pos_ = 0;
};

inline std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::string cur;
    for (char c : text) {
        if (c == '\n') {
            if (!cur.empty() && cur.back() == '\r') cur.pop_back();
            lines.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) lines.push_back(cur);
    return lines;
}

inline bool looks_like_json(const std::string& text) {
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        return c == '{' || c == '[';
    }
    return false;
}

// Converts a byte offset into 1-based line/column.
inline std::pair<int, int> line_col(const std::string& text, size_t offset) {
    int line = 1, col = 1;
    for (size_t i = 0; i < offset && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

}  // namespace netcube::detail
