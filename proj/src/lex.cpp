#include "locus/lex.hpp"

#include <cctype>

#include "locus/errors.hpp"

namespace locus {

Lexer::Lexer(const std::string& src) {
    int line = 1, col = 1;
    std::size_t i = 0;
    auto bump = [&](std::size_t n = 1) {
        for (std::size_t k = 0; k < n; ++k) {
            if (i < src.size() && src[i] == '\n') { ++line; col = 1; } else { ++col; }
            ++i;
        }
    };
    while (i < src.size()) {
        char c = src[i];
        if (c == '#') {
            while (i < src.size() && src[i] != '\n') bump();
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(c))) { bump(); continue; }
        Token t;
        t.line = line;
        t.col = col;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
            // n/d and p:k only when the right side is immediately numeric
            if (j < src.size() && (src[j] == '/' || src[j] == ':') && j + 1 < src.size() &&
                std::isdigit(static_cast<unsigned char>(src[j + 1]))) {
                char sep = src[j];
                std::size_t k = j + 1;
                while (k < src.size() && std::isdigit(static_cast<unsigned char>(src[k]))) ++k;
                t.kind = sep == '/' ? Tok::Rational : Tok::PrimeLit;
                t.text = src.substr(i, k - i);
                bump(k - i);
            } else {
                t.kind = Tok::Int;
                t.text = src.substr(i, j - i);
                bump(j - i);
            }
            toks_.push_back(std::move(t));
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_' ||
                                      src[j] == '.' || src[j] == '-')) {
                // identifiers stop before binary minus: only keep '-' inside
                // flag-like words (never produced here), so break on '-'
                if (src[j] == '-') break;
                ++j;
            }
            t.kind = Tok::Ident;
            t.text = src.substr(i, j - i);
            bump(j - i);
            toks_.push_back(std::move(t));
            continue;
        }
        if (c == '-' && i + 1 < src.size() && src[i + 1] == '-') {
            std::size_t j = i + 2;
            while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '-' ||
                                      src[j] == '.' || src[j] == '_')) ++j;
            t.kind = Tok::Flag;
            t.text = src.substr(i + 2, j - i - 2);
            bump(j - i);
            toks_.push_back(std::move(t));
            continue;
        }
        switch (c) {
        case '+': t.kind = Tok::Plus; break;
        case '-': t.kind = Tok::Minus; break;
        case '*': t.kind = Tok::Star; break;
        case '^': t.kind = Tok::Caret; break;
        case '/': t.kind = Tok::Slash; break;
        case ':': t.kind = Tok::Colon; break;
        case ',': t.kind = Tok::Comma; break;
        case ';': t.kind = Tok::Semi; break;
        case '=': t.kind = Tok::Equals; break;
        case '(': t.kind = Tok::LParen; break;
        case ')': t.kind = Tok::RParen; break;
        case '[': t.kind = Tok::LBracket; break;
        case ']': t.kind = Tok::RBracket; break;
        case '{': t.kind = Tok::LBrace; break;
        case '}': t.kind = Tok::RBrace; break;
        default:
            throw UsageError("syntax error: unexpected character '" + std::string(1, c) + "' at line " +
                             std::to_string(line) + ", column " + std::to_string(col));
        }
        t.text = std::string(1, c);
        bump();
        toks_.push_back(std::move(t));
    }
    Token end;
    end.kind = Tok::End;
    end.line = line;
    end.col = col;
    toks_.push_back(std::move(end));
}

const Token& Lexer::peek(std::size_t ahead) const {
    std::size_t i = pos_ + ahead;
    if (i >= toks_.size()) i = toks_.size() - 1;
    return toks_[i];
}

Token Lexer::next() {
    Token t = toks_[pos_];
    if (pos_ + 1 < toks_.size()) ++pos_;
    return t;
}

std::string Lexer::where(const Token& t) {
    return "line " + std::to_string(t.line) + ", column " + std::to_string(t.col);
}

} // namespace locus
