#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace locus {

enum class Tok {
    Ident, Int, Rational, PrimeLit, // 3/4 and 5:3 are single tokens
    Plus, Minus, Star, Caret, Slash, Colon, Comma, Semi, Equals,
    LParen, RParen, LBracket, RBracket, LBrace, RBrace,
    Flag, // --name
    End,
};

struct Token {
    Tok kind;
    std::string text;
    int line = 1;
    int col = 1;
};

/// Hand-rolled lexer shared by the polynomial syntax and the session format.
/// `#` starts a comment running to end of line.
class Lexer {
public:
    explicit Lexer(const std::string& src);

    const Token& peek(std::size_t ahead = 0) const;
    Token next();
    bool at_end() const { return peek().kind == Tok::End; }

    /// Formats "line L, column C".
    static std::string where(const Token& t);

private:
    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

} // namespace locus
