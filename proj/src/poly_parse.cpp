#include <cstdlib>

#include "locus/errors.hpp"
#include "locus/lex.hpp"
#include "locus/polynomial.hpp"

namespace locus {

namespace {

class PolyParser {
public:
    PolyParser(const RingPtr& ring, Lexer& lex) : ring_(ring), lex_(lex) {}

    Polynomial parse_expr() {
        bool neg = false;
        if (lex_.peek().kind == Tok::Minus) { lex_.next(); neg = true; }
        Polynomial acc = parse_term();
        if (neg) acc = -acc;
        while (lex_.peek().kind == Tok::Plus || lex_.peek().kind == Tok::Minus) {
            bool sub = lex_.next().kind == Tok::Minus;
            Polynomial t = parse_term();
            acc = sub ? acc - t : acc + t;
        }
        return acc;
    }

private:
    Polynomial parse_term() {
        Polynomial acc = parse_factor();
        while (lex_.peek().kind == Tok::Star) {
            lex_.next();
            acc = acc * parse_factor();
        }
        return acc;
    }

    Polynomial parse_factor() {
        Polynomial base = parse_atom();
        if (lex_.peek().kind == Tok::Caret) {
            Token caret = lex_.next();
            Token e = lex_.peek();
            if (e.kind != Tok::Int)
                throw UsageError("syntax error: expected a non-negative integer exponent at " +
                                 Lexer::where(e.kind == Tok::End ? caret : e));
            lex_.next();
            return base.pow(std::strtoull(e.text.c_str(), nullptr, 10));
        }
        return base;
    }

    Polynomial parse_atom() {
        Token t = lex_.peek();
        switch (t.kind) {
        case Tok::Int:
        case Tok::Rational:
        case Tok::PrimeLit:
            lex_.next();
            return Polynomial::constant(ring_, Scalar::parse(ring_->field(), t.text));
        case Tok::Ident: {
            lex_.next();
            std::size_t idx = ring_->var_index(t.text);
            if (idx == static_cast<std::size_t>(-1))
                throw UsageError("undefined name '" + t.text + "' at " + Lexer::where(t));
            return Polynomial::variable(ring_, idx);
        }
        case Tok::LParen: {
            lex_.next();
            Polynomial inner = parse_expr();
            Token close = lex_.next();
            if (close.kind != Tok::RParen)
                throw UsageError("syntax error: expected ')' at " + Lexer::where(close));
            return inner;
        }
        default:
            throw UsageError("syntax error: unexpected token '" + t.text + "' at " + Lexer::where(t));
        }
    }

    const RingPtr& ring_;
    Lexer& lex_;
};

} // namespace

Polynomial parse_polynomial_from(const RingPtr& ring, Lexer& lex) {
    return PolyParser(ring, lex).parse_expr();
}

Polynomial parse_polynomial(const RingPtr& ring, const std::string& text) {
    Lexer lex(text);
    Polynomial p = PolyParser(ring, lex).parse_expr();
    if (!lex.at_end())
        throw UsageError("syntax error: trailing input at " + Lexer::where(lex.peek()));
    return p;
}

} // namespace locus
