#pragma once

// Recursive-descent parser for the FG underlying-structure notation.
//
//   predication := '(' operator* 'e' ':' head (':')? argument* ')'
//   head        := lexeme'[V]' | term
//   term        := '(' det? num? 'x' ':' lexeme'[N]' (':' (lexeme'[A]' | predication))* ')'
//   argument    := term semfunc synfunc?
//
// The colon between head and arguments is optional; both forms parse to the
// same AST. A copular head (term) requires exactly one argument and that
// argument's semantic function must be Zero.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fgen/fg_ast.hpp"
#include "fgen/fg_lex.hpp"

namespace fgen {

namespace detail {

struct FgParser {
    static constexpr int kMaxDepth = 200;

    const std::vector<Token>& toks;
    size_t pos = 0;
    int depth = 0;

    bool done() const { return pos >= toks.size(); }
    const Token& peek() const { return toks[pos]; }
    const Token& take() { return toks[pos++]; }

    struct DepthGuard {
        FgParser& parser;
        explicit DepthGuard(FgParser& p) : parser(p) {
            if (++parser.depth > kMaxDepth)
                throw FgParseError(FgErrorCode::SyntaxError, parser.error_span(),
                                   "structure is nested too deeply");
        }
        ~DepthGuard() { --parser.depth; }
    };

    SourceSpan error_span() const {
        if (!done()) return peek().span;
        if (!toks.empty()) return toks.back().span;
        return {1, 1, 1};
    }

    [[noreturn]] void fail(const std::string& expected) const {
        std::string found = done() ? "end of input" : "'" + peek().text + "'";
        throw FgParseError(FgErrorCode::SyntaxError, error_span(),
                           "expected " + expected + ", found " + found);
    }

    const Token& expect(TokenKind kind, const std::string& what) {
        if (done() || peek().kind != kind) fail(what);
        return take();
    }

    Predication parse_predication() {
        DepthGuard guard(*this);
        const Token& open = expect(TokenKind::LParen, "'('");
        Predication p;
        std::optional<Tense> tense;
        while (!done() && peek().kind == TokenKind::OperatorTok) {
            const Token& t = take();
            switch (t.op) {
                case FgOperator::Past:
                case FgOperator::Pres: {
                    Tense v = t.op == FgOperator::Past ? Tense::Past : Tense::Present;
                    if (tense)
                        throw FgParseError(FgErrorCode::SyntaxError, t.span,
                                           "conflicting tense operator '" + t.text + "'");
                    tense = v;
                    break;
                }
                case FgOperator::Pf:
                    if (p.operators.perfect)
                        throw FgParseError(FgErrorCode::SyntaxError, t.span,
                                           "duplicate operator '" + t.text + "'");
                    p.operators.perfect = true;
                    break;
                case FgOperator::Prog:
                    if (p.operators.progressive)
                        throw FgParseError(FgErrorCode::SyntaxError, t.span,
                                           "duplicate operator '" + t.text + "'");
                    p.operators.progressive = true;
                    break;
            }
        }
        p.operators.tense = tense.value_or(Tense::Present);
        expect(TokenKind::EventVar, "'e'");
        expect(TokenKind::Colon, "':'");
        p.head = parse_head();
        if (!done() && peek().kind == TokenKind::Colon) take();
        while (!done() && peek().kind == TokenKind::LParen)
            p.arguments.push_back(parse_argument());
        const Token& close = expect(TokenKind::RParen, "')'");
        p.span = span_between(open.span, close.span);
        if (!is_verbal(p)) {
            if (p.arguments.size() != 1)
                throw FgParseError(FgErrorCode::SyntaxError, p.span,
                                   "a copular predication takes exactly one argument");
            if (p.arguments[0].semantic != SemanticFunction::Zero)
                throw FgParseError(FgErrorCode::SyntaxError, p.span,
                                   "a copular predication's argument must carry function 0");
        }
        return p;
    }

    Head parse_head() {
        if (!done() && peek().kind == TokenKind::LParen) return parse_term();
        const Token& lex = expect(TokenKind::LexemeTok, "a verbal lexeme or a term");
        const Token& cat = expect(TokenKind::CategoryTok, "'[V]'");
        if (cat.category != Category::Verb)
            throw FgParseError(FgErrorCode::SyntaxError, cat.span,
                               "a verbal head requires category [V]");
        return Lexeme{lex.text, Category::Verb};
    }

    Term parse_term() {
        DepthGuard guard(*this);
        const Token& open = expect(TokenKind::LParen, "'('");
        const Token& cluster = expect(TokenKind::ClusterTok, "a term variable (x)");
        Term t;
        t.determinacy = cluster.det;
        t.number = cluster.num;
        expect(TokenKind::Colon, "':'");
        const Token& lex = expect(TokenKind::LexemeTok, "a noun lexeme");
        const Token& cat = expect(TokenKind::CategoryTok, "'[N]'");
        if (cat.category != Category::Noun)
            throw FgParseError(FgErrorCode::SyntaxError, cat.span,
                               "a term head requires category [N]");
        t.head = Lexeme{lex.text, Category::Noun};
        while (!done() && peek().kind == TokenKind::Colon) {
            take();
            if (!done() && peek().kind == TokenKind::LParen) {
                t.restrictors.push_back(parse_predication());
            } else {
                const Token& mod = expect(TokenKind::LexemeTok,
                                          "an adjective lexeme or a predication");
                const Token& mcat = expect(TokenKind::CategoryTok, "'[A]'");
                if (mcat.category != Category::Adjective)
                    throw FgParseError(FgErrorCode::SyntaxError, mcat.span,
                                       "a modifier requires category [A]");
                t.modifiers.push_back(Lexeme{mod.text, Category::Adjective});
            }
        }
        const Token& close = expect(TokenKind::RParen, "')'");
        t.span = span_between(open.span, close.span);
        return t;
    }

    Argument parse_argument() {
        Argument a;
        a.term = parse_term();
        const Token& sem = expect(TokenKind::SemFuncTok, "a semantic function");
        a.semantic = sem.sem;
        if (!done() && peek().kind == TokenKind::SynFuncTok) a.syntactic = take().syn;
        return a;
    }

    static SourceSpan span_between(const SourceSpan& a, const SourceSpan& b) {
        // Length is only meaningful for single-line constructs; multi-line
        // spans keep the start position and extend to the closing token.
        if (a.line == b.line) return {a.line, a.column, b.column + b.length - a.column};
        return {a.line, a.column, b.column + b.length};
    }
};

} // namespace detail

// Parse one underlying structure. Multi-line input is fine; whitespace is
// insignificant between tokens.
inline Predication parse_structure(std::string_view text) {
    std::vector<Token> toks = tokenize(text);
    if (toks.empty())
        throw FgParseError(FgErrorCode::EmptyStructure, {1, 1, 1}, "empty structure");
    detail::FgParser parser{toks};
    Predication p = parser.parse_predication();
    if (!parser.done()) parser.fail("end of input");
    return p;
}

} // namespace fgen
