#pragma once

// Parser for Representational Level notation. Exactly as strong as the layer
// grammar: the closing marker's layer letter must repeat the node's own, but
// index agreement is left to the validator. Content nodes (p) are accepted
// only at top level. Indices may be written plain (x1) or in subscript
// markup (x_{1}); whitespace between tokens is insignificant.

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "fgen/rl_ast.hpp"
#include "fgen/source_span.hpp"

namespace fgen {

enum class RlErrorCode { SyntaxError, UnknownFunction, UnknownOperator };

class RlParseError : public std::runtime_error {
public:
    RlParseError(RlErrorCode code, SourceSpan span, const std::string& message)
        : std::runtime_error(to_string(span) + ": " + message), code_(code), span_(span) {}

    RlErrorCode code() const { return code_; }
    const SourceSpan& span() const { return span_; }

private:
    RlErrorCode code_;
    SourceSpan span_;
};

namespace detail {

struct RlToken {
    enum Kind { LParen, RParen, LBracket, RBracket, Colon, Lemma, Index, Word, End } kind = End;
    std::string text;
    int value = 0; // Index
    SourceSpan span;
};

struct RlLexer {
    std::string_view text;
    size_t pos = 0;
    int line = 1;
    int col = 1;

    SourceSpan here(int length = 1) const { return {line, col, length}; }

    char advance() {
        char c = text[pos++];
        if (c == '\n') { ++line; col = 1; }
        else ++col;
        return c;
    }

    static int to_index(const std::string& digits, SourceSpan at) {
        if (digits.size() > 8)
            throw RlParseError(RlErrorCode::SyntaxError, at, "index out of range");
        return std::stoi(digits);
    }

    std::vector<RlToken> run() {
        std::vector<RlToken> out;
        while (pos < text.size()) {
            char c = text[pos];
            if (c == ' ' || c == '\t' || c == '\n' || c == '\r') { advance(); continue; }
            SourceSpan at = here();
            if (c == '(') { advance(); out.push_back({RlToken::LParen, "(", 0, at}); continue; }
            if (c == ')') { advance(); out.push_back({RlToken::RParen, ")", 0, at}); continue; }
            if (c == '[') { advance(); out.push_back({RlToken::LBracket, "[", 0, at}); continue; }
            if (c == ']') { advance(); out.push_back({RlToken::RBracket, "]", 0, at}); continue; }
            if (c == ':') { advance(); out.push_back({RlToken::Colon, ":", 0, at}); continue; }
            if (c >= '0' && c <= '9') {
                std::string digits;
                while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
                    digits += advance();
                at.length = static_cast<int>(digits.size());
                out.push_back({RlToken::Index, digits, to_index(digits, at), at});
                continue;
            }
            if (c == '_') {
                // subscript markup: _{digits}
                advance();
                if (pos >= text.size() || text[pos] != '{')
                    throw RlParseError(RlErrorCode::SyntaxError, at, "expected '{' after '_'");
                advance();
                std::string digits;
                while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
                    digits += advance();
                if (digits.empty() || pos >= text.size() || text[pos] != '}')
                    throw RlParseError(RlErrorCode::SyntaxError, at, "malformed subscript index");
                advance();
                at.length = static_cast<int>(digits.size()) + 3;
                out.push_back({RlToken::Index, digits, to_index(digits, at), at});
                continue;
            }
            if (c >= 'a' && c <= 'z') {
                std::string word;
                while (pos < text.size() && text[pos] >= 'a' && text[pos] <= 'z')
                    word += advance();
                at.length = static_cast<int>(word.size());
                out.push_back({RlToken::Lemma, word, 0, at});
                continue;
            }
            if (std::isalpha(static_cast<unsigned char>(c))) {
                // capitalized word: operator or function, decided in context
                std::string word;
                while (pos < text.size() &&
                       std::isalpha(static_cast<unsigned char>(text[pos])))
                    word += advance();
                at.length = static_cast<int>(word.size());
                out.push_back({RlToken::Word, word, 0, at});
                continue;
            }
            throw RlParseError(RlErrorCode::SyntaxError, at,
                               std::string("unexpected character '") + c + "'");
        }
        return out;
    }
};

struct RlParser {
    static constexpr int kMaxDepth = 200;

    const std::vector<RlToken>& toks;
    const TokenSets& sets;
    size_t pos = 0;
    int depth = 0;

    bool done() const { return pos >= toks.size(); }
    const RlToken& peek() const { return toks[pos]; }
    const RlToken& take() { return toks[pos++]; }

    SourceSpan error_span() const {
        if (!done()) return peek().span;
        if (!toks.empty()) return toks.back().span;
        return {1, 1, 1};
    }

    [[noreturn]] void fail(const std::string& expected) const {
        std::string found = done() ? "end of input" : "'" + peek().text + "'";
        throw RlParseError(RlErrorCode::SyntaxError, error_span(),
                           "expected " + expected + ", found " + found);
    }

    const RlToken& expect(RlToken::Kind kind, const std::string& what) {
        if (done() || peek().kind != kind) fail(what);
        return take();
    }

    char expect_layer(bool topLevel) {
        if (done() || peek().kind != RlToken::Lemma || peek().text.size() != 1 ||
            !is_rl_layer(peek().text[0]))
            fail("a layer letter");
        char layer = peek().text[0];
        if (layer == 'p' && !topLevel)
            throw RlParseError(RlErrorCode::SyntaxError, peek().span,
                               "content (p) is only allowed at top level");
        take();
        return layer;
    }

    RlNode parse_node(bool topLevel) {
        if (++depth > kMaxDepth)
            throw RlParseError(RlErrorCode::SyntaxError, error_span(),
                               "structure is nested too deeply");
        const RlToken& open = expect(RlToken::LParen, "'('");
        RlNode node;
        node.span = open.span;
        if (!done() && peek().kind == RlToken::Word) {
            const RlToken& w = take();
            if (!sets.has_operator(w.text))
                throw RlParseError(RlErrorCode::UnknownOperator, w.span,
                                   "unknown operator '" + w.text + "'");
            node.op = w.text;
        }
        node.layer = expect_layer(topLevel);
        node.index = expect(RlToken::Index, "an index").value;
        while (!done() && peek().kind == RlToken::Colon) {
            take();
            RlRestrictor r;
            if (!done() && peek().kind == RlToken::Lemma) r.lemma = take().text;
            if (!done() && peek().kind == RlToken::LBracket) {
                take();
                r.bracketed = true;
                while (!done() && peek().kind == RlToken::LParen)
                    r.children.push_back(parse_node(false));
                expect(RlToken::RBracket, "']'");
            }
            const RlToken& refOpen = expect(RlToken::LParen, "'('");
            if (done() || peek().kind != RlToken::Lemma || peek().text.size() != 1 ||
                peek().text[0] != node.layer)
                fail(std::string("'") + node.layer + "'");
            take();
            r.closing.layer = node.layer;
            const RlToken& idx = expect(RlToken::Index, "an index");
            r.closing.index = idx.value;
            r.closing.span = {refOpen.span.line, refOpen.span.column,
                              idx.span.column + idx.span.length - refOpen.span.column + 1};
            expect(RlToken::RParen, "')'");
            node.restrictors.push_back(std::move(r));
        }
        expect(RlToken::RParen, "')'");
        if (!done() && peek().kind == RlToken::Word) {
            const RlToken& w = take();
            if (!sets.has_function(w.text))
                throw RlParseError(RlErrorCode::UnknownFunction, w.span,
                                   "unknown function '" + w.text + "'");
            node.function = w.text;
        }
        --depth;
        return node;
    }
};

} // namespace detail

inline RlNode parse_rl(std::string_view text, const TokenSets& sets = {}) {
    detail::RlLexer lexer{text};
    std::vector<detail::RlToken> toks = lexer.run();
    detail::RlParser parser{toks, sets};
    RlNode node = parser.parse_node(true);
    if (!parser.done()) parser.fail("end of input");
    return node;
}

} // namespace fgen
