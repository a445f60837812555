#pragma once

// Tokenizer for the FG underlying-structure notation.
//
// Token inventory: '(' ')' ':', quoted lexemes, category brackets [N]/[V]/[A],
// operator words (case-insensitive), determiner-number-variable clusters
// (d1x, imx, x, ...), the event variable e, and function words. Composite
// function words like AgSubj split by longest match over the semantic
// function set; the remainder must be a syntactic function.

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "fgen/fg_ast.hpp"
#include "fgen/source_span.hpp"

namespace fgen {

enum class FgErrorCode {
    UnknownCharacter,
    UnterminatedLexeme,
    UnknownFunction,
    SyntaxError,
    EmptyStructure,
};

class FgParseError : public std::runtime_error {
public:
    FgParseError(FgErrorCode code, SourceSpan span, const std::string& message)
        : std::runtime_error(to_string(span) + ": " + message), code_(code), span_(span) {}

    FgErrorCode code() const { return code_; }
    const SourceSpan& span() const { return span_; }

private:
    FgErrorCode code_;
    SourceSpan span_;
};

enum class TokenKind {
    LParen,
    RParen,
    Colon,
    LexemeTok,   // 'man' — form in text, category from the following bracket token
    CategoryTok, // [N] [V] [A]
    OperatorTok, // Past Pres Pf Prog, case-insensitive
    ClusterTok,  // det? num? x
    EventVar,    // e
    SemFuncTok,  // Ag Go Rec 0
    SynFuncTok,  // Subj Obj
};

enum class FgOperator { Past, Pres, Pf, Prog };

struct Token {
    TokenKind kind;
    SourceSpan span;
    std::string text;
    Category category = Category::Noun;       // CategoryTok, LexemeTok
    FgOperator op = FgOperator::Past;          // OperatorTok
    Determinacy det = Determinacy::Unspecified; // ClusterTok
    NumberMark num = NumberMark::Unspecified;   // ClusterTok
    SemanticFunction sem = SemanticFunction::Agent;   // SemFuncTok
    SyntacticFunction syn = SyntacticFunction::None;  // SynFuncTok
};

namespace detail {

inline std::string lower(std::string_view s) {
    std::string out(s);
    for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return out;
}

struct FgLexer {
    std::string_view text;
    size_t pos = 0;
    int line = 1;
    int col = 1;

    bool done() const { return pos >= text.size(); }
    char peek() const { return text[pos]; }

    char advance() {
        char c = text[pos++];
        if (c == '\n') { ++line; col = 1; }
        else ++col;
        return c;
    }

    SourceSpan here(int length = 1) const { return {line, col, length}; }

    [[noreturn]] void fail(FgErrorCode code, SourceSpan span, const std::string& msg) const {
        throw FgParseError(code, span, msg);
    }

    void push_word(std::vector<Token>& out, const std::string& word, SourceSpan span) {
        std::string low = lower(word);
        if (low == "past") { out.push_back({TokenKind::OperatorTok, span, word, {}, FgOperator::Past}); return; }
        if (low == "pres") { out.push_back({TokenKind::OperatorTok, span, word, {}, FgOperator::Pres}); return; }
        if (low == "pf")   { out.push_back({TokenKind::OperatorTok, span, word, {}, FgOperator::Pf}); return; }
        if (low == "prog") { out.push_back({TokenKind::OperatorTok, span, word, {}, FgOperator::Prog}); return; }

        if (word == "e") { out.push_back({TokenKind::EventVar, span, word}); return; }

        if (is_cluster(word)) {
            Token t{TokenKind::ClusterTok, span, word};
            size_t i = 0;
            if (word[i] == 'd') { t.det = Determinacy::Definite; ++i; }
            else if (word[i] == 'i') { t.det = Determinacy::Indefinite; ++i; }
            if (word[i] == '1') { t.num = NumberMark::Singular; ++i; }
            else if (word[i] == 'm') { t.num = NumberMark::Plural; ++i; }
            out.push_back(t);
            return;
        }

        split_function(out, word, span);
    }

    static bool is_cluster(const std::string& w) {
        size_t i = 0;
        if (i < w.size() && (w[i] == 'd' || w[i] == 'i')) ++i;
        if (i < w.size() && (w[i] == '1' || w[i] == 'm')) ++i;
        return i + 1 == w.size() && w[i] == 'x';
    }

    // Longest-match split of a function word into semantic + optional
    // syntactic part: AgSubj -> Ag, Subj; Rec -> Rec; 0 -> Zero.
    void split_function(std::vector<Token>& out, const std::string& word, SourceSpan span) {
        struct SemEntry { const char* text; SemanticFunction f; };
        static const SemEntry sems[] = {
            {"Rec", SemanticFunction::Recipient},
            {"Ag", SemanticFunction::Agent},
            {"Go", SemanticFunction::Goal},
            {"0", SemanticFunction::Zero},
        };
        for (const auto& s : sems) {
            std::string_view st = s.text;
            if (word.size() >= st.size() && std::string_view(word).substr(0, st.size()) == st) {
                std::string rest = word.substr(st.size());
                SourceSpan semSpan{span.line, span.column, static_cast<int>(st.size())};
                out.push_back({TokenKind::SemFuncTok, semSpan, std::string(st), {}, {}, {}, {}, s.f});
                if (rest.empty()) return;
                SourceSpan restSpan{span.line, span.column + static_cast<int>(st.size()),
                                    static_cast<int>(rest.size())};
                if (rest == "Subj") {
                    out.push_back({TokenKind::SynFuncTok, restSpan, rest, {}, {}, {}, {}, {},
                                   SyntacticFunction::Subject});
                } else if (rest == "Obj") {
                    out.push_back({TokenKind::SynFuncTok, restSpan, rest, {}, {}, {}, {}, {},
                                   SyntacticFunction::Object});
                } else {
                    fail(FgErrorCode::UnknownFunction, restSpan,
                         "'" + rest + "' is not a syntactic function");
                }
                return;
            }
        }
        fail(FgErrorCode::UnknownFunction, span, "'" + word + "' is not a known function");
    }

    std::vector<Token> run() {
        std::vector<Token> out;
        while (!done()) {
            char c = peek();
            if (c == ' ' || c == '\t' || c == '\n' || c == '\r') { advance(); continue; }
            SourceSpan start = here();
            if (c == '(') { advance(); out.push_back({TokenKind::LParen, start, "("}); continue; }
            if (c == ')') { advance(); out.push_back({TokenKind::RParen, start, ")"}); continue; }
            if (c == ':') { advance(); out.push_back({TokenKind::Colon, start, ":"}); continue; }
            if (c == '\'') { lex_quoted(out); continue; }
            if (c == '[') { lex_category(out); continue; }
            if (std::isalnum(static_cast<unsigned char>(c))) {
                std::string word;
                SourceSpan span = here();
                while (!done() && std::isalnum(static_cast<unsigned char>(peek())))
                    word += advance();
                span.length = static_cast<int>(word.size());
                push_word(out, word, span);
                continue;
            }
            fail(FgErrorCode::UnknownCharacter, start,
                 std::string("unexpected character '") + c + "'");
        }
        return out;
    }

    void lex_quoted(std::vector<Token>& out) {
        SourceSpan open = here();
        advance(); // opening quote
        std::string form;
        while (true) {
            if (done() || peek() == '\n')
                fail(FgErrorCode::UnterminatedLexeme, open, "unterminated lexeme");
            if (peek() == '\'') break;
            SourceSpan at = here();
            char c = advance();
            if (c < 'a' || c > 'z')
                fail(FgErrorCode::UnknownCharacter, at,
                     std::string("'") + c + "' is not allowed in a lexeme");
            form += c;
        }
        SourceSpan close = here();
        advance(); // closing quote
        if (form.empty())
            fail(FgErrorCode::UnknownCharacter, close, "empty lexeme");
        out.push_back({TokenKind::LexemeTok,
                       {open.line, open.column, static_cast<int>(form.size()) + 2}, form});
    }

    void lex_category(std::vector<Token>& out) {
        SourceSpan open = here();
        advance(); // '['
        if (done()) fail(FgErrorCode::UnknownCharacter, open, "unterminated category bracket");
        SourceSpan at = here();
        char c = advance();
        Category cat;
        if (c == 'N') cat = Category::Noun;
        else if (c == 'V') cat = Category::Verb;
        else if (c == 'A') cat = Category::Adjective;
        else fail(FgErrorCode::UnknownCharacter, at,
                  std::string("'") + c + "' is not a category (expected N, V or A)");
        if (done() || peek() != ']')
            fail(FgErrorCode::UnknownCharacter, done() ? at : here(), "expected ']'");
        advance();
        Token t{TokenKind::CategoryTok, {open.line, open.column, 3}, std::string("[") + c + "]"};
        t.category = cat;
        out.push_back(t);
    }
};

} // namespace detail

inline std::vector<Token> tokenize(std::string_view text) {
    detail::FgLexer lexer{text};
    return lexer.run();
}

} // namespace fgen
