#pragma once

// FDG Representational Level structures. A node is one layer instance
//
//   '(' OPERATOR? <layer><index> ( ':' head '(' <layer><index> ')' )* ')' FUNCTION?
//
// where head is an optional lowercase lemma plus an optional bracketed list
// of sub-structures. Layers: p (content, top level only), e (state of
// affairs), f (property), x (individual), l (location), t (time).

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fgen/mapping.hpp"
#include "fgen/source_span.hpp"

namespace fgen {

inline bool is_rl_layer(char c) {
    return c == 'p' || c == 'e' || c == 'f' || c == 'x' || c == 'l' || c == 't';
}

struct TokenSets {
    std::vector<std::string> functions = {"Ag", "Pat", "Inst"};
    std::vector<std::string> operators = {"Past", "Pres"};

    bool has_function(const std::string& t) const {
        for (const auto& f : functions)
            if (f == t) return true;
        return false;
    }
    bool has_operator(const std::string& t) const {
        for (const auto& o : operators)
            if (o == t) return true;
        return false;
    }
};

// Token-set config file: "functions:" and "operators:" section headers, one
// token per line, '#' comments.
inline TokenSets load_token_sets(std::string_view text) {
    TokenSets sets;
    sets.functions.clear();
    sets.operators.clear();
    std::vector<std::string>* current = nullptr;
    int lineNo = 0;
    size_t start = 0;
    while (start <= text.size()) {
        size_t end = text.find('\n', start);
        std::string_view raw = text.substr(
            start, end == std::string_view::npos ? std::string_view::npos : end - start);
        ++lineNo;
        std::string line{detail::trim(raw)};
        if (!line.empty() && line[0] != '#') {
            if (line == "functions:") current = &sets.functions;
            else if (line == "operators:") current = &sets.operators;
            else if (!current)
                throw ConfigError(ConfigErrorCode::MalformedLine,
                                  "line " + std::to_string(lineNo) +
                                      ": token outside a functions:/operators: section",
                                  lineNo);
            else {
                for (const auto& t : *current)
                    if (t == line)
                        throw ConfigError(ConfigErrorCode::DuplicateKey,
                                          "duplicate token '" + line + "'", lineNo, line);
                current->push_back(line);
            }
        }
        if (end == std::string_view::npos) break;
        start = end + 1;
    }
    if (sets.functions.empty())
        throw ConfigError(ConfigErrorCode::MissingRequiredKey, "no function tokens defined", 0,
                          "functions");
    if (sets.operators.empty())
        throw ConfigError(ConfigErrorCode::MissingRequiredKey, "no operator tokens defined", 0,
                          "operators");
    return sets;
}

struct RlRef {
    char layer = 'x';
    int index = 0;
    SourceSpan span;
};

struct RlNode;

// One ':'-introduced restrictor: optional lemma, optional bracketed children,
// and the mandatory closing coreference marker, e.g. ":tek[...](f1)".
struct RlRestrictor {
    std::optional<std::string> lemma;
    bool bracketed = false;
    std::vector<RlNode> children;
    RlRef closing;
};

struct RlNode {
    char layer = 'x';
    int index = 0;
    std::optional<std::string> op;
    std::vector<RlRestrictor> restrictors;
    std::optional<std::string> function;
    SourceSpan span;

    // Flattened views over the restrictor groups.
    std::optional<std::string> head() const {
        for (const auto& r : restrictors)
            if (r.lemma) return r.lemma;
        return std::nullopt;
    }
    std::vector<RlRef> restrictor_refs() const {
        std::vector<RlRef> refs;
        for (const auto& r : restrictors) refs.push_back(r.closing);
        return refs;
    }
};

// Structural equality, ignoring spans.
bool equal(const RlNode& a, const RlNode& b);

inline bool equal(const RlRestrictor& a, const RlRestrictor& b) {
    if (a.lemma != b.lemma || a.bracketed != b.bracketed) return false;
    if (a.closing.layer != b.closing.layer || a.closing.index != b.closing.index) return false;
    if (a.children.size() != b.children.size()) return false;
    for (size_t i = 0; i < a.children.size(); ++i)
        if (!equal(a.children[i], b.children[i])) return false;
    return true;
}

inline bool equal(const RlNode& a, const RlNode& b) {
    if (a.layer != b.layer || a.index != b.index || a.op != b.op || a.function != b.function)
        return false;
    if (a.restrictors.size() != b.restrictors.size()) return false;
    for (size_t i = 0; i < a.restrictors.size(); ++i)
        if (!equal(a.restrictors[i], b.restrictors[i])) return false;
    return true;
}

enum class Severity { Error, Warning };

struct Diagnostic {
    Severity severity = Severity::Error;
    std::string code;
    std::string message;
    SourceSpan span;
};

} // namespace fgen
