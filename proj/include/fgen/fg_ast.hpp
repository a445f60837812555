#pragma once

// AST for the Functional Grammar underlying-structure notation.
// Values are immutable after parsing; equality ignores source spans so
// round-tripped trees compare equal.

#include <string>
#include <variant>
#include <vector>

#include "fgen/source_span.hpp"

namespace fgen {

enum class Category { Noun, Verb, Adjective };
enum class Tense { Past, Present };
enum class Determinacy { Unspecified, Definite, Indefinite };
enum class NumberMark { Unspecified, Singular, Plural };
enum class SemanticFunction { Agent, Goal, Recipient, Zero };
enum class SyntacticFunction { None, Subject, Object };

struct Lexeme {
    std::string form; // lowercase alphabetic
    Category category = Category::Noun;

    friend bool operator==(const Lexeme&, const Lexeme&) = default;
};

struct PredOperators {
    Tense tense = Tense::Present;
    bool perfect = false;
    bool progressive = false;

    friend bool operator==(const PredOperators&, const PredOperators&) = default;
};

struct Predication;

// A referring expression: (dmx:'book'[N]:'old'[A]) and friends.
struct Term {
    Determinacy determinacy = Determinacy::Unspecified;
    NumberMark number = NumberMark::Unspecified;
    Lexeme head;                         // category Noun
    std::vector<Lexeme> modifiers;       // category Adjective, in written order
    std::vector<Predication> restrictors; // embedded predications, in written order
    SourceSpan span;
};

struct Argument {
    Term term;
    SemanticFunction semantic = SemanticFunction::Agent;
    SyntacticFunction syntactic = SyntacticFunction::None;
};

// Head of a predication: a verbal lexeme or, for copular clauses, a term.
using Head = std::variant<Lexeme, Term>;

struct Predication {
    PredOperators operators;
    Head head;
    std::vector<Argument> arguments;
    SourceSpan span;
};

inline bool is_verbal(const Predication& p) { return std::holds_alternative<Lexeme>(p.head); }
inline const Lexeme& verb_of(const Predication& p) { return std::get<Lexeme>(p.head); }
inline const Term& head_term_of(const Predication& p) { return std::get<Term>(p.head); }

// Structural equality, ignoring spans.
bool equal(const Predication& a, const Predication& b);

inline bool equal(const Term& a, const Term& b) {
    if (a.determinacy != b.determinacy || a.number != b.number) return false;
    if (!(a.head == b.head) || a.modifiers != b.modifiers) return false;
    if (a.restrictors.size() != b.restrictors.size()) return false;
    for (size_t i = 0; i < a.restrictors.size(); ++i)
        if (!equal(a.restrictors[i], b.restrictors[i])) return false;
    return true;
}

inline bool equal(const Argument& a, const Argument& b) {
    return a.semantic == b.semantic && a.syntactic == b.syntactic && equal(a.term, b.term);
}

inline bool equal(const Predication& a, const Predication& b) {
    if (!(a.operators == b.operators)) return false;
    if (is_verbal(a) != is_verbal(b)) return false;
    if (is_verbal(a)) {
        if (!(verb_of(a) == verb_of(b))) return false;
    } else {
        if (!equal(head_term_of(a), head_term_of(b))) return false;
    }
    if (a.arguments.size() != b.arguments.size()) return false;
    for (size_t i = 0; i < a.arguments.size(); ++i)
        if (!equal(a.arguments[i], b.arguments[i])) return false;
    return true;
}

// Canonical serialization: operators capitalized, explicit colon before the
// argument list, single spaces. Present tense stays unwritten, as in the
// notation's own economy. parse_structure(to_canonical(a)) == a.
std::string to_canonical(const Predication& p);

namespace detail {

inline const char* sem_token(SemanticFunction f) {
    switch (f) {
        case SemanticFunction::Agent: return "Ag";
        case SemanticFunction::Goal: return "Go";
        case SemanticFunction::Recipient: return "Rec";
        case SemanticFunction::Zero: return "0";
    }
    return "";
}

inline const char* syn_token(SyntacticFunction f) {
    switch (f) {
        case SyntacticFunction::Subject: return "Subj";
        case SyntacticFunction::Object: return "Obj";
        case SyntacticFunction::None: return "";
    }
    return "";
}

inline std::string term_canonical(const Term& t) {
    std::string out = "(";
    if (t.determinacy == Determinacy::Definite) out += 'd';
    else if (t.determinacy == Determinacy::Indefinite) out += 'i';
    if (t.number == NumberMark::Singular) out += '1';
    else if (t.number == NumberMark::Plural) out += 'm';
    out += "x:'" + t.head.form + "'[N]";
    for (const auto& m : t.modifiers) out += ":'" + m.form + "'[A]";
    for (const auto& r : t.restrictors) out += ":" + to_canonical(r);
    out += ")";
    return out;
}

} // namespace detail

inline std::string to_canonical(const Predication& p) {
    std::string out = "(";
    if (p.operators.tense == Tense::Past) out += "Past ";
    if (p.operators.perfect) out += "Pf ";
    if (p.operators.progressive) out += "Prog ";
    out += "e:";
    if (is_verbal(p)) out += "'" + verb_of(p).form + "'[V]";
    else out += detail::term_canonical(head_term_of(p));
    if (!p.arguments.empty()) {
        out += ":";
        bool first = true;
        for (const auto& a : p.arguments) {
            if (!first) out += ' ';
            first = false;
            out += detail::term_canonical(a.term);
            out += detail::sem_token(a.semantic);
            out += detail::syn_token(a.syntactic);
        }
    }
    out += ")";
    return out;
}

} // namespace fgen
