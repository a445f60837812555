#pragma once

// Compiles a parsed underlying structure into the fact-triple representation
// consumed by the realizer.
//
// Node numbering is a pre-order walk (root predication x1; a copular head
// term precedes the arguments). The node record's second field is tree depth.
// All surface tokens pass through the mapping config; emitted defaults are
// limited to the fixed vocabulary (pred, term, ind, active, passive, decl,
// mainclause, null, restarg, true, false, singular, indef).

#include <stdexcept>
#include <string>
#include <vector>

#include "fgen/factbase.hpp"
#include "fgen/fg_ast.hpp"
#include "fgen/lexicon.hpp"
#include "fgen/mapping.hpp"

namespace fgen {

enum class CompileErrorCode { UnmappedToken, RoleMismatch };

class CompileError : public std::runtime_error {
public:
    CompileError(CompileErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    CompileErrorCode code() const { return code_; }

private:
    CompileErrorCode code_;
};

namespace detail {

struct Compiler {
    const MappingConfig& mapping;
    const Lexicon& lexicon;
    FactBase fb;

    const std::string& mapped(const std::string& token) const {
        const std::string* v = mapping.find(token);
        if (!v)
            throw CompileError(CompileErrorCode::UnmappedToken,
                               "no mapping for token '" + token + "'");
        return *v;
    }

    static const char* sem_surface(SemanticFunction f) {
        switch (f) {
            case SemanticFunction::Agent: return "Ag";
            case SemanticFunction::Goal: return "Go";
            case SemanticFunction::Recipient: return "Rec";
            case SemanticFunction::Zero: return "0";
        }
        return "";
    }

    const NounEntry& noun_entry(const Lexeme& lex) const {
        const NounEntry* n = lexicon.find_noun(lex.form);
        if (!n)
            throw LexiconError(LexiconErrorCode::UnknownLexeme,
                               "unknown noun '" + lex.form + "'");
        return *n;
    }

    NodeId compile_predication(const Predication& p, int level) {
        NodeId id = fb.add_node(level);
        std::vector<std::string> childIds;

        const VerbEntry* verb = nullptr;
        if (is_verbal(p)) {
            verb = lexicon.find_verb(verb_of(p).form);
            if (!verb)
                throw LexiconError(LexiconErrorCode::UnknownLexeme,
                                   "unknown verb '" + verb_of(p).form + "'");
        } else {
            childIds.push_back(compile_term(head_term_of(p), level + 1, nullptr).str());
        }

        bool savedGapTaken = gapTaken;
        gapTaken = false;
        for (const Argument& arg : p.arguments) {
            if (verb) {
                const std::string& role = mapped(sem_surface(arg.semantic));
                if (!verb->has_role(role))
                    throw CompileError(CompileErrorCode::RoleMismatch,
                                       "verb '" + verb->lemma + "' takes no " + role +
                                           " argument");
            }
            childIds.push_back(compile_term(arg.term, level + 1, &arg).str());
        }
        gapTaken = savedGapTaken;

        bool passive = false;
        if (verb) {
            for (const Argument& arg : p.arguments)
                if (arg.syntactic == SyntacticFunction::Subject &&
                    arg.semantic != SemanticFunction::Agent)
                    passive = true;
        }

        fb.set(id, "type", FactValue::atom("pred"));
        fb.set(id, "tense",
               FactValue::atom(mapped(p.operators.tense == Tense::Past ? "Past" : "Pres")));
        fb.set(id, mapped("Pf"), FactValue::atom(p.operators.perfect ? "true" : "false"));
        fb.set(id, mapped("Prog"), FactValue::atom(p.operators.progressive ? "true" : "false"));
        fb.set(id, "mode", FactValue::atom("ind"));
        fb.set(id, "voice", FactValue::atom(passive ? "passive" : "active"));
        fb.set(id, "subnodes", FactValue::list(childIds));
        if (verb) {
            fb.set(id, "lex", FactValue::quoted(verb->lemma));
            fb.set(id, "nav", FactValue::list({"V"}));
        }
        fb.set(id, "det", FactValue::atom("def"));
        return id;
    }

    // arg is null for a copular head term.
    NodeId compile_term(const Term& t, int level, const Argument* arg) {
        NodeId id = fb.add_node(level);
        const NounEntry& noun = noun_entry(t.head);

        // A bare argument whose lemma restates the restricted noun inside a
        // restrictor predication is the relative gap; it keeps num and det
        // unspecified (absent) so the realizer can recognize it. One gap per
        // predication, first match wins.
        bool gap = arg != nullptr && is_gap(t);
        if (gap) gapTaken = true;

        std::vector<std::string> childIds;
        const Term* savedHost = hostTerm;
        hostTerm = &t;
        for (const Predication& r : t.restrictors)
            childIds.push_back(compile_predication(r, level + 1).str());
        hostTerm = savedHost;

        fb.set(id, "type", FactValue::atom("term"));
        if (arg) {
            fb.set(id, "role", FactValue::atom(mapped(sem_surface(arg->semantic))));
            if (arg->syntactic == SyntacticFunction::Subject)
                fb.set(id, "relation", FactValue::atom(mapped("Subj")));
            else if (arg->syntactic == SyntacticFunction::Object)
                fb.set(id, "relation", FactValue::atom(mapped("Obj")));
            else
                fb.set(id, "relation", FactValue::atom("restarg"));
        }
        fb.set(id, "proper", FactValue::atom(noun.proper ? "true" : "false"));
        fb.set(id, "pragmatic", FactValue::atom("null"));
        if (!gap) {
            if (t.number == NumberMark::Singular)
                fb.set(id, "num", FactValue::atom(mapped("1")));
            else if (t.number == NumberMark::Plural)
                fb.set(id, "num", FactValue::atom(mapped("m")));
            else
                fb.set(id, "num", FactValue::atom("singular"));
        }
        std::vector<std::string> modifs;
        for (const Lexeme& m : t.modifiers) modifs.push_back(m.form);
        fb.set(id, "modifs", FactValue::list(modifs));
        if (!childIds.empty()) fb.set(id, "subnodes", FactValue::list(childIds));
        fb.set(id, "lex", FactValue::quoted(t.head.form));
        fb.set(id, "nav", FactValue::list({"N"}));
        if (!gap) {
            if (t.determinacy == Determinacy::Definite)
                fb.set(id, "det", FactValue::atom(mapped("d")));
            else if (t.determinacy == Determinacy::Indefinite)
                fb.set(id, "det", FactValue::atom(mapped("i")));
            else
                fb.set(id, "det", FactValue::atom("indef"));
        }
        return id;
    }

    // The innermost term whose restrictor predications are being compiled;
    // its lemma identifies the relative gap among the arguments.
    const Term* hostTerm = nullptr;
    bool gapTaken = false;

    bool is_gap(const Term& t) const {
        return hostTerm != nullptr && !gapTaken &&
               t.determinacy == Determinacy::Unspecified &&
               t.number == NumberMark::Unspecified && t.head.form == hostTerm->head.form;
    }
};

} // namespace detail

inline FactBase compile(const Predication& ast, const MappingConfig& mapping,
                        const Lexicon& lexicon) {
    detail::Compiler c{mapping, lexicon, {}, nullptr, false};
    c.compile_predication(ast, 0);
    c.fb.set_clause("illocution", "decl");
    c.fb.set_clause("type", "mainclause");
    return std::move(c.fb);
}

} // namespace fgen
