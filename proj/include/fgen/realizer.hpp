#pragma once

// English surface realization from a fact base plus lexicon.
//
// Verbal clauses: subject NP, verb group, object NP, then the remaining
// arguments with their role's preposition (recipient -> to, agent -> by).
// Passive clauses front the subject relation's NP, realize the goal bare
// after the verb group, and put the by-agent last. Copular clauses: the
// zero-function NP, inflected be, then the predicate-nominal term.
//
// A restrictor predication realizes as a relative clause: the argument that
// restates the restricted noun with unspecified determinacy and number is the
// gap; it leaves its slot and a relative pronoun (who for human/animate head
// nouns, which otherwise) opens the clause.
//
// Output has no terminal punctuation; only the first character and proper
// nouns are upper case.

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fgen/factbase.hpp"
#include "fgen/fg_ast.hpp"
#include "fgen/lexicon.hpp"
#include "fgen/mapping.hpp"
#include "fgen/morphology.hpp"

namespace fgen {

enum class RealizeErrorCode { UnsupportedIllocution, NoSubject };

class RealizeError : public std::runtime_error {
public:
    RealizeError(RealizeErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    RealizeErrorCode code() const { return code_; }

private:
    RealizeErrorCode code_;
};

enum class Voice { Active, Passive };
enum class Agreement { Sg3, Other };
enum class NpDet { Definite, Indefinite };
enum class NpNum { Singular, Plural };

struct VerbGroupSpec {
    std::string lemma;
    Tense tense = Tense::Present;
    bool perfect = false;
    bool progressive = false;
    Voice voice = Voice::Active;
    Agreement agreement = Agreement::Other;
};

struct NounPhraseSpec {
    NpDet det = NpDet::Definite;
    NpNum num = NpNum::Singular;
    bool proper = false;
    std::string lemma;
    std::vector<std::string> modifiers;
    std::optional<std::string> relativeClause;
};

// Auxiliary chain, leftmost element finite: perfect -> have, progressive ->
// be + -ing, passive -> be + past participle.
inline std::vector<std::string> inflect_verb(const VerbGroupSpec& spec, const Lexicon& lex) {
    std::string past, participle;
    if (spec.lemma != "be") {
        auto forms = verb_forms(lex, spec.lemma); // throws UnknownLexeme
        past = forms.first;
        participle = forms.second;
    }

    enum class Form { Finite, PastPart, PresPart };
    bool sg3 = spec.agreement == Agreement::Sg3;
    bool pastTense = spec.tense == Tense::Past;

    auto render = [&](const std::string& lemma, Form form) -> std::string {
        if (lemma == "have") {
            switch (form) {
                case Form::Finite: return pastTense ? "had" : (sg3 ? "has" : "have");
                case Form::PastPart: return "had";
                case Form::PresPart: return "having";
            }
        }
        if (lemma == "be") {
            switch (form) {
                case Form::Finite:
                    if (pastTense) return sg3 ? "was" : "were";
                    return sg3 ? "is" : "are";
                case Form::PastPart: return "been";
                case Form::PresPart: return "being";
            }
        }
        switch (form) {
            case Form::Finite:
                if (pastTense) return past;
                return sg3 ? third_singular(lemma) : lemma;
            case Form::PastPart: return participle;
            case Form::PresPart: return present_participle(lemma);
        }
        return lemma;
    };

    std::vector<std::pair<std::string, Form>> chain;
    Form next = Form::Finite;
    if (spec.perfect) { chain.emplace_back("have", next); next = Form::PastPart; }
    if (spec.progressive) { chain.emplace_back("be", next); next = Form::PresPart; }
    if (spec.voice == Voice::Passive) { chain.emplace_back("be", next); next = Form::PastPart; }
    chain.emplace_back(spec.lemma, next);

    std::vector<std::string> words;
    words.reserve(chain.size());
    for (const auto& [lemma, form] : chain) words.push_back(render(lemma, form));
    return words;
}

// Determiner + modifiers + inflected noun + relative clause. Proper nouns
// capitalize and suppress the determiner; indefinite plurals take none;
// indefinite singulars take a/an by the following word's first letter.
inline std::string realize_term(const NounPhraseSpec& np, const Lexicon& lex) {
    const NounEntry* entry = lex.find_noun(np.lemma);
    if (!entry)
        throw LexiconError(LexiconErrorCode::UnknownLexeme, "unknown noun '" + np.lemma + "'");

    std::string noun = np.proper ? capitalized(np.lemma)
                       : np.num == NpNum::Plural ? plural_form(lex, np.lemma)
                                                 : np.lemma;
    std::vector<std::string> words;
    if (!np.proper) {
        if (np.det == NpDet::Definite) {
            words.push_back("the");
        } else if (np.num == NpNum::Singular) {
            const std::string& next = np.modifiers.empty() ? noun : np.modifiers.front();
            words.push_back(!next.empty() && detail::is_vowel(next[0]) ? "an" : "a");
        }
    }
    for (const auto& m : np.modifiers) words.push_back(m);
    words.push_back(noun);

    std::string out;
    for (const auto& w : words) {
        if (!out.empty()) out += ' ';
        out += w;
    }
    if (np.relativeClause && !np.relativeClause->empty()) out += ' ' + *np.relativeClause;
    return out;
}

namespace detail {

struct Realizer {
    const FactBase& fb;
    const Lexicon& lex;
    const PrepositionMap& preps;

    std::string atom(NodeId id, const std::string& key) const {
        auto v = query(fb, id, key);
        if (v && v->kind != FactValue::Kind::List) return v->scalar;
        return {};
    }

    bool has(NodeId id, const std::string& key) const { return query(fb, id, key).has_value(); }

    std::vector<NodeId> subnode_ids(NodeId id) const {
        std::vector<NodeId> out;
        auto v = query(fb, id, "subnodes");
        if (v && v->kind == FactValue::Kind::List) {
            for (const auto& s : v->items) {
                if (s.size() < 2 || s.size() > 8 || s[0] != 'x') continue;
                if (s.find_first_not_of("0123456789", 1) != std::string::npos) continue;
                out.push_back(NodeId{std::stoi(s.substr(1))});
            }
        }
        return out;
    }

    NpNum number_of(NodeId id) const {
        return atom(id, "num") == "plural" ? NpNum::Plural : NpNum::Singular;
    }

    std::string clause(NodeId pred, std::optional<NodeId> gap, NpNum gapNum) const {
        VerbGroupSpec vg;
        vg.tense = atom(pred, "tense") == "past" ? Tense::Past : Tense::Present;
        vg.perfect = atom(pred, "perfect") == "true";
        vg.progressive = atom(pred, "progressive") == "true";

        std::vector<NodeId> kids = subnode_ids(pred);
        std::vector<std::string> parts;
        auto is_gap = [&](NodeId id) { return gap && *gap == id; };

        if (has(pred, "lex")) {
            vg.lemma = atom(pred, "lex");
            vg.voice = atom(pred, "voice") == "passive" ? Voice::Passive : Voice::Active;

            std::optional<NodeId> subject;
            for (NodeId k : kids)
                if (atom(k, "relation") == "subject") { subject = k; break; }
            if (!subject)
                for (NodeId k : kids)
                    if (atom(k, "role") == "zero") { subject = k; break; }
            if (!subject)
                throw RealizeError(RealizeErrorCode::NoSubject,
                                   "no argument of '" + vg.lemma + "' maps to subject");

            NpNum subjNum = is_gap(*subject) ? gapNum : number_of(*subject);
            vg.agreement = subjNum == NpNum::Singular ? Agreement::Sg3 : Agreement::Other;

            if (!is_gap(*subject)) parts.push_back(noun_phrase(*subject));
            for (const auto& w : inflect_verb(vg, lex)) parts.push_back(w);

            // Remaining arguments keep the verb frame's slot order, not the
            // order they were written in.
            const VerbEntry* verb = lex.find_verb(vg.lemma);
            auto frame_position = [&](NodeId k) {
                std::string role = atom(k, "role");
                if (verb)
                    for (size_t i = 0; i < verb->frame.size(); ++i)
                        if (verb->frame[i].role == role) return static_cast<int>(i);
                return 999;
            };

            if (vg.voice == Voice::Active) {
                std::optional<NodeId> object;
                for (NodeId k : kids)
                    if (k != *subject && !is_gap(k) && atom(k, "relation") == "object") {
                        object = k;
                        break;
                    }
                if (object) parts.push_back(noun_phrase(*object));
                std::vector<NodeId> rest;
                for (NodeId k : kids) {
                    if (k == *subject || is_gap(k) || (object && k == *object)) continue;
                    rest.push_back(k);
                }
                std::stable_sort(rest.begin(), rest.end(),
                                 [&](NodeId a, NodeId b) {
                                     return frame_position(a) < frame_position(b);
                                 });
                for (NodeId k : rest) parts.push_back(prepositional(k));
            } else {
                // Goal first and bare, by-agent last.
                std::optional<NodeId> goal;
                for (NodeId k : kids)
                    if (k != *subject && !is_gap(k) && atom(k, "role") == "goal") {
                        goal = k;
                        break;
                    }
                if (goal) parts.push_back(noun_phrase(*goal));
                std::vector<NodeId> rest;
                for (NodeId k : kids) {
                    if (k == *subject || is_gap(k) || (goal && k == *goal)) continue;
                    if (atom(k, "role") == "agent") continue;
                    rest.push_back(k);
                }
                std::stable_sort(rest.begin(), rest.end(),
                                 [&](NodeId a, NodeId b) {
                                     return frame_position(a) < frame_position(b);
                                 });
                for (NodeId k : rest) parts.push_back(prepositional(k));
                for (NodeId k : kids) {
                    if (k == *subject || is_gap(k)) continue;
                    if (atom(k, "role") == "agent") parts.push_back("by " + noun_phrase(k));
                }
            }
        } else {
            // Copular: the head term is the first subnode and carries no role.
            vg.lemma = "be";
            std::optional<NodeId> headTerm, subject;
            for (NodeId k : kids) {
                if (!has(k, "role")) { if (!headTerm) headTerm = k; }
                else if (atom(k, "role") == "zero" && !subject) subject = k;
            }
            if (!subject || !headTerm)
                throw RealizeError(RealizeErrorCode::NoSubject,
                                   "a copular clause needs a zero-function argument");
            NpNum subjNum = is_gap(*subject) ? gapNum : number_of(*subject);
            vg.agreement = subjNum == NpNum::Singular ? Agreement::Sg3 : Agreement::Other;
            if (!is_gap(*subject)) parts.push_back(noun_phrase(*subject));
            for (const auto& w : inflect_verb(vg, lex)) parts.push_back(w);
            parts.push_back(noun_phrase(*headTerm));
        }

        std::string out;
        for (const auto& p : parts) {
            if (p.empty()) continue;
            if (!out.empty()) out += ' ';
            out += p;
        }
        return out;
    }

    std::string prepositional(NodeId id) const {
        std::string np = noun_phrase(id);
        const std::string* prep = preps.find(atom(id, "role"));
        return prep ? *prep + " " + np : np;
    }

    std::string noun_phrase(NodeId id) const {
        std::string rc;
        for (NodeId r : subnode_ids(id)) {
            if (!rc.empty()) rc += ' ';
            rc += relative_clause(r, id);
        }
        NounPhraseSpec np;
        np.lemma = atom(id, "lex");
        np.proper = atom(id, "proper") == "true";
        np.num = number_of(id);
        // The determiner decision: an unmarked or definite NP realizes with
        // "the"; only indefinite plurals drop the determiner.
        np.det = (atom(id, "det") == "indef" && np.num == NpNum::Plural) ? NpDet::Indefinite
                                                                         : NpDet::Definite;
        auto mods = query(fb, id, "modifs");
        if (mods && mods->kind == FactValue::Kind::List) np.modifiers = mods->items;
        if (!rc.empty()) np.relativeClause = rc;
        return realize_term(np, lex);
    }

    std::string relative_clause(NodeId pred, NodeId host) const {
        std::string hostLex = atom(host, "lex");
        std::optional<NodeId> gap;
        for (NodeId k : subnode_ids(pred))
            if (atom(k, "lex") == hostLex && !has(k, "num") && !has(k, "det")) {
                gap = k;
                break;
            }
        const NounEntry* noun = lex.find_noun(hostLex);
        if (!noun)
            throw LexiconError(LexiconErrorCode::UnknownLexeme,
                               "unknown noun '" + hostLex + "'");
        bool animate = noun->features.count("human") || noun->features.count("animate");
        std::string body = clause(pred, gap, number_of(host));
        std::string pron = animate ? "who" : "which";
        return body.empty() ? pron : pron + " " + body;
    }
};

} // namespace detail

inline std::string realize(const FactBase& fb, const Lexicon& lex,
                           const PrepositionMap& preps = default_prepositions()) {
    std::string illocution;
    for (const auto& [key, value] : fb.clauseProps)
        if (key == "illocution") illocution = value;
    if (illocution != "decl")
        throw RealizeError(RealizeErrorCode::UnsupportedIllocution,
                           "unsupported illocution '" + illocution + "'");
    detail::Realizer r{fb, lex, preps};
    std::string out = r.clause(NodeId{1}, std::nullopt, NpNum::Singular);
    return capitalized(out);
}

} // namespace fgen
