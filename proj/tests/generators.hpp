#pragma once

// Test-only structure generators and checking oracles.

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "fgen/fg_ast.hpp"
#include "fgen/lexicon.hpp"
#include "fgen/morphology.hpp"
#include "fgen/rl_ast.hpp"

namespace testgen {

struct Rng {
    std::mt19937 eng;

    explicit Rng(unsigned seed) : eng(seed) {}

    int range(int lo, int hi) { // inclusive
        return std::uniform_int_distribution<int>(lo, hi)(eng);
    }
    bool chance(double p) {
        return std::uniform_real_distribution<double>(0.0, 1.0)(eng) < p;
    }
    template <typename T>
    const T& pick(const std::vector<T>& pool) {
        return pool[static_cast<size_t>(range(0, static_cast<int>(pool.size()) - 1))];
    }
};

// ---------------------------------------------------------------- FG, free

inline fgen::PredOperators random_operators(Rng& rng) {
    fgen::PredOperators ops;
    ops.tense = rng.chance(0.5) ? fgen::Tense::Past : fgen::Tense::Present;
    ops.perfect = rng.chance(0.3);
    ops.progressive = rng.chance(0.2);
    return ops;
}

// Arbitrary well-formed structures for parser round trips; lexemes need not
// resolve in any lexicon.
inline fgen::Term arbitrary_term(Rng& rng, int depth);

inline fgen::Predication arbitrary_predication(Rng& rng, int depth) {
    static const std::vector<std::string> verbs = {"love", "give", "push", "see"};
    fgen::Predication p;
    p.operators = random_operators(rng);
    if (depth > 0 && rng.chance(0.2)) {
        p.head = arbitrary_term(rng, depth - 1);
        fgen::Argument zero;
        zero.term = arbitrary_term(rng, 0);
        zero.semantic = fgen::SemanticFunction::Zero;
        zero.syntactic = rng.chance(0.2) ? fgen::SyntacticFunction::Subject
                                         : fgen::SyntacticFunction::None;
        p.arguments.push_back(zero);
        return p;
    }
    p.head = fgen::Lexeme{rng.pick(verbs), fgen::Category::Verb};
    static const std::vector<fgen::SemanticFunction> sems = {
        fgen::SemanticFunction::Agent, fgen::SemanticFunction::Goal,
        fgen::SemanticFunction::Recipient, fgen::SemanticFunction::Zero};
    static const std::vector<fgen::SyntacticFunction> syns = {
        fgen::SyntacticFunction::None, fgen::SyntacticFunction::Subject,
        fgen::SyntacticFunction::Object};
    int argc = rng.range(0, 3);
    for (int i = 0; i < argc; ++i) {
        fgen::Argument a;
        a.term = arbitrary_term(rng, depth > 0 ? depth - 1 : 0);
        a.semantic = rng.pick(sems);
        a.syntactic = rng.pick(syns);
        p.arguments.push_back(a);
    }
    return p;
}

inline fgen::Term arbitrary_term(Rng& rng, int depth) {
    static const std::vector<std::string> nouns = {"man", "woman", "rock", "idea", "fox"};
    static const std::vector<std::string> adjs = {"old", "soft", "young", "red"};
    fgen::Term t;
    int det = rng.range(0, 2);
    t.determinacy = det == 0   ? fgen::Determinacy::Unspecified
                    : det == 1 ? fgen::Determinacy::Definite
                               : fgen::Determinacy::Indefinite;
    int num = rng.range(0, 2);
    t.number = num == 0   ? fgen::NumberMark::Unspecified
               : num == 1 ? fgen::NumberMark::Singular
                          : fgen::NumberMark::Plural;
    t.head = fgen::Lexeme{rng.pick(nouns), fgen::Category::Noun};
    int mods = rng.range(0, 2);
    for (int i = 0; i < mods; ++i)
        t.modifiers.push_back(fgen::Lexeme{rng.pick(adjs), fgen::Category::Adjective});
    if (depth > 0) {
        int restr = rng.range(0, 2);
        for (int i = 0; i < restr; ++i)
            t.restrictors.push_back(arbitrary_predication(rng, depth - 1));
    }
    return t;
}

// ------------------------------------------------------- FG, realizable

// Structures that survive the whole pipeline against the seed lexicon. Nouns
// within one clause tree are drawn without replacement so surface word counts
// stay checkable.
struct RealizableGen {
    Rng& rng;
    std::vector<std::string> nounPool = {"man", "woman", "farmer", "duckling",
                                         "book", "mary", "john"};
    size_t nextNoun = 0;
    int predications = 0;

    explicit RealizableGen(Rng& r) : rng(r) {
        std::shuffle(nounPool.begin(), nounPool.end(), rng.eng);
    }

    std::string take_noun() { return nounPool[nextNoun++ % nounPool.size()]; }

    fgen::Term term(bool allowModifiers) {
        static const std::vector<std::string> adjs = {"old", "soft", "young"};
        fgen::Term t;
        t.head = fgen::Lexeme{take_noun(), fgen::Category::Noun};
        int det = rng.range(0, 2);
        t.determinacy = det == 0   ? fgen::Determinacy::Unspecified
                        : det == 1 ? fgen::Determinacy::Definite
                                   : fgen::Determinacy::Indefinite;
        int num = rng.range(0, 2);
        t.number = num == 0   ? fgen::NumberMark::Unspecified
                   : num == 1 ? fgen::NumberMark::Singular
                              : fgen::NumberMark::Plural;
        if (allowModifiers && rng.chance(0.4))
            t.modifiers.push_back(fgen::Lexeme{rng.pick(adjs), fgen::Category::Adjective});
        return t;
    }

    fgen::Predication clause(int depth) {
        ++predications;
        fgen::Predication p;
        p.operators = random_operators(rng);
        if (rng.chance(0.15)) { // copular
            fgen::Term head = term(true);
            if (depth > 0 && rng.chance(0.5)) relativize(head, depth - 1);
            p.head = head;
            fgen::Argument zero;
            zero.term = term(false);
            zero.semantic = fgen::SemanticFunction::Zero;
            p.arguments.push_back(zero);
            return p;
        }
        bool give = rng.chance(0.5);
        p.head = fgen::Lexeme{give ? "give" : "love", fgen::Category::Verb};
        std::vector<fgen::SemanticFunction> roles = {fgen::SemanticFunction::Agent,
                                                     fgen::SemanticFunction::Goal};
        if (give && rng.chance(0.7)) roles.push_back(fgen::SemanticFunction::Recipient);
        size_t subject = static_cast<size_t>(rng.range(0, static_cast<int>(roles.size()) - 1));
        for (size_t i = 0; i < roles.size(); ++i) {
            fgen::Argument a;
            a.term = term(true);
            a.semantic = roles[i];
            if (i == subject) a.syntactic = fgen::SyntacticFunction::Subject;
            else if (roles[i] == fgen::SemanticFunction::Goal && rng.chance(0.8))
                a.syntactic = fgen::SyntacticFunction::Object;
            p.arguments.push_back(a);
        }
        if (depth > 0 && rng.chance(0.5)) {
            size_t host = static_cast<size_t>(
                rng.range(0, static_cast<int>(p.arguments.size()) - 1));
            relativize(p.arguments[host].term, depth - 1);
        }
        return p;
    }

    void relativize(fgen::Term& host, int depth) {
        fgen::Predication r = clause(depth);
        size_t gap = static_cast<size_t>(rng.range(0, static_cast<int>(r.arguments.size()) - 1));
        fgen::Term gapTerm;
        gapTerm.head = host.head; // bare restatement of the restricted noun
        r.arguments[gap].term = gapTerm;
        host.restrictors.push_back(std::move(r));
    }

    bool expects_passive(const fgen::Predication& p) const {
        if (!fgen::is_verbal(p)) return false;
        for (const auto& a : p.arguments)
            if (a.syntactic == fgen::SyntacticFunction::Subject &&
                a.semantic != fgen::SemanticFunction::Agent)
                return true;
        return false;
    }
};

// --------------------------------------------------------------- RL trees

inline fgen::RlNode random_rl_node(Rng& rng, int depth, bool topLevel) {
    static const std::vector<std::string> lemmas = {"tek", "kot", "im", "naif", "mi"};
    static const std::vector<char> innerLayers = {'e', 'f', 'x', 'l', 't'};
    fgen::RlNode n;
    n.layer = topLevel && rng.chance(0.3) ? 'p' : rng.pick(innerLayers);
    n.index = rng.range(1, 9);
    if (rng.chance(0.4)) n.op = rng.chance(0.5) ? "Past" : "Pres";
    int groups = rng.range(0, 2);
    for (int g = 0; g < groups; ++g) {
        fgen::RlRestrictor r;
        if (rng.chance(0.6)) r.lemma = rng.pick(lemmas);
        if (depth > 0 && rng.chance(0.6)) {
            r.bracketed = true;
            int kids = rng.range(0, 3);
            for (int k = 0; k < kids; ++k)
                r.children.push_back(random_rl_node(rng, depth - 1, false));
        } else if (rng.chance(0.2)) {
            r.bracketed = true; // empty bracket
        }
        r.closing.layer = n.layer;
        r.closing.index = n.index;
        n.restrictors.push_back(std::move(r));
    }
    static const std::vector<std::string> functions = {"Ag", "Pat", "Inst"};
    if (!topLevel && rng.chance(0.4)) n.function = rng.pick(functions);
    else if (topLevel && rng.chance(0.15)) n.function = rng.pick(functions);
    return n;
}

// ------------------------------------------------------------- oracles

// Counts finite verb forms by English auxiliary morphotactics: is/are/was/
// were/has/have/had are finite; -ing forms and participles are not; a form
// that doubles as past and participle counts only when no auxiliary
// immediately precedes it.
inline int count_finite_verbs(const std::string& sentence, const fgen::Lexicon& lex) {
    static const std::set<std::string> finiteAux = {"is",  "are",  "was", "were",
                                                    "has", "have", "had"};
    static const std::set<std::string> auxBefore = {"is",   "are", "was",  "were", "has",
                                                    "have", "had", "been", "being"};
    std::vector<std::string> tokens;
    std::string current;
    for (char c : sentence) {
        if (c == ' ') {
            if (!current.empty()) tokens.push_back(current);
            current.clear();
        } else {
            current += c;
        }
    }
    if (!current.empty()) tokens.push_back(current);

    int count = 0;
    std::string prev;
    for (const auto& tok : tokens) {
        if (finiteAux.count(tok)) {
            ++count;
        } else {
            for (const auto& [lemma, entry] : lex.verbs) {
                std::string past = entry.pastForm ? *entry.pastForm : fgen::regular_past(lemma);
                if (tok == lemma || tok == fgen::third_singular(lemma)) {
                    ++count;
                    break;
                }
                if (tok == past && !auxBefore.count(prev)) {
                    ++count;
                    break;
                }
            }
        }
        prev = tok;
    }
    return count;
}

inline int count_predications(const fgen::Predication& p);

inline int count_predications_in_term(const fgen::Term& t) {
    int n = 0;
    for (const auto& r : t.restrictors) n += count_predications(r);
    return n;
}

inline int count_predications(const fgen::Predication& p) {
    int n = 1;
    if (!fgen::is_verbal(p)) n += count_predications_in_term(fgen::head_term_of(p));
    for (const auto& a : p.arguments) n += count_predications_in_term(a.term);
    return n;
}

} // namespace testgen
