#pragma once

// Lexicon: verbs with aktionsart, principal parts and argument frames,
// nouns with plural forms and semantic features, adjectives.
//
// Fact-record file format, one record per logical line (newlines inside
// parentheses are fine), '%' starts a comment:
//
//   verb(<lemma>, <state|action>, [<past|regular>, <participle|regular>],
//        [[<role>, <restriction>], ...]).
//   noun(<lemma>, <plural|regular>, [<feature>, ...], <proper|common>).
//   adj(<lemma>).
//
// Frame slots may carry a trailing capitalized variable ([agent, animate, X1])
// and a verb record may end with a trailing variable argument (..., Sat);
// both are accepted and discarded.

#include <cctype>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fgen/morphology.hpp"

namespace fgen {

enum class LexiconErrorCode {
    MalformedRecord,
    DuplicateLemma,
    UnknownAktionsart,
    UnknownLexeme,
};

class LexiconError : public std::runtime_error {
public:
    LexiconError(LexiconErrorCode code, const std::string& message, int line = 0)
        : std::runtime_error(message), code_(code), line_(line) {}

    LexiconErrorCode code() const { return code_; }
    int line() const { return line_; }

private:
    LexiconErrorCode code_;
    int line_;
};

enum class Aktionsart { State, Action };

struct FrameSlot {
    std::string role;
    std::string restriction;

    friend bool operator==(const FrameSlot&, const FrameSlot&) = default;
};

struct VerbEntry {
    std::string lemma;
    Aktionsart aktionsart = Aktionsart::Action;
    std::optional<std::string> pastForm;       // nullopt = regular
    std::optional<std::string> participleForm; // nullopt = regular
    std::vector<FrameSlot> frame;              // 1..3 slots, roles distinct

    bool has_role(std::string_view role) const {
        for (const auto& slot : frame)
            if (slot.role == role) return true;
        return false;
    }

    friend bool operator==(const VerbEntry&, const VerbEntry&) = default;
};

struct NounEntry {
    std::string lemma;
    std::optional<std::string> pluralForm; // nullopt = regular
    std::set<std::string> features;
    bool proper = false;

    friend bool operator==(const NounEntry&, const NounEntry&) = default;
};

struct AdjEntry {
    std::string lemma;

    friend bool operator==(const AdjEntry&, const AdjEntry&) = default;
};

struct Lexicon {
    std::map<std::string, VerbEntry> verbs;
    std::map<std::string, NounEntry> nouns;
    std::map<std::string, AdjEntry> adjectives;

    const VerbEntry* find_verb(const std::string& lemma) const {
        auto it = verbs.find(lemma);
        return it == verbs.end() ? nullptr : &it->second;
    }
    const NounEntry* find_noun(const std::string& lemma) const {
        auto it = nouns.find(lemma);
        return it == nouns.end() ? nullptr : &it->second;
    }
    const AdjEntry* find_adjective(const std::string& lemma) const {
        auto it = adjectives.find(lemma);
        return it == adjectives.end() ? nullptr : &it->second;
    }

    friend bool operator==(const Lexicon&, const Lexicon&) = default;
};

namespace detail {

struct RecordToken {
    enum Kind { Word, Variable, LParen, RParen, LBracket, RBracket, Comma, Period, End } kind;
    std::string text;
    int line;
};

struct RecordReader {
    std::string_view text;
    size_t pos = 0;
    int line = 1;
    RecordToken current{RecordToken::End, "", 1};

    explicit RecordReader(std::string_view t) : text(t) { next(); }

    [[noreturn]] void fail(const std::string& msg, int at) const {
        throw LexiconError(LexiconErrorCode::MalformedRecord,
                           "line " + std::to_string(at) + ": " + msg, at);
    }

    void next() {
        while (pos < text.size()) {
            char c = text[pos];
            if (c == '\n') { ++line; ++pos; continue; }
            if (c == ' ' || c == '\t' || c == '\r') { ++pos; continue; }
            if (c == '%') {
                while (pos < text.size() && text[pos] != '\n') ++pos;
                continue;
            }
            break;
        }
        if (pos >= text.size()) { current = {RecordToken::End, "", line}; return; }
        char c = text[pos];
        int at = line;
        switch (c) {
            case '(': ++pos; current = {RecordToken::LParen, "(", at}; return;
            case ')': ++pos; current = {RecordToken::RParen, ")", at}; return;
            case '[': ++pos; current = {RecordToken::LBracket, "[", at}; return;
            case ']': ++pos; current = {RecordToken::RBracket, "]", at}; return;
            case ',': ++pos; current = {RecordToken::Comma, ",", at}; return;
            case '.': ++pos; current = {RecordToken::Period, ".", at}; return;
            default: break;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::string word;
            while (pos < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
                word += text[pos++];
            bool variable = std::isupper(static_cast<unsigned char>(word[0]));
            current = {variable ? RecordToken::Variable : RecordToken::Word, word, at};
            return;
        }
        fail(std::string("unexpected character '") + c + "'", at);
    }

    bool at(RecordToken::Kind k) const { return current.kind == k; }

    RecordToken expect(RecordToken::Kind k, const std::string& what) {
        if (current.kind != k) fail("expected " + what + ", found '" + current.text + "'", current.line);
        RecordToken t = current;
        next();
        return t;
    }

    std::string expect_word(const std::string& what) {
        return expect(RecordToken::Word, what).text;
    }
};

inline std::optional<std::string> form_or_regular(std::string form) {
    if (form == "regular") return std::nullopt;
    return form;
}

} // namespace detail

inline Lexicon load_lexicon(std::string_view text) {
    Lexicon lex;
    detail::RecordReader r(text);
    while (!r.at(detail::RecordToken::End)) {
        int recLine = r.current.line;
        std::string kind = r.expect_word("a record name (verb, noun or adj)");
        r.expect(detail::RecordToken::LParen, "'('");
        if (kind == "verb") {
            VerbEntry v;
            v.lemma = r.expect_word("a lemma");
            r.expect(detail::RecordToken::Comma, "','");
            std::string akt = r.expect_word("an aktionsart");
            if (akt == "state") v.aktionsart = Aktionsart::State;
            else if (akt == "action") v.aktionsart = Aktionsart::Action;
            else throw LexiconError(LexiconErrorCode::UnknownAktionsart,
                                    "unknown aktionsart '" + akt + "'", recLine);
            r.expect(detail::RecordToken::Comma, "','");
            r.expect(detail::RecordToken::LBracket, "'['");
            v.pastForm = detail::form_or_regular(r.expect_word("a past form"));
            r.expect(detail::RecordToken::Comma, "','");
            v.participleForm = detail::form_or_regular(r.expect_word("a participle form"));
            r.expect(detail::RecordToken::RBracket, "']'");
            r.expect(detail::RecordToken::Comma, "','");
            r.expect(detail::RecordToken::LBracket, "'['");
            while (!r.at(detail::RecordToken::RBracket)) {
                r.expect(detail::RecordToken::LBracket, "'['");
                FrameSlot slot;
                slot.role = r.expect_word("a role");
                r.expect(detail::RecordToken::Comma, "','");
                slot.restriction = r.expect_word("a restriction");
                if (r.at(detail::RecordToken::Comma)) { // trailing variable, Fig. 8 style
                    r.next();
                    r.expect(detail::RecordToken::Variable, "a slot variable");
                }
                r.expect(detail::RecordToken::RBracket, "']'");
                for (const auto& existing : v.frame)
                    if (existing.role == slot.role)
                        r.fail("duplicate frame role '" + slot.role + "'", recLine);
                v.frame.push_back(std::move(slot));
                if (r.at(detail::RecordToken::Comma)) r.next();
            }
            r.expect(detail::RecordToken::RBracket, "']'");
            if (r.at(detail::RecordToken::Comma)) { // trailing satellites variable
                r.next();
                r.expect(detail::RecordToken::Variable, "a satellites variable");
            }
            if (v.frame.empty() || v.frame.size() > 3)
                r.fail("a verb frame takes 1 to 3 slots", recLine);
            if (lex.verbs.count(v.lemma))
                throw LexiconError(LexiconErrorCode::DuplicateLemma,
                                   "duplicate verb '" + v.lemma + "'", recLine);
            std::string vkey = v.lemma;
            lex.verbs.emplace(std::move(vkey), std::move(v));
        } else if (kind == "noun") {
            NounEntry n;
            n.lemma = r.expect_word("a lemma");
            r.expect(detail::RecordToken::Comma, "','");
            n.pluralForm = detail::form_or_regular(r.expect_word("a plural form"));
            r.expect(detail::RecordToken::Comma, "','");
            r.expect(detail::RecordToken::LBracket, "'['");
            while (!r.at(detail::RecordToken::RBracket)) {
                n.features.insert(r.expect_word("a feature"));
                if (r.at(detail::RecordToken::Comma)) r.next();
            }
            r.expect(detail::RecordToken::RBracket, "']'");
            r.expect(detail::RecordToken::Comma, "','");
            std::string properness = r.expect_word("'proper' or 'common'");
            if (properness == "proper") n.proper = true;
            else if (properness == "common") n.proper = false;
            else r.fail("expected 'proper' or 'common', found '" + properness + "'", recLine);
            if (lex.nouns.count(n.lemma))
                throw LexiconError(LexiconErrorCode::DuplicateLemma,
                                   "duplicate noun '" + n.lemma + "'", recLine);
            std::string nkey = n.lemma;
            lex.nouns.emplace(std::move(nkey), std::move(n));
        } else if (kind == "adj") {
            AdjEntry a{r.expect_word("a lemma")};
            if (lex.adjectives.count(a.lemma))
                throw LexiconError(LexiconErrorCode::DuplicateLemma,
                                   "duplicate adjective '" + a.lemma + "'", recLine);
            std::string akey = a.lemma;
            lex.adjectives.emplace(std::move(akey), std::move(a));
        } else {
            r.fail("unknown record kind '" + kind + "'", recLine);
        }
        r.expect(detail::RecordToken::RParen, "')'");
        r.expect(detail::RecordToken::Period, "'.'");
    }
    return lex;
}

// Canonical record dump; load_lexicon(dump_lexicon(lex)) == lex.
inline std::string dump_lexicon(const Lexicon& lex) {
    std::string out;
    for (const auto& [lemma, v] : lex.verbs) {
        out += "verb(" + lemma + ", ";
        out += v.aktionsart == Aktionsart::State ? "state" : "action";
        out += ", [" + v.pastForm.value_or("regular") + ", " +
               v.participleForm.value_or("regular") + "], [";
        for (size_t i = 0; i < v.frame.size(); ++i) {
            if (i) out += ", ";
            out += "[" + v.frame[i].role + ", " + v.frame[i].restriction + "]";
        }
        out += "]).\n";
    }
    for (const auto& [lemma, n] : lex.nouns) {
        out += "noun(" + lemma + ", " + n.pluralForm.value_or("regular") + ", [";
        bool first = true;
        for (const auto& f : n.features) {
            if (!first) out += ", ";
            first = false;
            out += f;
        }
        out += "], ";
        out += n.proper ? "proper" : "common";
        out += ").\n";
    }
    for (const auto& [lemma, a] : lex.adjectives) out += "adj(" + lemma + ").\n";
    return out;
}

// Past and participle forms; regular markers expand by rule.
inline std::pair<std::string, std::string> verb_forms(const Lexicon& lex,
                                                      const std::string& lemma) {
    const VerbEntry* v = lex.find_verb(lemma);
    if (!v)
        throw LexiconError(LexiconErrorCode::UnknownLexeme, "unknown verb '" + lemma + "'");
    std::string past = v->pastForm ? *v->pastForm : regular_past(lemma);
    std::string part = v->participleForm ? *v->participleForm : past;
    return {past, part};
}

inline std::string plural_form(const Lexicon& lex, const std::string& lemma) {
    const NounEntry* n = lex.find_noun(lemma);
    if (!n)
        throw LexiconError(LexiconErrorCode::UnknownLexeme, "unknown noun '" + lemma + "'");
    return n->pluralForm ? *n->pluralForm : regular_plural(lemma);
}

} // namespace fgen
