#pragma once

// Regular English inflection rules. Irregular forms live in the lexicon and
// bypass these entirely.

#include <string>
#include <string_view>

namespace fgen {

namespace detail {

inline bool is_vowel(char c) {
    return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u';
}

inline bool ends_with(std::string_view s, std::string_view suffix) {
    return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

} // namespace detail

// Regular past tense: love -> loved, carry -> carried, walk -> walked.
// The participle of a regular verb equals its past form.
inline std::string regular_past(std::string_view lemma) {
    std::string s(lemma);
    if (detail::ends_with(s, "e")) return s + "d";
    if (s.size() >= 2 && s.back() == 'y' && !detail::is_vowel(s[s.size() - 2]))
        return s.substr(0, s.size() - 1) + "ied";
    return s + "ed";
}

// Regular plural: farmer -> farmers, fox -> foxes, lady -> ladies.
inline std::string regular_plural(std::string_view lemma) {
    std::string s(lemma);
    if (detail::ends_with(s, "s") || detail::ends_with(s, "x") || detail::ends_with(s, "z") ||
        detail::ends_with(s, "ch") || detail::ends_with(s, "sh"))
        return s + "es";
    if (s.size() >= 2 && s.back() == 'y' && !detail::is_vowel(s[s.size() - 2]))
        return s.substr(0, s.size() - 1) + "ies";
    return s + "s";
}

// Third person singular present: love -> loves, watch -> watches, try -> tries.
inline std::string third_singular(std::string_view lemma) {
    return regular_plural(lemma);
}

// Present participle: give -> giving, see -> seeing, walk -> walking.
inline std::string present_participle(std::string_view lemma) {
    std::string s(lemma);
    if (s.size() >= 2 && s.back() == 'e' && s[s.size() - 2] != 'e')
        return s.substr(0, s.size() - 1) + "ing";
    return s + "ing";
}

inline std::string capitalized(std::string_view word) {
    std::string s(word);
    if (!s.empty() && s[0] >= 'a' && s[0] <= 'z') s[0] = static_cast<char>(s[0] - 'a' + 'A');
    return s;
}

} // namespace fgen
