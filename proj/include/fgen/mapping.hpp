#pragma once

// Key=value config files: the surface-token mapping that decouples notation
// tokens from fact values (m -> plural), and the role -> preposition table.
// Line oriented, '#' starts a comment line, UTF-8.

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace fgen {

enum class ConfigErrorCode { MalformedLine, DuplicateKey, MissingRequiredKey };

class ConfigError : public std::runtime_error {
public:
    ConfigError(ConfigErrorCode code, const std::string& message, int line = 0,
                std::string key = {})
        : std::runtime_error(message), code_(code), line_(line), key_(std::move(key)) {}

    ConfigErrorCode code() const { return code_; }
    int line() const { return line_; }
    const std::string& key() const { return key_; }

private:
    ConfigErrorCode code_;
    int line_;
    std::string key_;
};

struct MappingConfig {
    std::map<std::string, std::string> entries;

    const std::string* find(const std::string& token) const {
        auto it = entries.find(token);
        return it == entries.end() ? nullptr : &it->second;
    }
};

namespace detail {

inline std::string_view trim(std::string_view s) {
    size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

inline std::map<std::string, std::string> load_key_values(std::string_view text) {
    std::map<std::string, std::string> entries;
    int lineNo = 0;
    size_t start = 0;
    while (start <= text.size()) {
        size_t end = text.find('\n', start);
        std::string_view raw = text.substr(start, end == std::string_view::npos
                                                      ? std::string_view::npos
                                                      : end - start);
        ++lineNo;
        std::string_view line = trim(raw);
        if (!line.empty() && line[0] != '#') {
            size_t eq = line.find('=');
            if (eq == std::string_view::npos)
                throw ConfigError(ConfigErrorCode::MalformedLine,
                                  "line " + std::to_string(lineNo) + ": expected key=value",
                                  lineNo);
            std::string key(trim(line.substr(0, eq)));
            std::string value(trim(line.substr(eq + 1)));
            if (key.empty() || value.empty())
                throw ConfigError(ConfigErrorCode::MalformedLine,
                                  "line " + std::to_string(lineNo) + ": empty key or value",
                                  lineNo);
            if (entries.count(key))
                throw ConfigError(ConfigErrorCode::DuplicateKey,
                                  "duplicate key '" + key + "'", lineNo, key);
            entries.emplace(std::move(key), std::move(value));
        }
        if (end == std::string_view::npos) break;
        start = end + 1;
    }
    return entries;
}

} // namespace detail

// Every token the notation parser can emit for operators, determiners,
// numbers and functions must be mapped.
inline const std::vector<std::string>& required_mapping_keys() {
    static const std::vector<std::string> keys = {
        "Past", "Pres", "Pf", "Prog", "d", "i", "1", "m",
        "Ag", "Go", "Rec", "0", "Subj", "Obj",
    };
    return keys;
}

inline MappingConfig load_mapping(std::string_view text) {
    MappingConfig config{detail::load_key_values(text)};
    for (const auto& key : required_mapping_keys())
        if (!config.entries.count(key))
            throw ConfigError(ConfigErrorCode::MissingRequiredKey,
                              "missing required key '" + key + "'", 0, key);
    return config;
}

// Role -> preposition table for the realizer, same file format.
struct PrepositionMap {
    std::map<std::string, std::string> entries;

    const std::string* find(const std::string& role) const {
        auto it = entries.find(role);
        return it == entries.end() ? nullptr : &it->second;
    }
};

inline PrepositionMap default_prepositions() {
    return {{{"recipient", "to"}, {"agent", "by"}}};
}

inline PrepositionMap load_prepositions(std::string_view text) {
    return {detail::load_key_values(text)};
}

} // namespace fgen
