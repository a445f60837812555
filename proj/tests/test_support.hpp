#pragma once

// Shared fixtures: the seed lexicon and mapping, loaded from data/.

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "fgen/lexicon.hpp"
#include "fgen/mapping.hpp"

namespace testsupport {

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline std::string data_path(const std::string& name) {
    return std::string(FGEN_DATA_DIR) + "/" + name;
}

inline const fgen::Lexicon& seed_lexicon() {
    static const fgen::Lexicon lex = fgen::load_lexicon(read_file(data_path("lexicon.fgl")));
    return lex;
}

inline const fgen::MappingConfig& seed_mapping() {
    static const fgen::MappingConfig config =
        fgen::load_mapping(read_file(data_path("mapping.cfg")));
    return config;
}

inline const fgen::PrepositionMap& seed_prepositions() {
    static const fgen::PrepositionMap preps =
        fgen::load_prepositions(read_file(data_path("prepositions.cfg")));
    return preps;
}

} // namespace testsupport
