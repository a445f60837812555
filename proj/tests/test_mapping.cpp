#include <catch2/catch_amalgamated.hpp>

#include <string>

#include "fgen/mapping.hpp"

using namespace fgen;

namespace {

std::string full_mapping_text() {
    return "Past=past\nPres=pres\nPf=perfect\nProg=progressive\n"
           "d=def\ni=indef\n1=singular\nm=plural\n"
           "Ag=agent\nGo=goal\nRec=recipient\n0=zero\nSubj=subject\nObj=object\n";
}

} // namespace

TEST_CASE("mapping entries load") {
    MappingConfig config = load_mapping(full_mapping_text());
    REQUIRE(config.find("m"));
    CHECK(*config.find("m") == "plural");
    REQUIRE(config.find("d"));
    CHECK(*config.find("d") == "def");
    CHECK(config.entries.size() == 14);
    CHECK(config.find("nonexistent") == nullptr);
}

TEST_CASE("comments and blank lines are ignored") {
    MappingConfig config = load_mapping("# comment\n\n" + full_mapping_text() + "\n# tail\n");
    CHECK(config.entries.size() == 14);
}

TEST_CASE("duplicate keys are rejected") {
    try {
        load_mapping("m=plural\nm=pl\n");
        FAIL("expected DuplicateKey");
    } catch (const ConfigError& e) {
        CHECK(e.code() == ConfigErrorCode::DuplicateKey);
        CHECK(e.key() == "m");
    }
}

TEST_CASE("malformed lines are rejected with their line number") {
    try {
        load_mapping("Past=past\nnot a pair\n");
        FAIL("expected MalformedLine");
    } catch (const ConfigError& e) {
        CHECK(e.code() == ConfigErrorCode::MalformedLine);
        CHECK(e.line() == 2);
    }
}

TEST_CASE("each required key is reported by name when missing") {
    // Oracle: delete each required key in turn; the loader must name it.
    for (const std::string& key : required_mapping_keys()) {
        std::string text;
        for (const std::string& other : required_mapping_keys())
            if (other != key) text += other + "=value\n";
        try {
            load_mapping(text);
            FAIL("expected MissingRequiredKey for " + key);
        } catch (const ConfigError& e) {
            CHECK(e.code() == ConfigErrorCode::MissingRequiredKey);
            CHECK(e.key() == key);
        }
    }
}

TEST_CASE("preposition files share the format without required keys") {
    PrepositionMap preps = load_prepositions("recipient=to\nagent=by\n");
    REQUIRE(preps.find("recipient"));
    CHECK(*preps.find("recipient") == "to");
    CHECK(load_prepositions("").entries.empty());
    CHECK(*default_prepositions().find("agent") == "by");
}
