#include <catch2/catch_amalgamated.hpp>

#include <string>
#include <vector>

#include "fgen/fg_lex.hpp"

using namespace fgen;

TEST_CASE("composite function words split by longest match") {
    auto toks = tokenize("AgSubj");
    REQUIRE(toks.size() == 2);
    CHECK(toks[0].kind == TokenKind::SemFuncTok);
    CHECK(toks[0].sem == SemanticFunction::Agent);
    CHECK(toks[0].span == SourceSpan{1, 1, 2});
    CHECK(toks[1].kind == TokenKind::SynFuncTok);
    CHECK(toks[1].syn == SyntacticFunction::Subject);
    CHECK(toks[1].span == SourceSpan{1, 3, 4});

    auto rec = tokenize("RecSubj");
    REQUIRE(rec.size() == 2);
    CHECK(rec[0].sem == SemanticFunction::Recipient);
    CHECK(rec[1].syn == SyntacticFunction::Subject);

    auto zero = tokenize("0");
    REQUIRE(zero.size() == 1);
    CHECK(zero[0].kind == TokenKind::SemFuncTok);
    CHECK(zero[0].sem == SemanticFunction::Zero);
}

TEST_CASE("empty input yields no tokens") {
    CHECK(tokenize("").empty());
    CHECK(tokenize("  \n\t ").empty());
}

TEST_CASE("unknown function suffix is rejected where the suffix starts") {
    // Oracle: no split of the word into a semantic function plus an optional
    // syntactic function exists, so tokenizing must fail; the reported column
    // is where the unmatched remainder begins.
    const std::string word = "AgFoo";
    const std::vector<std::string> sems = {"Ag", "Go", "Rec", "0"};
    const std::vector<std::string> syns = {"", "Subj", "Obj"};
    bool splittable = false;
    for (const auto& sem : sems)
        for (const auto& syn : syns)
            if (sem + syn == word) splittable = true;
    REQUIRE_FALSE(splittable);

    try {
        tokenize(word);
        FAIL("expected UnknownFunction");
    } catch (const FgParseError& e) {
        CHECK(e.code() == FgErrorCode::UnknownFunction);
        CHECK(e.span().line == 1);
        CHECK(e.span().column == 3);
    }
}

TEST_CASE("bare syntactic functions are not valid function words") {
    CHECK_THROWS_AS(tokenize("Subj"), FgParseError);
}

TEST_CASE("operator words match case-insensitively") {
    for (const char* text : {"Pf", "pf", "PF"}) {
        auto toks = tokenize(text);
        REQUIRE(toks.size() == 1);
        CHECK(toks[0].kind == TokenKind::OperatorTok);
        CHECK(toks[0].op == FgOperator::Pf);
    }
    CHECK(tokenize("past")[0].op == FgOperator::Past);
    CHECK(tokenize("PRES")[0].op == FgOperator::Pres);
    CHECK(tokenize("prog")[0].op == FgOperator::Prog);
}

TEST_CASE("determiner-number-variable clusters") {
    struct Case {
        const char* text;
        Determinacy det;
        NumberMark num;
    };
    for (const Case& c : std::vector<Case>{
             {"x", Determinacy::Unspecified, NumberMark::Unspecified},
             {"dx", Determinacy::Definite, NumberMark::Unspecified},
             {"ix", Determinacy::Indefinite, NumberMark::Unspecified},
             {"1x", Determinacy::Unspecified, NumberMark::Singular},
             {"mx", Determinacy::Unspecified, NumberMark::Plural},
             {"d1x", Determinacy::Definite, NumberMark::Singular},
             {"dmx", Determinacy::Definite, NumberMark::Plural},
             {"i1x", Determinacy::Indefinite, NumberMark::Singular},
             {"imx", Determinacy::Indefinite, NumberMark::Plural},
         }) {
        auto toks = tokenize(c.text);
        REQUIRE(toks.size() == 1);
        CHECK(toks[0].kind == TokenKind::ClusterTok);
        CHECK(toks[0].det == c.det);
        CHECK(toks[0].num == c.num);
    }
}

TEST_CASE("quoted lexemes and category brackets") {
    auto toks = tokenize("'give'[V]");
    REQUIRE(toks.size() == 2);
    CHECK(toks[0].kind == TokenKind::LexemeTok);
    CHECK(toks[0].text == "give");
    CHECK(toks[0].span == SourceSpan{1, 1, 6});
    CHECK(toks[1].kind == TokenKind::CategoryTok);
    CHECK(toks[1].category == Category::Verb);
    CHECK(toks[1].span == SourceSpan{1, 7, 3});
}

TEST_CASE("lexer error cases") {
    try {
        tokenize("'man");
        FAIL("expected UnterminatedLexeme");
    } catch (const FgParseError& e) {
        CHECK(e.code() == FgErrorCode::UnterminatedLexeme);
    }
    try {
        tokenize("'Man'");
        FAIL("expected UnknownCharacter");
    } catch (const FgParseError& e) {
        CHECK(e.code() == FgErrorCode::UnknownCharacter);
        CHECK(e.span().column == 2);
    }
    try {
        tokenize("{");
        FAIL("expected UnknownCharacter");
    } catch (const FgParseError& e) {
        CHECK(e.code() == FgErrorCode::UnknownCharacter);
        CHECK(e.span() == SourceSpan{1, 1, 1});
    }
    try {
        tokenize("'man'[X]");
        FAIL("expected UnknownCharacter");
    } catch (const FgParseError& e) {
        CHECK(e.code() == FgErrorCode::UnknownCharacter);
        CHECK(e.span().column == 7);
    }
}

TEST_CASE("token positions track lines") {
    auto toks = tokenize("(Past e:\n  'give'[V])");
    REQUIRE(toks.size() == 7);
    CHECK(toks[0].span == SourceSpan{1, 1, 1});
    CHECK(toks[1].span == SourceSpan{1, 2, 4});
    CHECK(toks[4].span == SourceSpan{2, 3, 6});
    CHECK(toks[4].text == "give");
    CHECK(toks[5].span == SourceSpan{2, 9, 3});
}
