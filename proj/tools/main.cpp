// Command-line front end: an interactive prompt and batch realization for FG
// underlying structures, a fact dump, and validate/format/tree commands for
// FDG Representational Level notation.
//
// Exit codes: 0 success, 1 semantic or validation failure, 2 syntax failure,
// 3 configuration failure. Standard output carries only results; prompts and
// diagnostics go to the error stream.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fgen/fgen.hpp"
#include "fgen_seed_data.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitSemantic = 1;
constexpr int kExitSyntax = 2;
constexpr int kExitConfig = 3;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string file_or(const std::string& path, const char* fallback) {
    return path.empty() ? std::string(fallback) : read_file(path);
}

struct Engine {
    fgen::Lexicon lexicon;
    fgen::MappingConfig mapping;
    fgen::PrepositionMap prepositions;

    std::string realize_text(const std::string& text) const {
        fgen::Predication ast = fgen::parse_structure(text);
        fgen::FactBase fb = fgen::compile(ast, mapping, lexicon);
        return fgen::realize(fb, lexicon, prepositions);
    }

    std::string facts_text(const std::string& text) const {
        fgen::Predication ast = fgen::parse_structure(text);
        return fgen::dump_facts(fgen::compile(ast, mapping, lexicon));
    }
};

int run_repl(const Engine& engine) {
    std::string buffer;
    int depth = 0;

    auto evaluate = [&] {
        try {
            std::cout << engine.realize_text(buffer) << "\n" << std::flush;
        } catch (const std::exception& e) {
            std::cerr << "error: " << e.what() << "\n";
        }
        buffer.clear();
        depth = 0;
        std::cerr << ">> " << std::flush;
    };

    std::cerr << ">> " << std::flush;
    std::string line;
    while (std::getline(std::cin, line)) {
        bool blankLine = line.find_first_not_of(" \t\r") == std::string::npos;
        if (blankLine && buffer.empty()) {
            std::cerr << ">> " << std::flush;
            continue;
        }
        if (blankLine) { // flush a pending structure, reporting what is wrong
            evaluate();
            continue;
        }
        for (char c : line) {
            if (c == '(') ++depth;
            else if (c == ')') --depth;
        }
        if (!buffer.empty()) buffer += '\n';
        buffer += line;
        if (depth > 0) continue; // structure still open, keep reading
        evaluate();
    }
    if (!buffer.empty()) evaluate();
    return kExitOk;
}

std::vector<std::string> split_blocks(const std::string& text) {
    std::vector<std::string> blocks;
    std::string current;
    std::istringstream in(text);
    std::string line;
    auto flush = [&] {
        if (current.find_first_not_of(" \t\r\n") != std::string::npos)
            blocks.push_back(current);
        current.clear();
    };
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) flush();
        else {
            if (!current.empty()) current += '\n';
            current += line;
        }
    }
    flush();
    return blocks;
}

int run_batch(const Engine& engine, const std::string& inputPath, bool facts) {
    std::string text = read_file(inputPath);
    bool failed = false;
    bool firstDump = true;
    int blockNo = 0;
    for (const std::string& block : split_blocks(text)) {
        ++blockNo;
        try {
            if (facts) {
                if (!firstDump) std::cout << "\n";
                firstDump = false;
                std::cout << engine.facts_text(block);
            } else {
                std::cout << engine.realize_text(block) << "\n";
            }
        } catch (const std::exception& e) {
            std::cerr << "block " << blockNo << ": error: " << e.what() << "\n";
            failed = true;
        }
    }
    return failed ? kExitSemantic : kExitOk;
}

int run_fdg(const std::string& mode, const std::string& inputPath,
            const std::string& tokenSetPath, const std::string& styleName) {
    fgen::TokenSets sets = fgen::load_token_sets(file_or(tokenSetPath, fgen::seed::token_sets));
    std::string text = read_file(inputPath);
    fgen::RlNode node;
    try {
        node = fgen::parse_rl(text, sets);
    } catch (const fgen::RlParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitSyntax;
    }
    if (mode == "fdg-tree") {
        std::cout << fgen::rl_tree(node);
        return kExitOk;
    }
    std::vector<fgen::Diagnostic> diags = fgen::validate_rl(node);
    for (const auto& d : diags)
        std::cerr << (d.severity == fgen::Severity::Error ? "error " : "warning ") << d.code
                  << " at " << fgen::to_string(d.span) << ": " << d.message << "\n";
    if (fgen::has_errors(diags)) return kExitSemantic;
    if (mode == "fdg-format") {
        fgen::RlStyle style = fgen::RlStyle::Compact;
        if (styleName == "indented") style = fgen::RlStyle::Indented;
        else if (styleName == "subscript") style = fgen::RlStyle::Subscript;
        std::cout << fgen::format_rl(node, style) << "\n";
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Sentence generation from Functional Grammar underlying structures,"
                 " with tools for FDG Representational Level notation"};
    app.require_subcommand(1);

    std::string lexiconPath, mappingPath, prepositionPath, tokenSetPath, styleName = "compact";
    std::string inputPath;

    auto addEnginePaths = [&](CLI::App* cmd) {
        cmd->add_option("--lexicon", lexiconPath, "lexicon fact-record file")
            ->envname("FGR_LEXICON");
        cmd->add_option("--mapping", mappingPath, "token mapping file");
        cmd->add_option("--prepositions", prepositionPath, "role preposition file");
    };

    CLI::App* repl = app.add_subcommand("repl", "interactive prompt: one structure in,"
                                                " one sentence out");
    addEnginePaths(repl);

    CLI::App* realizeCmd = app.add_subcommand("realize", "realize each structure of a batch"
                                                         " file, one sentence per line");
    realizeCmd->add_option("input", inputPath, "structures, blank-line separated")->required();
    addEnginePaths(realizeCmd);

    CLI::App* factsCmd = app.add_subcommand("facts", "dump the fact representation of each"
                                                     " structure of a batch file");
    factsCmd->add_option("input", inputPath, "structures, blank-line separated")->required();
    addEnginePaths(factsCmd);

    CLI::App* fdgValidate = app.add_subcommand("fdg-validate", "validate RL notation");
    CLI::App* fdgFormat = app.add_subcommand("fdg-format", "reformat RL notation");
    CLI::App* fdgTree = app.add_subcommand("fdg-tree", "print the RL derivation tree");
    for (CLI::App* cmd : {fdgValidate, fdgFormat, fdgTree}) {
        cmd->add_option("input", inputPath, "RL structure file")->required();
        cmd->add_option("--token-sets", tokenSetPath, "function/operator token file");
    }
    fdgFormat->add_option("--style", styleName, "compact, indented or subscript")
        ->check(CLI::IsMember({"compact", "indented", "subscript"}));

    CLI11_PARSE(app, argc, argv);

    try {
        if (repl->parsed() || realizeCmd->parsed() || factsCmd->parsed()) {
            Engine engine;
            try {
                engine.lexicon = fgen::load_lexicon(file_or(lexiconPath, fgen::seed::lexicon));
                engine.mapping = fgen::load_mapping(file_or(mappingPath, fgen::seed::mapping));
                engine.prepositions =
                    fgen::load_prepositions(file_or(prepositionPath, fgen::seed::prepositions));
            } catch (const std::exception& e) {
                std::cerr << "error: " << e.what() << "\n";
                return kExitConfig;
            }
            if (repl->parsed()) return run_repl(engine);
            return run_batch(engine, inputPath, factsCmd->parsed());
        }
        for (CLI::App* cmd : {fdgValidate, fdgFormat, fdgTree})
            if (cmd->parsed()) return run_fdg(cmd->get_name(), inputPath, tokenSetPath, styleName);
    } catch (const fgen::ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    }
    return kExitOk;
}
