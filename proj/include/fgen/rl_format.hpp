#pragma once

// Typeset renderings of RL structures and a text view of the derivation tree.
//
// compact:   one line, single spaces between siblings, no space around ':'.
// indented:  newline after '[', one bracketed child per line, 4-space indent
//            per depth, closing ']' at the parent's indent.
// subscript: compact layout with each index in _{n} markup.

#include <string>
#include <vector>

#include "fgen/rl_ast.hpp"

namespace fgen {

enum class RlStyle { Compact, Indented, Subscript };

namespace detail {

inline std::string rl_index(char layer, int index, bool subscript) {
    std::string out(1, layer);
    if (subscript) out += "_{" + std::to_string(index) + "}";
    else out += std::to_string(index);
    return out;
}

inline void format_node(const RlNode& node, bool indented, bool subscript, int depth,
                        std::string& out) {
    out += '(';
    if (node.op) out += *node.op + ' ';
    out += rl_index(node.layer, node.index, subscript);
    for (const auto& r : node.restrictors) {
        out += ':';
        if (r.lemma) out += *r.lemma;
        if (r.bracketed) {
            out += '[';
            if (indented) {
                std::string childPad((depth + 1) * 4, ' ');
                for (const auto& child : r.children) {
                    out += '\n' + childPad;
                    format_node(child, indented, subscript, depth + 1, out);
                }
                out += '\n' + std::string(depth * 4, ' ');
            } else {
                bool first = true;
                for (const auto& child : r.children) {
                    if (!first) out += ' ';
                    first = false;
                    format_node(child, indented, subscript, depth, out);
                }
            }
            out += ']';
        }
        out += '(' + rl_index(r.closing.layer, r.closing.index, subscript) + ')';
    }
    out += ')';
    if (node.function) out += *node.function;
}

} // namespace detail

inline std::string format_rl(const RlNode& node, RlStyle style) {
    std::string out;
    detail::format_node(node, style == RlStyle::Indented, style == RlStyle::Subscript, 0, out);
    return out;
}

// Derivation-tree rendering: one line per rule or token, two-space indent.
// Structural punctuation is elided; coreference markers keep their
// parentheses to stay distinct from the node's own layer-index line.
inline const char* rl_rule_name(char layer) {
    switch (layer) {
        case 'p': return "content";
        case 'e': return "soaffairs";
        case 'f': return "property";
        case 'x': return "individual";
        case 'l': return "location";
        case 't': return "time";
    }
    return "?";
}

namespace detail {

inline void tree_node(const RlNode& node, int depth, std::string& out) {
    std::string pad(depth * 2, ' ');
    out += pad + rl_rule_name(node.layer) + "\n";
    std::string inner(depth * 2 + 2, ' ');
    if (node.op) out += inner + *node.op + "\n";
    out += inner + node.layer + std::to_string(node.index) + "\n";
    for (const auto& r : node.restrictors) {
        out += inner + "head\n";
        std::string headPad(depth * 2 + 4, ' ');
        if (r.lemma) out += headPad + *r.lemma + "\n";
        for (const auto& child : r.children) tree_node(child, depth + 2, out);
        out += inner + "(" + r.closing.layer + std::to_string(r.closing.index) + ")\n";
    }
    if (node.function) out += inner + *node.function + "\n";
}

} // namespace detail

inline std::string rl_tree(const RlNode& node) {
    std::string out;
    detail::tree_node(node, 0, out);
    return out;
}

} // namespace fgen
