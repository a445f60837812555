#pragma once

// Beyond-grammar checks for parsed RL structures:
//  - CorefMismatch (error): a restrictor's closing marker must repeat the
//    enclosing node's own layer and index, as in (f1:tek[...](f1)).
//  - DuplicateDefinition (warning): sibling nodes sharing a layer/index pair
//    but carrying different heads.

#include <string>
#include <vector>

#include "fgen/rl_ast.hpp"

namespace fgen {

namespace detail {

inline void validate_node(const RlNode& node, std::vector<Diagnostic>& out) {
    for (const auto& r : node.restrictors) {
        if (r.closing.layer != node.layer || r.closing.index != node.index) {
            out.push_back({Severity::Error, "CorefMismatch",
                           std::string("coreference marker (") + r.closing.layer +
                               std::to_string(r.closing.index) + ") does not match node " +
                               node.layer + std::to_string(node.index),
                           r.closing.span});
        }
    }
    std::vector<const RlNode*> siblings;
    for (const auto& r : node.restrictors)
        for (const auto& child : r.children) siblings.push_back(&child);
    for (size_t i = 0; i < siblings.size(); ++i) {
        for (size_t j = 0; j < i; ++j) {
            const RlNode& a = *siblings[j];
            const RlNode& b = *siblings[i];
            if (a.layer == b.layer && a.index == b.index && !(a.head() == b.head())) {
                out.push_back({Severity::Warning, "DuplicateDefinition",
                               std::string("sibling ") + b.layer + std::to_string(b.index) +
                                   " is already defined with a different head",
                               b.span});
            }
        }
    }
    for (const auto& r : node.restrictors)
        for (const auto& child : r.children) validate_node(child, out);
}

} // namespace detail

inline std::vector<Diagnostic> validate_rl(const RlNode& node) {
    std::vector<Diagnostic> out;
    detail::validate_node(node, out);
    return out;
}

inline bool has_errors(const std::vector<Diagnostic>& diags) {
    for (const auto& d : diags)
        if (d.severity == Severity::Error) return true;
    return false;
}

} // namespace fgen
