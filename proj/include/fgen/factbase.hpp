#pragma once

// The intermediate fact representation: node records plus (node, property,
// value) triples, and a canonical textual dump whose syntax is
//
//   node(x1, 0). node(x2, 1).
//
//   prop(clause, illocution, decl).
//   ...
//   prop(x1, tense, past).
//
// Node lines come first (two records per line), then clause props, then each
// node's props in a fixed key order, blocks separated by blank lines.

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace fgen {

struct NodeId {
    int n = 0; // x1, x2, ...

    std::string str() const { return "x" + std::to_string(n); }
    friend auto operator<=>(const NodeId&, const NodeId&) = default;
};

struct FactValue {
    enum class Kind { Atom, Quoted, List };
    Kind kind = Kind::Atom;
    std::string scalar;             // Atom, Quoted
    std::vector<std::string> items; // List

    static FactValue atom(std::string s) { return {Kind::Atom, std::move(s), {}}; }
    static FactValue quoted(std::string s) { return {Kind::Quoted, std::move(s), {}}; }
    static FactValue list(std::vector<std::string> v) { return {Kind::List, {}, std::move(v)}; }

    std::string render() const {
        switch (kind) {
            case Kind::Atom: return scalar;
            case Kind::Quoted: return "'" + scalar + "'";
            case Kind::List: {
                std::string out = "[";
                for (size_t i = 0; i < items.size(); ++i) {
                    if (i) out += ", ";
                    out += items[i];
                }
                return out + "]";
            }
        }
        return {};
    }

    friend bool operator==(const FactValue&, const FactValue&) = default;
};

struct FactBase {
    std::vector<std::pair<NodeId, int>> nodes; // (id, tree depth), in id order
    std::vector<std::pair<std::string, std::string>> clauseProps;
    // Per-node props in emission order; node blocks in id order.
    std::vector<std::pair<NodeId, std::vector<std::pair<std::string, FactValue>>>> nodeProps;

    NodeId add_node(int level) {
        NodeId id{static_cast<int>(nodes.size()) + 1};
        nodes.emplace_back(id, level);
        nodeProps.emplace_back(id, std::vector<std::pair<std::string, FactValue>>{});
        return id;
    }

    void set(NodeId id, std::string key, FactValue value) {
        nodeProps[static_cast<size_t>(id.n) - 1].second.emplace_back(std::move(key),
                                                                     std::move(value));
    }

    void set_clause(std::string key, std::string value) {
        clauseProps.emplace_back(std::move(key), std::move(value));
    }
};

// The unique value for (node, key), or absent. Never throws for unknown keys
// or nodes.
inline std::optional<FactValue> query(const FactBase& fb, NodeId node, const std::string& key) {
    if (node.n < 1 || static_cast<size_t>(node.n) > fb.nodeProps.size()) return std::nullopt;
    for (const auto& [k, v] : fb.nodeProps[static_cast<size_t>(node.n) - 1].second)
        if (k == key) return v;
    return std::nullopt;
}

inline std::string dump_facts(const FactBase& fb) {
    std::string out;
    for (size_t i = 0; i < fb.nodes.size(); ++i) {
        out += "node(" + fb.nodes[i].first.str() + ", " + std::to_string(fb.nodes[i].second) + ").";
        out += (i % 2 == 0 && i + 1 < fb.nodes.size()) ? " " : "\n";
    }
    out += "\n";
    for (const auto& [key, value] : fb.clauseProps)
        out += "prop(clause, " + key + ", " + value + ").\n";
    for (const auto& [id, props] : fb.nodeProps) {
        out += "\n";
        for (const auto& [key, value] : props)
            out += "prop(" + id.str() + ", " + key + ", " + value.render() + ").\n";
    }
    return out;
}

// Record-set view for order-insensitive comparison: every node(...) and
// prop(...) line as an individual string.
inline std::set<std::string> fact_records(const FactBase& fb) {
    std::set<std::string> records;
    for (const auto& [id, level] : fb.nodes)
        records.insert("node(" + id.str() + ", " + std::to_string(level) + ").");
    for (const auto& [key, value] : fb.clauseProps)
        records.insert("prop(clause, " + key + ", " + value + ").");
    for (const auto& [id, props] : fb.nodeProps)
        for (const auto& [key, value] : props)
            records.insert("prop(" + id.str() + ", " + key + ", " + value.render() + ").");
    return records;
}

} // namespace fgen
