#pragma once

// Poset JSON ({"size": N, "lt": [[i, j], ...]} with the Hasse edges) and
// Graphviz export.

#include <map>
#include <sstream>
#include <string>

#include <json.hpp>

#include "errors.hpp"
#include "poset.hpp"

namespace poset_ramsey {

inline nlohmann::json poset_to_json(const Poset& p) {
    nlohmann::json lt = nlohmann::json::array();
    for (auto [i, j] : p.transitive_reduction()) lt.push_back({i, j});
    return {{"size", p.size()}, {"lt", std::move(lt)}};
}

inline Poset poset_from_json(const nlohmann::json& doc,
                             std::size_t relation_budget = default_relation_budget) {
    if (!doc.is_object() || !doc.contains("size") || !doc.contains("lt")) {
        throw format_error("poset JSON needs \"size\" and \"lt\"", "top level");
    }
    if (!doc["size"].is_number_unsigned()) {
        throw format_error("\"size\" must be a non-negative integer", "size");
    }
    const auto size = doc["size"].get<std::size_t>();
    const auto& lt = doc["lt"];
    if (!lt.is_array()) throw format_error("\"lt\" must be an array", "lt");
    std::vector<Relation> relations;
    for (std::size_t idx = 0; idx < lt.size(); ++idx) {
        const auto& pair = lt[idx];
        if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_unsigned() ||
            !pair[1].is_number_unsigned()) {
            throw format_error("\"lt\" entries must be [i, j] index pairs",
                               "lt[" + std::to_string(idx) + "]");
        }
        relations.emplace_back(pair[0].get<std::size_t>(), pair[1].get<std::size_t>());
    }
    try {
        return Poset::from_relations(size, relations, relation_budget);
    } catch (const precondition_error& e) {
        throw format_error(e.what(), "lt");
    }
}

inline Poset parse_poset(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw format_error("invalid JSON: " + std::string(e.what()),
                           "byte " + std::to_string(e.byte));
    }
    return poset_from_json(doc);
}

/// Hasse diagram, bottom-up, one rank per depth level.
inline std::string export_dot(const Poset& p, const std::string& name = "P") {
    std::ostringstream out;
    out << "digraph " << name << " {\n  rankdir=BT;\n  node [shape=circle];\n";
    const auto depth = p.depths();
    std::map<std::size_t, std::vector<std::size_t>> ranks;
    for (std::size_t e = 0; e < p.size(); ++e) ranks[depth[e]].push_back(e);
    for (const auto& [level, elements] : ranks) {
        out << "  { rank=same;";
        for (auto e : elements) out << ' ' << e << ';';
        out << " }\n";
    }
    for (auto [i, j] : p.transitive_reduction()) out << "  " << i << " -> " << j << ";\n";
    out << "}\n";
    return out.str();
}

} // namespace poset_ramsey
