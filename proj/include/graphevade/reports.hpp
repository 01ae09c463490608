#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "graphevade/heuristics.hpp"
#include "graphevade/search.hpp"

namespace graphevade {

// One JSONL line per attacked example.
struct AttackRecord {
    std::string example_id;
    double initial_confidence = 0.0;
    std::string status;
    double path_cost = 0.0;
    std::size_t num_changes = 0;  // path length in edges
    std::size_t expansions = 0;
    std::size_t max_open_size = 0;
    double runtime_ms = 0.0;
    std::string guarantee;
    std::vector<std::string> edits;
};

inline nlohmann::json to_json(const AttackRecord& r) {
    nlohmann::json j;
    j["example_id"] = r.example_id;
    j["initial_confidence"] = r.initial_confidence;
    j["status"] = r.status;
    j["path_cost"] = r.path_cost;
    j["num_changes"] = r.num_changes;
    j["expansions"] = r.expansions;
    j["max_open_size"] = r.max_open_size;
    j["runtime_ms"] = r.runtime_ms;
    j["guarantee"] = r.guarantee;
    j["edits"] = r.edits;
    return j;
}

inline nlohmann::json to_json(const AdmissibilityReport& r) {
    nlohmann::json violations = nlohmann::json::array();
    for (const auto& v : r.violations) {
        nlohmann::json jv;
        jv["node"] = v.node;
        jv["h"] = v.h;
        jv["mac"] = v.mac;
        jv["witness_path"] = v.witness_path;
        violations.push_back(std::move(jv));
    }
    nlohmann::json j;
    j["violations"] = violations;
    j["inconclusive"] = r.inconclusive;
    j["checked"] = r.checked;
    return j;
}

inline nlohmann::json to_json(const ConsistencyReport& r) {
    nlohmann::json violations = nlohmann::json::array();
    for (const auto& v : r.violations) {
        nlohmann::json jv;
        jv["node"] = v.node;
        jv["child"] = v.child;
        jv["h_u"] = v.h_u;
        jv["edge_cost"] = v.edge_cost;
        jv["h_v"] = v.h_v;
        violations.push_back(std::move(jv));
    }
    nlohmann::json j;
    j["violations"] = violations;
    j["checked"] = r.checked;
    return j;
}

}  // namespace graphevade
