#pragma once

// VertexSet JSON: {"m": M, "n": N, "members": [[row, col], ...]} with 1-based indices.

#include <istream>
#include <stdexcept>
#include <string>

#include "cylinder.hpp"
#include "json.hpp"

namespace cyl2dom {

inline nlohmann::json vertex_set_to_json(const VertexSet& s) {
    nlohmann::json members = nlohmann::json::array();
    for (Vertex v : s.members()) members.push_back({v.row, v.col});
    return {{"m", s.spec().m()}, {"n", s.spec().n()}, {"members", members}};
}

inline VertexSet vertex_set_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("m") || !j.contains("n") || !j.contains("members"))
        throw std::invalid_argument("vertex set json: expected an object with \"m\", \"n\" and \"members\"");
    if (!j["m"].is_number_integer() || !j["n"].is_number_integer())
        throw std::invalid_argument("vertex set json: \"m\" and \"n\" must be integers");
    const CylinderSpec spec(j["m"].get<int>(), j["n"].get<int>());
    VertexSet s(spec);
    if (!j["members"].is_array()) throw std::invalid_argument("vertex set json: \"members\" must be an array");
    for (const auto& e : j["members"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
            throw std::invalid_argument("vertex set json: each member must be [row, col]");
        const Vertex v{e[0].get<int>(), e[1].get<int>()};
        if (!spec.contains(v))
            throw std::out_of_range("vertex set json: member (" + std::to_string(v.row) + "," + std::to_string(v.col) +
                                    ") out of range");
        s.insert(v);
    }
    return s;
}

inline VertexSet read_vertex_set(std::istream& is) {
    nlohmann::json j;
    try {
        is >> j;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("vertex set json: ") + e.what());
    }
    return vertex_set_from_json(j);
}

}  // namespace cyl2dom
