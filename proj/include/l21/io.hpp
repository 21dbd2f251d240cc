#pragma once

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "l21/graph.hpp"
#include "l21/labeling.hpp"

namespace l21 {

/// Labeling JSON form: {"k": int, "labels": [int or null, ...]}.
inline std::string labeling_to_json(const Labeling& f) {
    nlohmann::json j;
    j["k"] = f.k;
    j["labels"] = nlohmann::json::array();
    for (int x : f.labels) {
        if (x == kAbsent)
            j["labels"].push_back(nullptr);
        else
            j["labels"].push_back(x);
    }
    j["span"] = f.span();
    return j.dump();
}

inline Labeling labeling_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("labeling JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("k") || !j.contains("labels") || !j["labels"].is_array())
        throw ParseError("labeling JSON: expected {\"k\": int, \"labels\": [...]}");
    Labeling f;
    f.k = j["k"].get<int>();
    for (const auto& x : j["labels"]) {
        if (x.is_null())
            f.labels.push_back(kAbsent);
        else if (x.is_number_integer())
            f.labels.push_back(x.get<int>());
        else
            throw ParseError("labeling JSON: labels must be integers or null");
    }
    return f;
}

/// DOT output; labels annotate vertices when given.
inline std::string to_dot(const Graph& g, const Labeling* f = nullptr,
                          const std::vector<std::string>* names = nullptr) {
    std::ostringstream out;
    out << "graph G {\n";
    for (int v = 0; v < g.n(); ++v) {
        out << "  " << v << " [label=\"";
        if (names && v < static_cast<int>(names->size()))
            out << (*names)[v];
        else
            out << v;
        if (f && v < static_cast<int>(f->labels.size()) && f->labels[v] != kAbsent)
            out << ": " << f->labels[v];
        out << "\"];\n";
    }
    for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
    return out.str();
}

}  // namespace l21
