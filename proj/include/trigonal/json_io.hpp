#pragma once

#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "trigonal/automorphism.hpp"
#include "trigonal/divisor.hpp"
#include "trigonal/errors.hpp"
#include "trigonal/morphism.hpp"
#include "trigonal/multigraph.hpp"

namespace trigonal {

// Insertion-ordered JSON keeps emitted documents byte-stable.
using Json = nlohmann::ordered_json;

namespace detail {

[[noreturn]] inline void malformed(const std::string& what) { fail("MalformedInput", what); }

}  // namespace detail

inline Json parse_json(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        detail::malformed(e.what());
    }
}

// {"vertices": ["a","b",...], "edges": [["a","b"],...]}; parallel edges
// appear once per copy and the array order defines edge indices.
inline Multigraph graph_from_json(const Json& j) {
    if (!j.is_object()) detail::malformed("graph document must be a JSON object");
    if (!j.contains("vertices") || !j["vertices"].is_array())
        detail::malformed("graph document needs a \"vertices\" array");
    if (!j.contains("edges") || !j["edges"].is_array())
        detail::malformed("graph document needs an \"edges\" array");
    std::vector<std::string> labels;
    for (const Json& v : j["vertices"]) {
        if (!v.is_string()) detail::malformed("vertex labels must be strings");
        labels.push_back(v.get<std::string>());
    }
    std::vector<std::pair<std::string, std::string>> edges;
    for (const Json& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
            detail::malformed("each edge must be a two-element array of vertex labels");
        edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
    }
    return Multigraph::build(labels, edges);
}

inline Json graph_to_json(const Multigraph& g) {
    Json j;
    j["vertices"] = Json::array();
    for (const std::string& l : g.labels()) j["vertices"].push_back(l);
    j["edges"] = Json::array();
    for (const auto& e : g.edges()) j["edges"].push_back({g.label(e.u), g.label(e.v)});
    return j;
}

// {"vertex_label": chips, ...}; omitted vertices hold 0 chips.
inline Divisor divisor_from_json(const Multigraph& g, const Json& j) {
    if (!j.is_object()) detail::malformed("divisor document must be a JSON object");
    Divisor d(g.vertex_count());
    for (auto it = j.begin(); it != j.end(); ++it) {
        if (!it.value().is_number_integer())
            detail::malformed("chip count for '" + it.key() + "' must be an integer");
        d[g.index_of(it.key())] = it.value().get<int>();
    }
    return d;
}

// Nonzero entries only, in vertex declaration order.
inline Json divisor_to_json(const Multigraph& g, const Divisor& d) {
    check_bound(g, d);
    Json j = Json::object();
    for (int v = 0; v < g.vertex_count(); ++v)
        if (d[v] != 0) j[g.label(v)] = d[v];
    return j;
}

// {"vertex_map": {src: dst,...}, "edge_map": [dst_edge_index |
// {"vertex": dst}, ...]} with edge_map indexed by source edge order.
inline GraphMorphism morphism_from_json(const Multigraph& src, const Multigraph& dst,
                                        const Json& j) {
    if (!j.is_object()) detail::malformed("morphism document must be a JSON object");
    if (!j.contains("vertex_map") || !j["vertex_map"].is_object())
        detail::malformed("morphism document needs a \"vertex_map\" object");
    if (!j.contains("edge_map") || !j["edge_map"].is_array())
        detail::malformed("morphism document needs an \"edge_map\" array");
    std::vector<int> vmap(src.vertex_count(), -1);
    for (auto it = j["vertex_map"].begin(); it != j["vertex_map"].end(); ++it) {
        if (!it.value().is_string()) detail::malformed("vertex_map values must be target labels");
        vmap[src.index_of(it.key())] = dst.index_of(it.value().get<std::string>());
    }
    for (int v = 0; v < src.vertex_count(); ++v)
        if (vmap[v] < 0) detail::malformed("vertex_map misses '" + src.label(v) + "'");
    if ((int)j["edge_map"].size() != src.edge_count())
        detail::malformed("edge_map must list an image for each of the " +
                          std::to_string(src.edge_count()) + " source edges");
    std::vector<EdgeImage> emap;
    for (const Json& img : j["edge_map"]) {
        if (img.is_number_integer()) {
            int e = img.get<int>();
            if (e < 0 || e >= dst.edge_count())
                detail::malformed("edge_map index " + std::to_string(e) + " out of range");
            emap.push_back(EdgeImage::edge(e));
        } else if (img.is_object() && img.contains("vertex") && img["vertex"].is_string()) {
            emap.push_back(EdgeImage::vertex(dst.index_of(img["vertex"].get<std::string>())));
        } else {
            detail::malformed("edge_map entries must be a target edge index or {\"vertex\": label}");
        }
    }
    return GraphMorphism(src, dst, vmap, emap);
}

inline Json morphism_to_json(const GraphMorphism& f) {
    Json j;
    j["vertex_map"] = Json::object();
    for (int v = 0; v < f.source().vertex_count(); ++v)
        j["vertex_map"][f.source().label(v)] = f.target().label(f.vertex_image(v));
    j["edge_map"] = Json::array();
    for (int e = 0; e < f.source().edge_count(); ++e) {
        EdgeImage img = f.edge_image(e);
        if (img.to_edge)
            j["edge_map"].push_back(img.index);
        else
            j["edge_map"].push_back(Json{{"vertex", f.target().label(img.index)}});
    }
    return j;
}

// {"map": {v: image, ...}} over every vertex, in declaration order.
inline Automorphism automorphism_from_json(const Multigraph& g, const Json& j) {
    if (!j.is_object() || !j.contains("map") || !j["map"].is_object())
        detail::malformed("automorphism document needs a \"map\" object");
    std::vector<int> perm(g.vertex_count(), -1);
    for (auto it = j["map"].begin(); it != j["map"].end(); ++it) {
        if (!it.value().is_string()) detail::malformed("map values must be vertex labels");
        perm[g.index_of(it.key())] = g.index_of(it.value().get<std::string>());
    }
    for (int v = 0; v < g.vertex_count(); ++v)
        if (perm[v] < 0) detail::malformed("map misses '" + g.label(v) + "'");
    return Automorphism(g, perm);
}

inline Json automorphism_to_json(const Multigraph& g, const Automorphism& s) {
    Json j;
    j["map"] = Json::object();
    for (int v = 0; v < g.vertex_count(); ++v) j["map"][g.label(v)] = g.label(s.apply(v));
    return j;
}

// Undirected DOT: every vertex declared in order, then one line per edge.
inline std::string to_dot(const Multigraph& g) {
    std::string out = "graph {\n";
    auto quote = [](const std::string& s) {
        std::string q = "\"";
        for (char c : s) {
            if (c == '"' || c == '\\') q += '\\';
            q += c;
        }
        return q + "\"";
    };
    for (const std::string& l : g.labels()) out += "  " + quote(l) + ";\n";
    for (const auto& e : g.edges()) out += "  " + quote(g.label(e.u)) + " -- " + quote(g.label(e.v)) + ";\n";
    out += "}\n";
    return out;
}

}  // namespace trigonal
