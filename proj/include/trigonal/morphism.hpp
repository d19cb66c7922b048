#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "trigonal/divisor.hpp"
#include "trigonal/gonality.hpp"
#include "trigonal/multigraph.hpp"

namespace trigonal {

// Image of a source edge: either a target edge (by index) or a target
// vertex (when both endpoints collapse).
struct EdgeImage {
    bool to_edge = true;
    int index = -1;

    static EdgeImage edge(int e) { return {true, e}; }
    static EdgeImage vertex(int v) { return {false, v}; }
    bool operator==(const EdgeImage&) const = default;
};

// Graph morphism: vertices map to vertices; an edge maps to an edge
// between the endpoint images, or to their common image vertex when they
// collapse.  Construction validates both conditions.
class GraphMorphism {
public:
    GraphMorphism(Multigraph source, Multigraph target, std::vector<int> vertex_map,
                  std::vector<EdgeImage> edge_map)
        : source_(std::move(source)),
          target_(std::move(target)),
          vertex_map_(std::move(vertex_map)),
          edge_map_(std::move(edge_map)) {
        require((int)vertex_map_.size() == source_.vertex_count(), "GraphMismatch",
                "vertex map size differs from the source vertex count");
        require((int)edge_map_.size() == source_.edge_count(), "GraphMismatch",
                "edge map size differs from the source edge count");
        for (int v : vertex_map_) target_.check_vertex(v);
        for (int e = 0; e < source_.edge_count(); ++e) {
            auto [u, v] = source_.edges()[e];
            int fu = vertex_map_[u], fv = vertex_map_[v];
            const EdgeImage& im = edge_map_[e];
            if (fu == fv) {
                require(!im.to_edge && im.index == fu, "EdgeCollapseViolation",
                        "edge " + std::to_string(e) + " joins vertices with a common image '" +
                            target_.label(fu) + "' and must map to that vertex");
            } else {
                require(im.to_edge, "EndpointMismatch",
                        "edge " + std::to_string(e) + " must map to a target edge between '" +
                            target_.label(fu) + "' and '" + target_.label(fv) + "'");
                const auto& te = target_.edge(im.index);
                require((te.u == fu && te.v == fv) || (te.u == fv && te.v == fu),
                        "EndpointMismatch",
                        "edge " + std::to_string(e) + " maps to a target edge with the wrong endpoints");
            }
        }
    }

    const Multigraph& source() const { return source_; }
    const Multigraph& target() const { return target_; }
    int vertex_image(int v) const {
        source_.check_vertex(v);
        return vertex_map_[v];
    }
    const std::vector<int>& vertex_map() const { return vertex_map_; }
    const EdgeImage& edge_image(int e) const {
        require(e >= 0 && e < source_.edge_count(), "UnknownEdge",
                "no source edge with index " + std::to_string(e));
        return edge_map_[e];
    }
    const std::vector<EdgeImage>& edge_map() const { return edge_map_; }

private:
    Multigraph source_, target_;
    std::vector<int> vertex_map_;
    std::vector<EdgeImage> edge_map_;
};

// Number of source edges at v mapping onto the target edge te, which must
// touch the image of v.
inline int multiplicity(const GraphMorphism& f, int v, int te) {
    f.source().check_vertex(v);
    const auto& e2 = f.target().edge(te);
    require(e2.touches(f.vertex_image(v)), "EdgeNotIncident",
            "target edge " + std::to_string(te) + " does not touch the image of '" +
                f.source().label(v) + "'");
    int count = 0;
    for (int e : f.source().incident(v)) {
        const EdgeImage& im = f.edge_image(e);
        if (im.to_edge && im.index == te) ++count;
    }
    return count;
}

// The common count over all target edges at the image; harmonicity makes
// it independent of the chosen edge.  Vertices over an isolated image get
// multiplicity 0.
inline int vertex_multiplicity(const GraphMorphism& f, int v) {
    int fv = f.vertex_image(v);
    for (int te : f.target().incident(fv)) return multiplicity(f, v, te);
    return 0;
}

inline bool is_harmonic(const GraphMorphism& f) {
    for (int v = 0; v < f.source().vertex_count(); ++v) {
        int fv = f.vertex_image(v);
        std::optional<int> m;
        for (int te : f.target().incident(fv)) {
            int c = multiplicity(f, v, te);
            if (m && *m != c) return false;
            m = c;
        }
    }
    return true;
}

// Non-degenerate: every vertex has positive multiplicity.  A single-vertex
// target has no edges to measure against and counts as non-degenerate.
inline bool is_nondegenerate(const GraphMorphism& f) {
    if (f.target().vertex_count() == 1) return true;
    for (int v = 0; v < f.source().vertex_count(); ++v)
        if (vertex_multiplicity(f, v) == 0) return false;
    return true;
}

// Edges over any one target edge; independence of the choice is the
// defining property of a harmonic morphism between connected graphs and is
// re-verified here.
inline int degree(const GraphMorphism& f) {
    require(f.target().edge_count() >= 1, "TargetEdgeless",
            "degree needs a target with at least one edge");
    require(is_harmonic(f), "NotHarmonic", "degree is defined for harmonic morphisms");
    std::vector<int> fibre(f.target().edge_count(), 0);
    for (int e = 0; e < f.source().edge_count(); ++e) {
        const EdgeImage& im = f.edge_image(e);
        if (im.to_edge) fibre[im.index] += 1;
    }
    for (int te = 1; te < f.target().edge_count(); ++te)
        require(fibre[te] == fibre[0], "VerificationFailed",
                "edge fibres of a harmonic morphism differ in size");
    return fibre[0];
}

// Pullback of a target divisor: each vertex receives its multiplicity
// times the chips at its image.  Degree multiplies by deg(f).
inline Divisor pullback(const GraphMorphism& f, const Divisor& on_target) {
    check_bound(f.target(), on_target);
    Divisor d(f.source().vertex_count());
    for (int v = 0; v < f.source().vertex_count(); ++v)
        d[v] = vertex_multiplicity(f, v) * on_target[f.vertex_image(v)];
    return d;
}

// Quotient of g by the moving-support partition of a degree-3 positive
// rank divisor.  Adjacent blocks are joined by exactly three edges, which
// become one quotient edge; edges inside a block collapse to its vertex.
// The result is a tree and the projection is harmonic, non-degenerate, of
// degree 3 -- all re-verified.
inline std::pair<Multigraph, GraphMorphism> quotient_from_divisor(const Multigraph& g,
                                                                  const Divisor& d) {
    require(g.vertex_count() > 3, "TooFewVertices",
            "divisor quotient needs more than three vertices");
    ClassPartition p = class_partition(g, d);  // checks degree, rank, 3-edge-connectivity

    int nb = (int)p.blocks.size();
    std::vector<std::string> labels;
    labels.reserve(nb);
    for (const VertexSet& b : p.blocks) labels.push_back(g.label(b.members().front()));

    // group inter-block edges by block pair; each group of three becomes
    // one quotient edge, ordered by its smallest source edge index
    std::map<std::pair<int, int>, std::vector<int>> groups;
    std::vector<EdgeImage> edge_map(g.edge_count());
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edges()[e];
        int bu = p.block_of[u], bv = p.block_of[v];
        if (bu == bv) {
            edge_map[e] = EdgeImage::vertex(bu);
        } else {
            groups[{std::min(bu, bv), std::max(bu, bv)}].push_back(e);
        }
    }
    std::vector<std::pair<int, std::pair<int, int>>> ordered;  // (smallest edge, block pair)
    for (auto& [pair, es] : groups) {
        require((int)es.size() == 3, "VerificationFailed",
                "adjacent blocks must be joined by exactly three edges");
        ordered.push_back({es.front(), pair});
    }
    std::sort(ordered.begin(), ordered.end());
    std::vector<std::pair<int, int>> qedges;
    for (int q = 0; q < (int)ordered.size(); ++q) {
        auto [first_e, pair] = ordered[q];
        qedges.push_back(pair);
        for (int e : groups[pair]) edge_map[e] = EdgeImage::edge(q);
    }
    Multigraph tree = Multigraph::from_indices(labels, qedges);
    require(genus(tree) == 0, "QuotientNotTree", "divisor quotient has a cycle");

    GraphMorphism f(g, tree, p.block_of, edge_map);
    require(is_harmonic(f), "NotHarmonic", "divisor quotient projection is not harmonic");
    require(is_nondegenerate(f), "VerificationFailed",
            "divisor quotient projection is degenerate");
    require(degree(f) == 3, "VerificationFailed", "divisor quotient projection has wrong degree");
    return {std::move(tree), std::move(f)};
}

// Positive-rank divisor certified by a non-degenerate harmonic morphism
// onto a tree: the fibre over any target vertex, weighted by multiplicity.
// Its degree equals deg(f), so a degree-3 morphism certifies gonality 3.
inline Divisor divisor_from_morphism(const GraphMorphism& f, int target_vertex) {
    f.target().check_vertex(target_vertex);
    require(genus(f.target()) == 0, "TargetNotTree", "certifying morphism must land on a tree");
    require(f.target().edge_count() >= 1, "TargetEdgeless",
            "certifying morphism needs a target with an edge");
    require(is_harmonic(f), "NotHarmonic", "certifying morphism must be harmonic");
    require(is_nondegenerate(f), "Degenerate", "certifying morphism must be non-degenerate");
    Divisor d(f.source().vertex_count());
    for (int v = 0; v < f.source().vertex_count(); ++v)
        if (f.vertex_image(v) == target_vertex) d[v] = vertex_multiplicity(f, v);
    require(d.degree() == degree(f), "VerificationFailed",
            "fibre degree differs from the morphism degree");
    require(has_positive_rank(f.source(), d), "VerificationFailed",
            "fibre divisor does not have positive rank");
    return d;
}

}  // namespace trigonal
