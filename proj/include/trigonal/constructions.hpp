#pragma once

#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "trigonal/errors.hpp"
#include "trigonal/multigraph.hpp"

namespace trigonal {

namespace detail {

inline void require_tree(const Multigraph& t) {
    require(genus(t) == 0, "NotATree", "expected a tree, got genus " + std::to_string(genus(t)));
}

inline std::string copy_label(const std::string& base, int copy) {
    return base + "#" + std::to_string(copy);
}

}  // namespace detail

// Two vertices x, y joined by n parallel edges.
inline Multigraph banana(int n) {
    require(n >= 1, "ParameterOutOfRange", "banana needs at least one edge");
    std::vector<std::pair<int, int>> edges(n, {0, 1});
    return Multigraph::from_indices({"x", "y"}, edges);
}

// Path on n vertices p1..pn.
inline Multigraph path(int n) {
    require(n >= 1, "ParameterOutOfRange", "path needs at least one vertex");
    std::vector<std::string> labels;
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= n; ++i) labels.push_back("p" + std::to_string(i));
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Multigraph::from_indices(labels, edges);
}

// Cycle on n vertices c1..cn.
inline Multigraph cycle(int n) {
    require(n >= 3, "ParameterOutOfRange", "cycle needs at least three vertices");
    std::vector<std::string> labels;
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= n; ++i) labels.push_back("c" + std::to_string(i));
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return Multigraph::from_indices(labels, edges);
}

// Complete graph on vertices a, b, c, ... with edges in lexicographic order.
inline Multigraph complete(int n) {
    require(n >= 1 && n <= 26, "ParameterOutOfRange", "complete supports 1..26 vertices");
    std::vector<std::string> labels;
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) labels.push_back(std::string(1, (char)('a' + i)));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return Multigraph::from_indices(labels, edges);
}

// Hub h joined to every rim vertex; rim w1..w_{n-1} forms a cycle.
inline Multigraph wheel(int n) {
    require(n >= 4, "ParameterOutOfRange", "wheel needs at least four vertices");
    std::vector<std::string> labels = {"h"};
    std::vector<std::pair<int, int>> edges;
    int rim = n - 1;
    for (int i = 1; i <= rim; ++i) labels.push_back("w" + std::to_string(i));
    for (int i = 1; i <= rim; ++i) edges.emplace_back(0, i);
    for (int i = 1; i <= rim; ++i) edges.emplace_back(i, i % rim + 1);
    return Multigraph::from_indices(labels, edges);
}

// The 3-cube: vertices are the binary strings of length 3, edges join
// strings at Hamming distance 1, in lexicographic pair order.
inline Multigraph cube() {
    std::vector<std::string> labels;
    for (int i = 0; i < 8; ++i) {
        std::string s;
        for (int b = 2; b >= 0; --b) s += (i >> b & 1) ? '1' : '0';
        labels.push_back(s);
    }
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 8; ++i)
        for (int j = i + 1; j < 8; ++j) {
            int x = i ^ j;
            if ((x & (x - 1)) == 0) edges.emplace_back(i, j);
        }
    return Multigraph::from_indices(labels, edges);
}

// The 12-vertex trivalent graph with trivial automorphism group:
// a 12-cycle v0..v11 plus the six chords of its published LCF code.
inline Multigraph frucht() {
    std::vector<std::string> labels;
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 12; ++i) labels.push_back("v" + std::to_string(i));
    for (int i = 0; i < 12; ++i) edges.emplace_back(i, (i + 1) % 12);
    for (auto [a, b] : std::vector<std::pair<int, int>>{{0, 7}, {1, 11}, {2, 10}, {3, 5}, {4, 9}, {6, 8}})
        edges.emplace_back(a, b);
    return Multigraph::from_indices(labels, edges);
}

// Two triangles u1u2u3 and w1w2w3; v2 adjacent to u2, u3, w2, w3 and v1;
// v1 adjacent to u1 and w1.  Trivalent except for v2 (valence 5).
inline Multigraph twin_triangles() {
    return Multigraph::build(
        {"v1", "v2", "u1", "u2", "u3", "w1", "w2", "w3"},
        {{"u1", "u2"}, {"u1", "u3"}, {"u2", "u3"},
         {"w1", "w2"}, {"w1", "w3"}, {"w2", "w3"},
         {"v2", "u2"}, {"v2", "u3"}, {"v2", "w2"}, {"v2", "w3"}, {"v2", "v1"},
         {"v1", "u1"}, {"v1", "w1"}});
}

enum class BlockShape { K4MinusEdge, PrismMinusEdge, CubeMinusEdge };

namespace detail {

struct TrivalentBlock {
    std::vector<std::string> labels;
    std::vector<std::pair<int, int>> edges;
    int r, s;  // the two valence-2 stubs
};

inline TrivalentBlock make_block(BlockShape shape) {
    switch (shape) {
        case BlockShape::K4MinusEdge:
            return {{"p", "q", "r", "s"},
                    {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}},
                    2, 3};
        case BlockShape::PrismMinusEdge:
            // triangles abc / def with rungs ad, be; the cf rung removed
            return {{"a", "b", "c", "d", "e", "f"},
                    {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}, {0, 3}, {1, 4}},
                    2, 5};
        case BlockShape::CubeMinusEdge: {
            TrivalentBlock b;
            for (int i = 0; i < 8; ++i) b.labels.push_back("c" + std::to_string(i));
            for (int i = 0; i < 8; ++i)
                for (int j = i + 1; j < 8; ++j) {
                    int x = i ^ j;
                    if ((x & (x - 1)) == 0 && !(i == 0 && j == 1)) b.edges.emplace_back(i, j);
                }
            b.r = 0;
            b.s = 1;
            return b;
        }
    }
    fail("ParameterOutOfRange", "unknown block shape");
}

}  // namespace detail

// Simple trivalent bridgeless graph that is exactly 2-edge-connected: two
// blocks, each a trivalent graph minus one edge, joined by two edges
// between the valence-2 stubs.
inline Multigraph two_bridge_trivalent(BlockShape left, BlockShape right) {
    detail::TrivalentBlock a = detail::make_block(left);
    detail::TrivalentBlock b = detail::make_block(right);
    std::vector<std::string> labels;
    std::vector<std::pair<int, int>> edges;
    for (const std::string& l : a.labels) labels.push_back(l + "1");
    for (const std::string& l : b.labels) labels.push_back(l + "2");
    int off = (int)a.labels.size();
    for (auto [u, v] : a.edges) edges.emplace_back(u, v);
    for (auto [u, v] : b.edges) edges.emplace_back(off + u, off + v);
    edges.emplace_back(a.r, off + b.r);
    edges.emplace_back(a.s, off + b.s);
    return Multigraph::from_indices(labels, edges);
}

inline Multigraph two_bridge_trivalent() {
    return two_bridge_trivalent(BlockShape::K4MinusEdge, BlockShape::K4MinusEdge);
}

// Doubled tree: two copies of T, each twin pair joined by 3 - val(v)
// parallel edges.  The output is trivalent.
inline Multigraph ladder(const Multigraph& t) {
    detail::require_tree(t);
    int n = t.vertex_count();
    for (int v = 0; v < n; ++v)
        require(t.valence(v) <= 3, "ValenceTooHigh",
                "vertex '" + t.label(v) + "' has valence " + std::to_string(t.valence(v)));
    std::vector<std::string> labels;
    std::vector<std::pair<int, int>> edges;
    for (int c = 1; c <= 2; ++c)
        for (int v = 0; v < n; ++v) labels.push_back(detail::copy_label(t.label(v), c));
    for (int c = 0; c < 2; ++c)
        for (const auto& e : t.edges()) edges.emplace_back(c * n + e.u, c * n + e.v);
    for (int v = 0; v < n; ++v)
        for (int k = t.valence(v); k < 3; ++k) edges.emplace_back(v, n + v);
    return Multigraph::from_indices(labels, edges);
}

// Triple cover: three copies of T; for each attachment vertex the three
// copies are joined in a triangle.  extra_parallel adds that many extra
// copies of every triangle edge (the multigraph variant).
inline Multigraph triple_cover(const Multigraph& t, const VertexSet& attach,
                               int extra_parallel = 0) {
    detail::require_tree(t);
    require(t.vertex_count() >= 2, "TreeTooSmall", "triple cover needs a tree with >= 2 vertices");
    require(attach.size() >= 2, "AttachmentSetTooSmall", "need at least two attachment vertices");
    require(extra_parallel >= 0, "ParameterOutOfRange", "extra_parallel must be >= 0");
    int n = t.vertex_count();
    std::vector<std::string> labels;
    std::vector<std::pair<int, int>> edges;
    for (int c = 1; c <= 3; ++c)
        for (int v = 0; v < n; ++v) labels.push_back(detail::copy_label(t.label(v), c));
    for (int c = 0; c < 3; ++c)
        for (const auto& e : t.edges()) edges.emplace_back(c * n + e.u, c * n + e.v);
    for (int v : attach.members())
        for (int c1 = 0; c1 < 3; ++c1)
            for (int c2 = c1 + 1; c2 < 3; ++c2)
                for (int rep = 0; rep <= extra_parallel; ++rep)
                    edges.emplace_back(c1 * n + v, c2 * n + v);
    return Multigraph::from_indices(labels, edges);
}

inline Multigraph triple_cover(const Multigraph& t, const std::vector<std::string>& attach,
                               int extra_parallel = 0) {
    return triple_cover(t, VertexSet::of_labels(t, attach), extra_parallel);
}

// k copies of T; every vertex of valence <= k-1 has its k copies joined
// pairwise.  Every vertex of the result has valence >= k.
inline Multigraph k_cover(const Multigraph& t, int k) {
    require(k >= 2, "ParameterOutOfRange", "k_cover needs k >= 2");
    detail::require_tree(t);
    require(t.vertex_count() >= 2, "TreeTooSmall", "k_cover needs a tree with >= 2 vertices");
    int n = t.vertex_count();
    std::vector<std::string> labels;
    std::vector<std::pair<int, int>> edges;
    for (int c = 1; c <= k; ++c)
        for (int v = 0; v < n; ++v) labels.push_back(detail::copy_label(t.label(v), c));
    for (int c = 0; c < k; ++c)
        for (const auto& e : t.edges()) edges.emplace_back(c * n + e.u, c * n + e.v);
    for (int v = 0; v < n; ++v) {
        if (t.valence(v) > k - 1) continue;
        for (int c1 = 0; c1 < k; ++c1)
            for (int c2 = c1 + 1; c2 < k; ++c2) edges.emplace_back(c1 * n + v, c2 * n + v);
    }
    return Multigraph::from_indices(labels, edges);
}

// Triple cover of the single-edge tree over both endpoints.
inline Multigraph prism() {
    Multigraph t = Multigraph::build({"a", "b"}, {{"a", "b"}});
    return triple_cover(t, VertexSet::full(t));
}

// Uniform labelled tree on n vertices t0..t<n-1> by decoding a random
// sequence.
template <class Rng>
Multigraph random_tree(int n, Rng& rng) {
    require(n >= 1, "ParameterOutOfRange", "random_tree needs n >= 1");
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) labels.push_back("t" + std::to_string(i));
    std::vector<std::pair<int, int>> edges;
    if (n >= 2) {
        std::uniform_int_distribution<int> pick(0, n - 1);
        std::vector<int> seq(std::max(0, n - 2));
        for (int& s : seq) s = pick(rng);
        std::vector<int> deg(n, 1);
        for (int s : seq) ++deg[s];
        std::set<int> leaves;
        for (int v = 0; v < n; ++v)
            if (deg[v] == 1) leaves.insert(v);
        for (int s : seq) {
            int leaf = *leaves.begin();
            leaves.erase(leaves.begin());
            edges.emplace_back(leaf, s);
            if (--deg[s] == 1) leaves.insert(s);
        }
        int u = *leaves.begin();
        int v = *leaves.rbegin();
        edges.emplace_back(u, v);
    }
    return Multigraph::from_indices(labels, edges);
}

// Resamples until every valence is at most maxval.
template <class Rng>
Multigraph random_tree_max_valence(int n, int maxval, Rng& rng) {
    for (int attempt = 0; attempt < 10000; ++attempt) {
        Multigraph t = random_tree(n, rng);
        bool ok = true;
        for (int v = 0; v < t.vertex_count() && ok; ++v)
            if (t.valence(v) > maxval) ok = false;
        if (ok) return t;
    }
    fail("InternalError", "could not sample a tree with the requested maximum valence");
}

}  // namespace trigonal
