#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <queue>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "trigonal/divisor.hpp"
#include "trigonal/gonality.hpp"
#include "trigonal/morphism.hpp"
#include "trigonal/multigraph.hpp"

namespace trigonal {

// Adjacency-preserving vertex permutation (multiplicities preserved).
class Automorphism {
public:
    Automorphism(const Multigraph& g, std::vector<int> perm) : perm_(std::move(perm)) {
        int n = g.vertex_count();
        require((int)perm_.size() == n, "GraphMismatch", "permutation size differs from vertex count");
        std::vector<char> hit(n, 0);
        for (int v : perm_) {
            g.check_vertex(v);
            require(!hit[v], "NotAnAutomorphism", "vertex map is not a bijection");
            hit[v] = 1;
        }
        for (int u = 0; u < n; ++u)
            for (int v = u; v < n; ++v)
                require(g.multiplicity(u, v) == g.multiplicity(perm_[u], perm_[v]),
                        "NotAnAutomorphism",
                        "map does not preserve adjacency between '" + g.label(u) + "' and '" +
                            g.label(v) + "'");
    }

    int apply(int v) const { return perm_[v]; }
    const std::vector<int>& perm() const { return perm_; }

    bool is_identity() const {
        for (int v = 0; v < (int)perm_.size(); ++v)
            if (perm_[v] != v) return false;
        return true;
    }

    int order() const {
        int n = (int)perm_.size();
        std::vector<char> seen(n, 0);
        long long ord = 1;
        for (int v = 0; v < n; ++v) {
            if (seen[v]) continue;
            int len = 0, w = v;
            while (!seen[w]) {
                seen[w] = 1;
                w = perm_[w];
                ++len;
            }
            ord = std::lcm(ord, (long long)len);
        }
        return (int)ord;
    }

    bool operator==(const Automorphism&) const = default;

private:
    std::vector<int> perm_;
};

namespace detail {

// Stable colouring by iterated neighbour-colour refinement, seeded with
// valence and with multiplicity profiles.
inline std::vector<int> refine_colours(const Multigraph& g) {
    int n = g.vertex_count();
    std::vector<std::vector<int>> key(n);
    for (int v = 0; v < n; ++v) {
        std::vector<int> prof;
        prof.push_back(g.valence(v));
        std::vector<int> mlt;
        for (int w = 0; w < n; ++w)
            if (w != v && g.multiplicity(v, w) > 0) mlt.push_back(g.multiplicity(v, w));
        std::sort(mlt.begin(), mlt.end());
        for (int m : mlt) prof.push_back(m);
        key[v] = prof;
    }
    std::vector<int> colour(n, 0);
    auto assign = [&]() {
        std::map<std::vector<int>, int> ids;
        std::vector<int> next(n);
        for (int v = 0; v < n; ++v) {
            auto [it, fresh] = ids.emplace(key[v], (int)ids.size());
            next[v] = it->second;
        }
        bool changed = next != colour;
        colour = next;
        return changed;
    };
    assign();
    for (int round = 0; round < n; ++round) {
        for (int v = 0; v < n; ++v) {
            std::vector<int> prof = {colour[v]};
            std::vector<std::pair<int, int>> nb;  // (neighbour colour, multiplicity)
            for (int w = 0; w < n; ++w)
                if (w != v && g.multiplicity(v, w) > 0) nb.emplace_back(colour[w], g.multiplicity(v, w));
            std::sort(nb.begin(), nb.end());
            for (auto& [c, m] : nb) {
                prof.push_back(c);
                prof.push_back(m);
            }
            key[v] = prof;
        }
        if (!assign()) break;
    }
    return colour;
}

}  // namespace detail

// Every automorphism, found by backtracking over a colour-refined vertex
// order.  Deterministic output order.
inline std::vector<Automorphism> all_automorphisms(const Multigraph& g) {
    int n = g.vertex_count();
    std::vector<int> colour = detail::refine_colours(g);

    // map vertices in BFS order so each new vertex is checked against a
    // mapped neighbour immediately
    std::vector<int> order;
    std::vector<char> queued(n, 0);
    std::queue<int> q;
    q.push(0);
    queued[0] = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        order.push_back(v);
        for (int e : g.incident(v)) {
            int w = g.edges()[e].other(v);
            if (!queued[w]) { queued[w] = 1; q.push(w); }
        }
    }

    std::vector<int> image(n, -1);
    std::vector<char> used(n, 0);
    std::vector<std::vector<int>> found;
    std::function<void(int)> rec = [&](int pos) {
        if (pos == n) {
            found.push_back(image);
            return;
        }
        int v = order[pos];
        for (int cand = 0; cand < n; ++cand) {
            if (used[cand] || colour[cand] != colour[v]) continue;
            bool ok = true;
            for (int j = 0; j < pos && ok; ++j) {
                int w = order[j];
                if (g.multiplicity(v, w) != g.multiplicity(cand, image[w])) ok = false;
            }
            if (!ok) continue;
            image[v] = cand;
            used[cand] = 1;
            rec(pos + 1);
            used[cand] = 0;
            image[v] = -1;
        }
    };
    rec(0);

    std::sort(found.begin(), found.end());
    std::vector<Automorphism> out;
    out.reserve(found.size());
    for (auto& p : found) out.emplace_back(g, p);
    return out;
}

struct AutomorphismGroup {
    long long order = 0;
    std::vector<Automorphism> generators;
};

// Group order plus a small generating set (greedy closure).
inline AutomorphismGroup automorphism_group(const Multigraph& g) {
    std::vector<Automorphism> all = all_automorphisms(g);
    AutomorphismGroup grp;
    grp.order = (long long)all.size();

    int n = g.vertex_count();
    std::vector<int> id(n);
    std::iota(id.begin(), id.end(), 0);
    std::set<std::vector<int>> closure = {id};
    auto compose = [&](const std::vector<int>& a, const std::vector<int>& b) {
        std::vector<int> c(n);
        for (int v = 0; v < n; ++v) c[v] = a[b[v]];
        return c;
    };
    auto close = [&]() {
        std::vector<std::vector<int>> frontier(closure.begin(), closure.end());
        while (!frontier.empty()) {
            std::vector<std::vector<int>> next;
            for (auto& f : frontier)
                for (auto& gen : grp.generators) {
                    auto c = compose(gen.perm(), f);
                    if (closure.insert(c).second) next.push_back(c);
                }
            frontier = std::move(next);
        }
    };
    for (const Automorphism& a : all) {
        if (closure.count(a.perm())) continue;
        grp.generators.push_back(a);
        close();
    }
    return grp;
}

// An edge is held in place when its endpoint pair is preserved setwise;
// such a map is rejected as fixing an edge even across parallel copies.
inline bool fixes_an_edge(const Multigraph& g, const Automorphism& s) {
    for (const auto& e : g.edges()) {
        int a = s.apply(e.u), b = s.apply(e.v);
        if ((a == e.u && b == e.v) || (a == e.v && b == e.u)) return true;
    }
    return false;
}

// All order-3 automorphisms that fix no edge.
inline std::vector<Automorphism> order3_edge_free(const Multigraph& g) {
    std::vector<Automorphism> out;
    for (const Automorphism& s : all_automorphisms(g))
        if (s.order() == 3 && !fixes_an_edge(g, s)) out.push_back(s);
    return out;
}

// Quotient by an order-3 automorphism without fixed edges.  Vertices are
// the orbits (labelled by their smallest member); each orbit of edges
// between distinct vertex orbits contributes one quotient edge, and edges
// inside an orbit collapse to its vertex.  Parallel edges are matched up
// by their rank within the parallel class, so multiplicities descend.
inline std::pair<Multigraph, GraphMorphism> quotient_by(const Multigraph& g,
                                                        const Automorphism& s) {
    require(s.order() == 3, "WrongOrder", "quotient needs an automorphism of order 3");
    require(!fixes_an_edge(g, s), "FixedEdge", "automorphism holds an edge in place");

    int n = g.vertex_count();
    std::vector<int> orbit_of(n, -1);
    std::vector<std::vector<int>> orbits;
    for (int v = 0; v < n; ++v) {
        if (orbit_of[v] >= 0) continue;
        int id = (int)orbits.size();
        std::vector<int> orb;
        int w = v;
        do {
            orbit_of[w] = id;
            orb.push_back(w);
            w = s.apply(w);
        } while (w != v);
        std::sort(orb.begin(), orb.end());
        orbits.push_back(orb);
    }

    // rank of each edge inside its parallel class, and the classes themselves
    std::map<std::pair<int, int>, std::vector<int>> par;
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edges()[e];
        par[{std::min(u, v), std::max(u, v)}].push_back(e);
    }
    std::vector<int> rank_in_class(g.edge_count());
    for (auto& [k, es] : par)
        for (int i = 0; i < (int)es.size(); ++i) rank_in_class[es[i]] = i;
    auto edge_image_under_s = [&](int e) {
        auto [u, v] = g.edges()[e];
        int a = s.apply(u), b = s.apply(v);
        const auto& cls = par.at({std::min(a, b), std::max(a, b)});
        return cls[rank_in_class[e]];
    };

    std::vector<EdgeImage> edge_map(g.edge_count(), EdgeImage::vertex(-1));
    std::vector<std::pair<int, int>> qedges;
    std::vector<char> done(g.edge_count(), 0);
    for (int e = 0; e < g.edge_count(); ++e) {
        if (done[e]) continue;
        auto [u, v] = g.edges()[e];
        if (orbit_of[u] == orbit_of[v]) {
            // whole s-orbit of e collapses into the vertex orbit
            int w = e;
            do {
                done[w] = 1;
                edge_map[w] = EdgeImage::vertex(orbit_of[u]);
                w = edge_image_under_s(w);
            } while (w != e);
            continue;
        }
        int q = (int)qedges.size();
        qedges.emplace_back(orbit_of[u], orbit_of[v]);
        int w = e, len = 0;
        do {
            done[w] = 1;
            edge_map[w] = EdgeImage::edge(q);
            w = edge_image_under_s(w);
            ++len;
        } while (w != e);
        require(len == 3, "VerificationFailed", "edge orbit between distinct vertex orbits has size " +
                                                    std::to_string(len));
    }

    std::vector<std::string> labels;
    labels.reserve(orbits.size());
    for (auto& orb : orbits) labels.push_back(g.label(orb.front()));
    Multigraph qg = Multigraph::from_indices(labels, qedges);
    GraphMorphism f(g, qg, orbit_of, edge_map);
    return {std::move(qg), std::move(f)};
}

// Build the order-3 symmetry promised by a zero-three witness on a simple
// 3-vertex-connected graph: cycle one size-3 block, propagate through the
// three-edge matchings between adjacent blocks, fix singleton blocks.
// Blocks reached from singletons only get the graded-lex-minimal cycle.
// The result is verified end to end.
inline Automorphism automorphism_from_divisor(const Multigraph& g, const Divisor& d) {
    check_bound(g, d);
    require(g.is_simple(), "NotSimple", "symmetry construction needs a simple graph");
    require(vertex_connectivity(g) >= 3, "NotThreeVertexConnected",
            "symmetry construction needs a 3-vertex-connected graph");
    require(d.degree() == 3, "WrongDegree", "expected a degree-3 divisor");
    require(rank(g, d) == 1, "NotRankOne", "expected a rank-1 divisor");
    for (const Divisor& e : effective_class(g, d)) {
        std::vector<int> sup = e.support();
        if (sup.size() != 3) continue;
        int edges = g.multiplicity(sup[0], sup[1]) + g.multiplicity(sup[0], sup[2]) +
                    g.multiplicity(sup[1], sup[2]);
        require(edges == 0 || edges == 3, "NotZeroThreeWitness",
                "a representative induces " + std::to_string(edges) + " edges among its support");
    }

    ClassPartition p = class_partition(g, d);
    int nb = (int)p.blocks.size();
    for (const VertexSet& b : p.blocks)
        require(b.size() == 1 || b.size() == 3, "VerificationFailed",
                "block of size " + std::to_string(b.size()) + " in the moving-support partition");

    // block adjacency
    std::vector<std::set<int>> nbr(nb);
    for (const auto& e : g.edges()) {
        int bu = p.block_of[e.u], bv = p.block_of[e.v];
        if (bu != bv) {
            nbr[bu].insert(bv);
            nbr[bv].insert(bu);
        }
    }

    int n = g.vertex_count();
    std::vector<int> sigma(n, -1);
    std::vector<char> ordered(nb, 0);

    auto cycle_lex_min = [&](const VertexSet& b) {
        // sorted members x < y < z mapped x -> y -> z -> x
        const auto& m = b.members();
        sigma[m[0]] = m[1];
        sigma[m[1]] = m[2];
        sigma[m[2]] = m[0];
    };
    auto matching_partner = [&](int v, int target_block) {
        int partner = -1;
        for (int e : g.incident(v)) {
            int w = g.edges()[e].other(v);
            if (p.block_of[w] == target_block) {
                require(partner < 0, "VerificationFailed",
                        "vertex '" + g.label(v) + "' has two edges into an adjacent block");
                partner = w;
            }
        }
        require(partner >= 0, "VerificationFailed",
                "vertex '" + g.label(v) + "' misses the matching into an adjacent block");
        return partner;
    };

    // start at the size-3 block with the smallest vertex
    int start = -1;
    for (int b = 0; b < nb && start < 0; ++b)
        if (p.blocks[b].size() == 3) start = b;
    require(start >= 0, "VerificationFailed", "no size-3 block to seed the symmetry");
    cycle_lex_min(p.blocks[start]);
    ordered[start] = 1;

    std::queue<int> bq;
    bq.push(start);
    std::vector<char> visited(nb, 0);
    visited[start] = 1;
    while (!bq.empty()) {
        int a = bq.front();
        bq.pop();
        for (int b : nbr[a]) {
            if (!visited[b]) {
                visited[b] = 1;
                bq.push(b);
            }
            if (ordered[b]) continue;
            const auto& bm = p.blocks[b].members();
            if (p.blocks[b].size() == 1) {
                sigma[bm[0]] = bm[0];
            } else if (p.blocks[a].size() == 1) {
                // only a singleton leads here: free choice, pinned to lex-min
                cycle_lex_min(p.blocks[b]);
            } else {
                // conjugate the cycle on a through the 3-edge matching
                for (int v : p.blocks[a].members()) {
                    int pv = matching_partner(v, b);
                    sigma[pv] = matching_partner(sigma[v], b);
                }
            }
            ordered[b] = 1;
        }
    }
    for (int b = 0; b < nb; ++b)
        require(ordered[b], "VerificationFailed", "a block was never reached by propagation");

    Automorphism s = [&]() {
        try {
            return Automorphism(g, sigma);
        } catch (const Error& err) {
            fail("VerificationFailed", std::string("constructed map is not an automorphism (") +
                                           err.what() + ")");
        }
    }();
    require(s.order() == 3, "VerificationFailed", "constructed symmetry does not have order 3");
    require(!fixes_an_edge(g, s), "VerificationFailed", "constructed symmetry holds an edge in place");
    auto [q, f] = quotient_by(g, s);
    require(genus(q) == 0, "VerificationFailed", "constructed symmetry has a non-tree quotient");
    return s;
}

// First order-3 edge-free automorphism whose quotient is a tree, in the
// deterministic enumeration order.
inline std::optional<Automorphism> order3_tree_quotient(const Multigraph& g) {
    for (const Automorphism& s : order3_edge_free(g)) {
        auto [q, f] = quotient_by(g, s);
        if (genus(q) == 0) return s;
    }
    return std::nullopt;
}

}  // namespace trigonal
