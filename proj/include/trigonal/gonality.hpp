#pragma once

#include <optional>
#include <string>
#include <vector>

#include "trigonal/divisor.hpp"
#include "trigonal/multigraph.hpp"

namespace trigonal {

struct GonalityBounds {
    int vertices_or_eta;              // min(|V|, edge connectivity)
    bool k4_minor;                    // treewidth >= 3, so gonality >= 3
    std::optional<int> min_valence;   // simple graphs only
    int trivial_upper;                // |V|

    int lower() const {
        int lo = std::max(1, vertices_or_eta);
        if (k4_minor) lo = std::max(lo, 3);
        if (min_valence) lo = std::max(lo, *min_valence);
        return lo;
    }
};

struct GonalityReport {
    std::optional<int> gonality;      // empty when the search cap was hit
    std::optional<Divisor> witness;   // graded-lex-smallest winner
    GonalityBounds bounds;
    int searched_up_to = 0;
    bool capped() const { return !gonality.has_value(); }
};

inline GonalityBounds gonality_bounds(const Multigraph& g) {
    GonalityBounds b{};
    int n = g.vertex_count();
    b.vertices_or_eta = n >= 2 ? std::min(n, edge_connectivity(g)) : 1;
    b.k4_minor = !has_treewidth_at_most_2(g);
    if (g.is_simple() && n >= 2) {
        int mv = g.valence(0);
        for (int v = 1; v < n; ++v) mv = std::min(mv, g.valence(v));
        b.min_valence = mv;
    }
    b.trivial_upper = n;
    return b;
}

// Smallest degree of an effective divisor of positive rank.  The search
// starts at the best lower bound and walks degrees upward, scanning
// effective divisors in graded-lex order; |V| always suffices, so an
// uncapped search terminates.
inline GonalityReport gonality(const Multigraph& g, std::optional<int> max_degree = {}) {
    GonalityReport rep;
    rep.bounds = gonality_bounds(g);
    int n = g.vertex_count();
    if (n == 1) {
        rep.gonality = 1;
        Divisor w(1);
        w[0] = 1;
        rep.witness = w;
        rep.searched_up_to = 1;
        return rep;
    }
    int hi = max_degree ? std::min(*max_degree, n) : n;
    for (int d = rep.bounds.lower(); d <= hi; ++d) {
        rep.searched_up_to = d;
        std::optional<Divisor> win;
        detail::scan_effective(n, d, [&](const Divisor& cand) {
            if (has_positive_rank(g, cand)) {
                win = cand;
                return true;
            }
            return false;
        });
        if (win) {
            rep.gonality = d;
            rep.witness = win;
            return rep;
        }
    }
    return rep;  // capped: verdict "> max_degree", bounds only
}

// Every effective divisor of the given degree with positive rank,
// graded-lex order.
inline std::vector<Divisor> positive_rank_divisors(const Multigraph& g, int degree) {
    require(degree >= 1, "ParameterOutOfRange", "degree must be at least 1");
    std::vector<Divisor> out;
    detail::scan_effective(g.vertex_count(), degree, [&](const Divisor& cand) {
        if (has_positive_rank(g, cand)) out.push_back(cand);
        return false;
    });
    return out;
}

// Partition of the vertices by the moving supports of a degree-3 positive
// rank divisor: v and w are together when each lies in the support of the
// other's unique representative.  Blocks are listed by smallest member.
struct ClassPartition {
    Divisor base;
    std::vector<VertexSet> blocks;
    std::vector<int> block_of;          // vertex -> block index
    std::vector<Divisor> block_divisor; // representative divisor per block
    std::vector<int> witness_chips;     // chips the representative puts on each vertex
};

inline ClassPartition class_partition(const Multigraph& g, const Divisor& d) {
    check_bound(g, d);
    require(d.degree() == 3, "WrongDegree", "expected a degree-3 divisor");
    require(has_positive_rank(g, d), "NotRankOne", "divisor does not have positive rank");
    require(edge_connectivity(g) >= 3, "NotThreeEdgeConnected", "graph is not 3-edge-connected");

    int n = g.vertex_count();
    std::vector<Divisor> through(n);
    for (int v = 0; v < n; ++v) through[v] = equivalent_effective_through(g, d, v);

    // supports must tile the vertex set: mutual membership and equality of
    // representatives inside a block
    for (int v = 0; v < n; ++v) {
        require(through[v][v] >= 1, "NotAnEquivalence", "representative misses its own vertex");
        for (int u : through[v].support())
            require(through[u] == through[v], "NotAnEquivalence",
                    "representatives of '" + g.label(u) + "' and '" + g.label(v) + "' disagree");
    }

    ClassPartition p;
    p.base = d;
    p.block_of.assign(n, -1);
    p.witness_chips.assign(n, 0);
    for (int v = 0; v < n; ++v) {
        p.witness_chips[v] = through[v][v];
        if (p.block_of[v] >= 0) continue;
        int b = (int)p.blocks.size();
        std::vector<int> members = through[v].support();
        for (int u : members) p.block_of[u] = b;
        p.blocks.push_back(VertexSet::of(g, members));
        p.block_divisor.push_back(through[v]);
    }
    return p;
}

// A degree-3 positive-rank divisor qualifies when every effective
// representative with three distinct support vertices induces exactly 0 or
// exactly 3 edges (multiplicities counted) among them.  Returns the first
// qualifying divisor in graded-lex order, if any.  The graph must have
// gonality 3.
inline std::pair<bool, std::optional<Divisor>> zero_three_condition(const Multigraph& g) {
    GonalityReport rep = gonality(g);
    require(rep.gonality == 3, "NotGonalityThree", "zero-three condition needs a gonality-3 graph");

    std::optional<Divisor> witness;
    detail::scan_effective(g.vertex_count(), 3, [&](const Divisor& cand) {
        if (!has_positive_rank(g, cand)) return false;
        bool ok = true;
        for (const Divisor& e : effective_class(g, cand)) {
            std::vector<int> sup = e.support();
            if (sup.size() != 3) continue;  // only representatives (a)+(b)+(c), a,b,c distinct
            int edges = g.multiplicity(sup[0], sup[1]) + g.multiplicity(sup[0], sup[2]) +
                        g.multiplicity(sup[1], sup[2]);
            if (edges != 0 && edges != 3) {
                ok = false;
                break;
            }
        }
        if (ok) {
            witness = cand;
            return true;
        }
        return false;
    });
    return {witness.has_value(), witness};
}

// On a simple 3-vertex-connected graph, every effective representative of
// a degree-3 positive-rank divisor concentrates on one vertex or spreads
// over three.  Exposed as a checkable property.
inline bool support_size_check(const Multigraph& g, const Divisor& d) {
    check_bound(g, d);
    require(g.is_simple(), "NotSimple", "support size check applies to simple graphs");
    require(vertex_connectivity(g) >= 3, "NotThreeVertexConnected",
            "support size check needs a 3-vertex-connected graph");
    require(d.degree() == 3, "WrongDegree", "expected a degree-3 divisor");
    require(has_positive_rank(g, d), "NotRankOne", "divisor does not have positive rank");
    for (const Divisor& e : effective_class(g, d)) {
        size_t s = e.support().size();
        if (s != 1 && s != 3) return false;
    }
    return true;
}

}  // namespace trigonal
