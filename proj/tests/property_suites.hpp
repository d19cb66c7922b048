#pragma once

// The five randomized suites behind the "properties" test target and the
// acceptance gate.  Each returns the number of failed cases; suites are
// deterministic for a fixed seed.

#include <random>

#include "generators.hpp"
#include "oracles.hpp"
#include "trigonal/divisor.hpp"
#include "trigonal/gonality.hpp"
#include "trigonal/multigraph.hpp"

namespace suites {

using namespace trigonal;

// r(D) - r(K-D) = deg(D) + 1 - g on arbitrary divisors.
inline int riemann_roch(int cases, unsigned seed) {
    std::mt19937 rng(seed);
    int failures = 0;
    for (int i = 0; i < cases; ++i) {
        std::uniform_int_distribution<int> nd(2, 7), ed(0, 5), dd(-2, 6), sd(0, 2);
        Multigraph g = generators::random_connected(nd(rng), ed(rng), rng);
        Divisor d = generators::random_divisor(g.vertex_count(), dd(rng), sd(rng), rng);
        if (riemann_roch_residual(g, d) != 0) ++failures;
    }
    return failures;
}

// Reduction lands on the same representative for every divisor in a class.
inline int reduced_uniqueness(int cases, unsigned seed) {
    std::mt19937 rng(seed);
    int failures = 0;
    for (int i = 0; i < cases; ++i) {
        std::uniform_int_distribution<int> nd(2, 7), ed(0, 5), dd(-3, 8), sd(0, 2);
        Multigraph g = generators::random_connected(nd(rng), ed(rng), rng);
        Divisor d = generators::random_divisor(g.vertex_count(), dd(rng), sd(rng), rng);
        Divisor e = d - generators::random_principal(g, 2, rng);
        bool ok = true;
        for (int v = 0; v < g.vertex_count(); ++v)
            if (reduced(g, d, v) != reduced(g, e, v)) ok = false;
        if (!ok) ++failures;
    }
    return failures;
}

// Reducing an effective divisor never induces debt along the way, the
// fired sets replay to the result, and the root is never fired.
inline int trace_effectivity(int cases, unsigned seed) {
    std::mt19937 rng(seed);
    int failures = 0;
    for (int i = 0; i < cases; ++i) {
        std::uniform_int_distribution<int> nd(2, 7), ed(0, 5), dd(0, 8);
        Multigraph g = generators::random_connected(nd(rng), ed(rng), rng);
        Divisor d = generators::random_effective(g.vertex_count(), dd(rng), rng);
        std::uniform_int_distribution<int> vd(0, g.vertex_count() - 1);
        int v = vd(rng);
        ReductionTrace trace = reduce(g, d, v);
        Divisor cur = d;
        bool ok = cur.effective();
        for (const VertexSet& a : trace.fired) {
            if (a.contains(v)) ok = false;
            cur = fire_subset(g, cur, a);
            if (!cur.effective()) ok = false;
        }
        if (cur != trace.result) ok = false;
        if (!ok) ++failures;
    }
    return failures;
}

// Engine rank against the definitional oracle on small graphs.
inline int rank_against_oracle(int cases, unsigned seed) {
    std::mt19937 rng(seed);
    int failures = 0;
    for (int i = 0; i < cases; ++i) {
        std::uniform_int_distribution<int> nd(2, 5), dd(-1, 3), sd(0, 2);
        int n = nd(rng);
        std::uniform_int_distribution<int> ed(0, 8 - (n - 1));
        Multigraph g = generators::random_connected(n, ed(rng), rng);
        Divisor d = generators::random_divisor(n, dd(rng), sd(rng), rng);
        if (rank(g, d) != oracles::rank_definitional(g, d)) ++failures;
    }
    return failures;
}

// Genus at most 2 forces gonality at most 2; gonality 1 exactly on trees.
inline int low_genus_gonality(int cases, unsigned seed) {
    std::mt19937 rng(seed);
    int failures = 0;
    for (int i = 0; i < cases; ++i) {
        std::uniform_int_distribution<int> nd(1, 8), gd(0, 2);
        int extra = gd(rng);
        Multigraph g = generators::random_connected(nd(rng), extra, rng);
        GonalityReport rep = gonality(g);
        bool ok = rep.gonality.has_value() && *rep.gonality <= 2;
        if (ok && genus(g) == 0 && *rep.gonality != 1) ok = false;
        if (ok && genus(g) > 0 && *rep.gonality != 2) ok = false;
        if (!ok) ++failures;
    }
    return failures;
}

}  // namespace suites
