#pragma once

// Seeded random inputs for the property suites.

#include <random>
#include <string>
#include <utility>
#include <vector>

#include "trigonal/constructions.hpp"
#include "trigonal/divisor.hpp"
#include "trigonal/multigraph.hpp"

namespace generators {

using trigonal::Divisor;
using trigonal::Multigraph;

// Connected multigraph on n vertices: a random attachment tree plus
// `extra` additional edges (parallels allowed unless simple_only, in which
// case unused pairs are drawn; fewer extras are added if the simple graph
// is saturated).
inline Multigraph random_connected(int n, int extra, std::mt19937& rng, bool simple_only = false) {
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) labels.push_back("g" + std::to_string(i));
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i < n; ++i) {
        std::uniform_int_distribution<int> pick(0, i - 1);
        edges.emplace_back(pick(rng), i);
    }
    if (n >= 2) {
        std::uniform_int_distribution<int> pick(0, n - 1);
        for (int k = 0; k < extra; ++k) {
            for (int attempt = 0; attempt < 64; ++attempt) {
                int u = pick(rng), v = pick(rng);
                if (u == v) continue;
                if (simple_only) {
                    bool used = false;
                    for (auto& [a, b] : edges)
                        if ((a == u && b == v) || (a == v && b == u)) used = true;
                    if (used) continue;
                }
                edges.emplace_back(u, v);
                break;
            }
        }
    }
    return Multigraph::from_indices(labels, edges);
}

// Divisor with the exact given degree: `degree + spread` unit additions and
// `spread` unit subtractions at random vertices.
inline Divisor random_divisor(int n, int degree, int spread, std::mt19937& rng) {
    Divisor d(n);
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int i = 0; i < degree + spread; ++i) ++d[pick(rng)];
    for (int i = 0; i < spread; ++i) --d[pick(rng)];
    return d;
}

inline Divisor random_effective(int n, int degree, std::mt19937& rng) {
    return random_divisor(n, degree, 0, rng);
}

// Image of a random integer vertex function under the Laplacian.
inline Divisor random_principal(const Multigraph& g, int fmax, std::mt19937& rng) {
    int n = g.vertex_count();
    std::uniform_int_distribution<int> pick(-fmax, fmax);
    std::vector<int> f(n);
    for (int& x : f) x = pick(rng);
    Divisor d(n);
    for (int v = 0; v < n; ++v)
        for (int w = 0; w < n; ++w)
            if (w != v) d[v] += g.multiplicity(v, w) * (f[v] - f[w]);
    return d;
}

}  // namespace generators
