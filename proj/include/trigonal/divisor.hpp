#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "trigonal/multigraph.hpp"

namespace trigonal {

// Integer chip assignment on the vertices of a fixed graph.
struct Divisor {
    Divisor() = default;
    explicit Divisor(int n) : chips(n, 0) {}

    std::vector<int> chips;

    int size() const { return (int)chips.size(); }
    int& operator[](int v) { return chips[v]; }
    int operator[](int v) const { return chips[v]; }

    int degree() const {
        int d = 0;
        for (int c : chips) d += c;
        return d;
    }
    bool effective() const {
        for (int c : chips)
            if (c < 0) return false;
        return true;
    }
    std::vector<int> support() const {
        std::vector<int> s;
        for (int v = 0; v < size(); ++v)
            if (chips[v] != 0) s.push_back(v);
        return s;
    }
    bool operator==(const Divisor&) const = default;

    Divisor& operator+=(const Divisor& o) {
        for (int v = 0; v < size(); ++v) chips[v] += o.chips[v];
        return *this;
    }
    Divisor& operator-=(const Divisor& o) {
        for (int v = 0; v < size(); ++v) chips[v] -= o.chips[v];
        return *this;
    }
    friend Divisor operator+(Divisor a, const Divisor& b) { return a += b; }
    friend Divisor operator-(Divisor a, const Divisor& b) { return a -= b; }
};

inline void check_bound(const Multigraph& g, const Divisor& d) {
    require(d.size() == g.vertex_count(), "GraphMismatch",
            "divisor has " + std::to_string(d.size()) + " entries for a graph on " +
                std::to_string(g.vertex_count()) + " vertices");
}

// val(v) - 2 at every vertex; degree 2*genus - 2.
inline Divisor canonical_divisor(const Multigraph& g) {
    Divisor k(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) k[v] = g.valence(v) - 2;
    return k;
}

// Fire every vertex of a at once: each member sends one chip along every
// edge leaving a.  Degree is preserved.
inline Divisor fire_subset(const Multigraph& g, const Divisor& d, const VertexSet& a) {
    check_bound(g, d);
    require(!a.empty(), "EmptySet", "cannot fire the empty set");
    Divisor out = d;
    for (int v : a.members()) {
        for (int e : g.incident(v)) {
            int w = g.edges()[e].other(v);
            if (!a.contains(w)) {
                out[v] -= 1;
                out[w] += 1;
            }
        }
    }
    return out;
}

struct BurnResult {
    VertexSet unburnt;
    // (vertex, round) pairs in burn order; the root burns in round 0.
    std::vector<std::pair<int, int>> burn_order;
    bool all_burned() const { return unburnt.empty(); }
};

// Dhar's burning walk from root v.  A vertex burns once more incident
// edges are burning than it has chips; the fixed point of survivors is the
// maximal set that can fire without going into debt.  Chips off the root
// must be non-negative.
inline BurnResult dhar_burn(const Multigraph& g, const Divisor& d, int v) {
    check_bound(g, d);
    g.check_vertex(v);
    for (int w = 0; w < g.vertex_count(); ++w)
        require(w == v || d[w] >= 0, "DebtOutsideRoot",
                "vertex '" + g.label(w) + "' is in debt; burning needs effectivity off the root");

    int n = g.vertex_count();
    std::vector<char> burnt(n, 0);
    std::vector<int> burning_edges(n, 0);
    BurnResult res;
    burnt[v] = 1;
    res.burn_order.emplace_back(v, 0);
    std::vector<int> newly = {v};
    int round = 0;
    while (!newly.empty()) {
        for (int b : newly)
            for (int e : g.incident(b)) {
                int w = g.edges()[e].other(b);
                if (!burnt[w]) burning_edges[w] += 1;
            }
        ++round;
        newly.clear();
        for (int w = 0; w < n; ++w)
            if (!burnt[w] && burning_edges[w] > d[w]) {
                burnt[w] = 1;
                newly.push_back(w);
                res.burn_order.emplace_back(w, round);
            }
    }
    std::vector<int> surv;
    for (int w = 0; w < n; ++w)
        if (!burnt[w]) surv.push_back(w);
    res.unburnt = VertexSet::of(g, surv);
    return res;
}

struct ReductionTrace {
    Divisor result;
    std::vector<VertexSet> fired;  // in firing order; replay reproduces result
};

// v-reduced form of d: effective off v, and no nonempty subset avoiding v
// can fire without debt.  Phase one clears debt by repeatedly firing the
// debt-free vertices together with v; phase two runs Dhar's walk from v
// and fires the surviving set until everything burns.  The root is never
// in a phase-two fired set.
inline ReductionTrace reduce(const Multigraph& g, const Divisor& d, int v) {
    check_bound(g, d);
    g.check_vertex(v);
    ReductionTrace trace;
    Divisor cur = d;
    int n = g.vertex_count();

    auto in_debt_off_root = [&]() {
        for (int w = 0; w < n; ++w)
            if (w != v && cur[w] < 0) return true;
        return false;
    };
    long long guard = 0;
    const long long guard_limit = 4LL * 1000 * 1000;
    while (in_debt_off_root()) {
        std::vector<int> setv;
        for (int w = 0; w < n; ++w)
            if (w == v || cur[w] >= 0) setv.push_back(w);
        VertexSet a = VertexSet::of(g, setv);
        cur = fire_subset(g, cur, a);
        trace.fired.push_back(a);
        require(++guard < guard_limit, "InternalError", "debt clearing failed to converge");
    }
    for (;;) {
        BurnResult burn = dhar_burn(g, cur, v);
        if (burn.all_burned()) break;
        cur = fire_subset(g, cur, burn.unburnt);
        trace.fired.push_back(burn.unburnt);
        require(++guard < guard_limit, "InternalError", "reduction failed to converge");
    }
    trace.result = cur;
    return trace;
}

inline Divisor reduced(const Multigraph& g, const Divisor& d, int v) {
    return reduce(g, d, v).result;
}

// Linear equivalence: equal degree and equal reduced form at root 0.
inline bool is_equivalent(const Multigraph& g, const Divisor& a, const Divisor& b) {
    check_bound(g, a);
    check_bound(g, b);
    if (a.degree() != b.degree()) return false;
    if (a == b) return true;
    return reduced(g, a, 0) == reduced(g, b, 0);
}

// Some effective divisor is equivalent to d exactly when the reduced form
// at any root is effective there.
inline bool equivalent_to_effective(const Multigraph& g, const Divisor& d) {
    check_bound(g, d);
    if (d.degree() < 0) return false;
    if (d.effective()) return true;
    return reduced(g, d, 0)[0] >= 0;
}

// Positive rank: after reduction at every root the root holds a chip.
inline bool has_positive_rank(const Multigraph& g, const Divisor& d) {
    check_bound(g, d);
    if (d.degree() <= 0) return false;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (reduced(g, d, v)[v] < 1) return false;
    return true;
}

namespace detail {

// Enumerate effective divisors of the given degree as non-decreasing index
// tuples in lexicographic order ("graded lex").  fn returns true to stop.
template <class Fn>
bool scan_effective(int n, int degree, Fn&& fn) {
    Divisor d(n);
    std::function<bool(int, int)> rec = [&](int pos, int from) -> bool {
        if (pos == degree) return fn(d);
        for (int v = from; v < n; ++v) {
            d[v] += 1;
            if (rec(pos + 1, v)) return true;
            d[v] -= 1;
        }
        return false;
    };
    return rec(0, 0);
}

}  // namespace detail

// Baker–Norine rank: -1 when no effective divisor is equivalent; otherwise
// the largest k such that d minus any effective degree-k divisor is still
// equivalent to an effective one.
inline int rank(const Multigraph& g, const Divisor& d) {
    check_bound(g, d);
    if (!equivalent_to_effective(g, d)) return -1;
    int n = g.vertex_count();
    int deg = d.degree();
    for (int k = 1; k <= deg + 1; ++k) {
        bool failed = detail::scan_effective(n, k, [&](const Divisor& f) {
            return !equivalent_to_effective(g, d - f);
        });
        if (failed) return k - 1;
    }
    return deg;  // unreachable: k = deg + 1 always fails
}

// r(D) - r(K - D) - deg(D) - 1 + g; zero by the Riemann-Roch theorem.
inline int riemann_roch_residual(const Multigraph& g, const Divisor& d) {
    Divisor k = canonical_divisor(g);
    return rank(g, d) - rank(g, k - d) - d.degree() - 1 + genus(g);
}

namespace detail {

// Smith normal form over the integers, diagonal only.  Entries stay small
// at desk scale; multiplications are overflow-checked through __int128.
inline std::vector<long long> snf_diagonal(std::vector<std::vector<long long>> m) {
    auto mul = [](long long a, long long b) {
        __int128 r = (__int128)a * b;
        require(r <= INT64_MAX && r >= INT64_MIN, "InternalError", "integer overflow in normal form");
        return (long long)r;
    };
    int rows = (int)m.size();
    int cols = rows ? (int)m[0].size() : 0;
    int k = 0;
    while (k < rows && k < cols) {
        // find the entry of least non-zero magnitude to pivot on
        int pi = -1, pj = -1;
        for (int i = k; i < rows; ++i)
            for (int j = k; j < cols; ++j)
                if (m[i][j] != 0 && (pi < 0 || std::abs(m[i][j]) < std::abs(m[pi][pj]))) {
                    pi = i;
                    pj = j;
                }
        if (pi < 0) break;
        std::swap(m[k], m[pi]);
        for (int i = 0; i < rows; ++i) std::swap(m[i][k], m[i][pj]);
        bool clean = false;
        while (!clean) {
            clean = true;
            for (int i = k + 1; i < rows; ++i) {
                if (m[i][k] == 0) continue;
                long long q = m[i][k] / m[k][k];
                for (int j = k; j < cols; ++j) m[i][j] -= mul(q, m[k][j]);
                if (m[i][k] != 0) {  // remainder becomes the new, smaller pivot
                    std::swap(m[k], m[i]);
                    clean = false;
                }
            }
            for (int j = k + 1; j < cols; ++j) {
                if (m[k][j] == 0) continue;
                long long q = m[k][j] / m[k][k];
                for (int i = k; i < rows; ++i) m[i][j] -= mul(q, m[i][k]);
                if (m[k][j] != 0) {
                    for (int i = 0; i < rows; ++i) std::swap(m[i][k], m[i][j]);
                    clean = false;
                }
            }
            if (clean) {
                // pivot must divide the rest of its block for the chain
                for (int i = k + 1; i < rows && clean; ++i)
                    for (int j = k + 1; j < cols; ++j)
                        if (m[i][j] % m[k][k] != 0) {
                            for (int c = k; c < cols; ++c) m[k][c] += m[i][c];
                            clean = false;
                            break;
                        }
            }
        }
        ++k;
    }
    std::vector<long long> diag;
    for (int i = 0; i < k; ++i) diag.push_back(std::abs(m[i][i]));
    return diag;
}

}  // namespace detail

// Invariant factors of the Jacobian (reduced Laplacian normal form),
// unit factors omitted; each divides the next; the product counts
// spanning trees.
inline std::vector<long long> jacobian_invariants(const Multigraph& g) {
    require(g.vertex_count() >= 2, "SingleVertex", "the Jacobian needs at least two vertices");
    int n = g.vertex_count();
    std::vector<std::vector<long long>> lap(n - 1, std::vector<long long>(n - 1, 0));
    for (int u = 1; u < n; ++u) {
        lap[u - 1][u - 1] = g.valence(u);
        for (int v = 1; v < n; ++v)
            if (u != v) lap[u - 1][v - 1] = -g.multiplicity(u, v);
    }
    auto diag = detail::snf_diagonal(std::move(lap));
    std::vector<long long> inv;
    for (long long x : diag)
        if (x > 1) inv.push_back(x);
    return inv;
}

// All effective representatives of the class of d having the same degree.
// Graded-lex order.  Degree must be small (exhaustive scan).
inline std::vector<Divisor> effective_class(const Multigraph& g, const Divisor& d) {
    check_bound(g, d);
    std::vector<Divisor> reps;
    if (d.degree() < 0) return reps;
    Divisor ref = reduced(g, d, 0);
    detail::scan_effective(g.vertex_count(), d.degree(), [&](const Divisor& e) {
        if (reduced(g, e, 0) == ref) reps.push_back(e);
        return false;
    });
    return reps;
}

// The unique effective divisor equivalent to d whose support contains v.
// Needs degree 3, positive rank and a 3-edge-connected graph; uniqueness
// is re-checked and a violation reported.
inline Divisor equivalent_effective_through(const Multigraph& g, const Divisor& d, int v) {
    check_bound(g, d);
    g.check_vertex(v);
    require(d.degree() == 3, "WrongDegree", "expected a degree-3 divisor");
    require(has_positive_rank(g, d), "NotRankOne", "divisor does not have positive rank");
    require(edge_connectivity(g) >= 3, "NotThreeEdgeConnected",
            "graph is not 3-edge-connected");
    std::optional<Divisor> found;
    Divisor ref = reduced(g, d, 0);
    detail::scan_effective(g.vertex_count(), 3, [&](const Divisor& e) {
        if (e[v] >= 1 && reduced(g, e, 0) == ref) {
            require(!found.has_value(), "UniquenessViolated",
                    "two effective representatives pass through vertex '" + g.label(v) + "'");
            found = e;
        }
        return false;
    });
    require(found.has_value(), "InternalError",
            "no effective representative through vertex '" + g.label(v) + "'");
    return *found;
}

}  // namespace trigonal
