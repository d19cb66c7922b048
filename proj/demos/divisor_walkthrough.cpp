// Tour of the divisor layer: chip-firing, burning, reduction, rank, and the
// Riemann-Roch identity on a couple of small graphs.

#include <iostream>

#include "trigonal/trigonal.hpp"

using namespace trigonal;

namespace {

void show(const Multigraph& g, const std::string& name, const Divisor& d) {
    std::cout << name << " = " << divisor_to_json(g, d).dump() << " (degree " << d.degree()
              << ")\n";
}

}  // namespace

int main() {
    std::cout << "== three parallel edges ==\n";
    Multigraph b3 = banana(3);
    Divisor d(b3.vertex_count());
    d[b3.index_of("x")] = 3;
    show(b3, "D", d);

    ReductionTrace t = reduce(b3, d, b3.index_of("y"));
    show(b3, "reduced at y", t.result);
    std::cout << "fired sets:";
    for (const VertexSet& s : t.fired) {
        std::cout << " {";
        for (size_t i = 0; i < s.members().size(); ++i)
            std::cout << (i ? "," : "") << b3.label(s.members()[i]);
        std::cout << "}";
    }
    std::cout << "\n";
    std::cout << "equivalent: " << (is_equivalent(b3, d, t.result) ? "yes" : "no") << "\n\n";

    std::cout << "== wheel on five vertices ==\n";
    Multigraph w = wheel(5);
    Divisor opp(w.vertex_count());
    opp[w.index_of("h")] = opp[w.index_of("w1")] = opp[w.index_of("w3")] = 1;
    show(w, "D", opp);
    std::cout << "rank(D) = " << rank(w, opp) << "\n";

    // burning from w2: the two chips adjacent to the fire are overwhelmed
    Divisor adj(w.vertex_count());
    adj[w.index_of("h")] = adj[w.index_of("w1")] = adj[w.index_of("w2")] = 1;
    BurnResult burn = dhar_burn(w, adj, w.index_of("w3"));
    std::cout << "burn of (h)+(w1)+(w2) from w3:";
    for (auto [v, round] : burn.burn_order) std::cout << " " << w.label(v) << "@" << round;
    std::cout << (burn.all_burned() ? " ... all vertices burned\n" : " ... survivors remain\n");
    std::cout << "so (h)+(w1)+(w2) has positive rank: "
              << (has_positive_rank(w, adj) ? "yes" : "no") << "\n\n";

    std::cout << "== invariants ==\n";
    Divisor k = canonical_divisor(w);
    show(w, "K", k);
    std::cout << "genus = " << genus(w) << ", deg K = 2g-2 = " << k.degree() << "\n";
    std::cout << "Riemann-Roch residual of D: " << riemann_roch_residual(w, opp) << "\n";
    std::cout << "Jacobian invariant factors:";
    for (long long f : jacobian_invariants(w)) std::cout << " " << f;
    std::cout << "\n";
    GonalityReport rep = gonality(w);
    std::cout << "gonality = " << *rep.gonality << " with witness "
              << divisor_to_json(w, *rep.witness).dump() << "\n";
    return 0;
}
