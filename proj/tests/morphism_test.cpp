#include "oracles.hpp"
#include "test_support.hpp"

using namespace trigonal;

namespace {

Multigraph single_edge() { return Multigraph::build({"p", "q"}, {{"p", "q"}}); }

// K4 folded onto one edge: the triangle abc lands on p, the apex d on q.
GraphMorphism k4_fold() {
    Multigraph k = complete(4);
    std::vector<EdgeImage> em = {EdgeImage::vertex(0), EdgeImage::vertex(0), EdgeImage::edge(0),
                                 EdgeImage::vertex(0), EdgeImage::edge(0),   EdgeImage::edge(0)};
    return GraphMorphism(k, single_edge(), {0, 0, 0, 1}, em);
}

// Twin collapse of the doubled three-vertex path onto the path itself.
GraphMorphism ladder_fold() {
    Multigraph src = ladder(path(3));
    Multigraph dst = path(3);
    std::vector<EdgeImage> em = {EdgeImage::edge(0),   EdgeImage::edge(1),   EdgeImage::edge(0),
                                 EdgeImage::edge(1),   EdgeImage::vertex(0), EdgeImage::vertex(0),
                                 EdgeImage::vertex(1), EdgeImage::vertex(2), EdgeImage::vertex(2)};
    return GraphMorphism(src, dst, {0, 1, 2, 0, 1, 2}, em);
}

}  // namespace

TEST_CASE("morphism construction validates both edge rules", "[morphism]") {
    CHECK_NOTHROW(k4_fold());

    // identity morphism
    Multigraph k = complete(4);
    std::vector<EdgeImage> id_edges;
    for (int e = 0; e < k.edge_count(); ++e) id_edges.push_back(EdgeImage::edge(e));
    CHECK_NOTHROW(GraphMorphism(k, k, {0, 1, 2, 3}, id_edges));

    // collapsing endpoints must map the edge to the common image vertex
    Multigraph b2 = banana(2);
    CHECK(error_code([&] {
              GraphMorphism(b2, single_edge(), {0, 0},
                            {EdgeImage::edge(0), EdgeImage::vertex(0)});
          }) == "EdgeCollapseViolation");

    // distinct images must be joined by the named target edge
    Multigraph p2 = path(2);
    Multigraph p3 = path(3);
    CHECK(error_code([&] {
              GraphMorphism(p2, p3, {0, 2}, {EdgeImage::edge(0)});
          }) == "EndpointMismatch");
    CHECK(error_code([&] {
              GraphMorphism(p2, p3, {0, 2}, {EdgeImage::vertex(0)});
          }) == "EndpointMismatch");

    CHECK(error_code([&] { GraphMorphism(p2, p3, {0}, {}); }) == "GraphMismatch");
}

TEST_CASE("local multiplicities on the folded complete graph", "[morphism]") {
    GraphMorphism f = k4_fold();
    CHECK(multiplicity(f, 0, 0) == 1);
    CHECK(multiplicity(f, 1, 0) == 1);
    CHECK(multiplicity(f, 2, 0) == 1);
    CHECK(multiplicity(f, 3, 0) == 3);
    CHECK(vertex_multiplicity(f, 3) == 3);
    CHECK(is_harmonic(f));
    CHECK(is_nondegenerate(f));
    CHECK(degree(f) == 3);
}

TEST_CASE("twin collapse is harmonic of degree two", "[morphism]") {
    GraphMorphism f = ladder_fold();
    CHECK(is_harmonic(f));
    CHECK(is_nondegenerate(f));
    CHECK(degree(f) == 2);
    for (int v = 0; v < f.source().vertex_count(); ++v)
        CHECK(vertex_multiplicity(f, v) == 1);
    CHECK(error_code([&] { multiplicity(f, 0, 1); }) == "EdgeNotIncident");
}

TEST_CASE("a fold missing one edge fibre is not harmonic", "[morphism]") {
    Multigraph src = path(4);
    Multigraph dst = path(3);
    GraphMorphism f(src, dst, {0, 1, 2, 1},
                    {EdgeImage::edge(0), EdgeImage::edge(1), EdgeImage::edge(1)});
    CHECK_FALSE(is_harmonic(f));
    CHECK(error_code([&] { degree(f); }) == "NotHarmonic");
}

TEST_CASE("a total collapse is harmonic but degenerate", "[morphism]") {
    Multigraph k = complete(4);
    std::vector<EdgeImage> em(k.edge_count(), EdgeImage::vertex(0));
    GraphMorphism f(k, single_edge(), {0, 0, 0, 0}, em);
    CHECK(is_harmonic(f));
    CHECK_FALSE(is_nondegenerate(f));
    for (int v = 0; v < 4; ++v) CHECK(vertex_multiplicity(f, v) == 0);
}

TEST_CASE("degree needs a target edge", "[morphism]") {
    Multigraph k = complete(4);
    Multigraph point = Multigraph::build({"p"}, {});
    std::vector<EdgeImage> em(k.edge_count(), EdgeImage::vertex(0));
    GraphMorphism f(k, point, {0, 0, 0, 0}, em);
    CHECK(is_harmonic(f));
    CHECK(is_nondegenerate(f));  // single-vertex target measures nothing
    CHECK(error_code([&] { degree(f); }) == "TargetEdgeless");
}

TEST_CASE("pullback weights chips by local multiplicity", "[morphism]") {
    GraphMorphism f = k4_fold();
    Multigraph k = complete(4);
    CHECK(pullback(f, div_of(f.target(), {{"q", 1}})) == div_of(k, {{"d", 3}}));
    CHECK(pullback(f, div_of(f.target(), {{"p", 1}})) ==
          div_of(k, {{"a", 1}, {"b", 1}, {"c", 1}}));
    CHECK(pullback(f, Divisor(2)) == Divisor(4));
    CHECK(pullback(f, div_of(f.target(), {{"p", 1}, {"q", 1}})).degree() ==
          degree(f) * 2);
}

TEST_CASE("quotient by moving supports folds the prism onto an edge", "[morphism]") {
    Multigraph p = prism();
    Divisor d = div_of(p, {{"a#1", 1}, {"a#2", 1}, {"a#3", 1}});
    auto [tree, f] = quotient_from_divisor(p, d);
    CHECK(tree.vertex_count() == 2);
    CHECK(tree.edge_count() == 1);
    CHECK(genus(tree) == 0);
    CHECK(tree.labels() == std::vector<std::string>{"a#1", "b#1"});
    CHECK(is_harmonic(f));
    CHECK(is_nondegenerate(f));
    CHECK(degree(f) == 3);
    for (int v = 0; v < p.vertex_count(); ++v) CHECK(vertex_multiplicity(f, v) == 1);
}

TEST_CASE("quotient by moving supports folds the complete graph onto an edge", "[morphism]") {
    Multigraph k = complete(4);
    Divisor d = div_of(k, {{"a", 1}, {"b", 1}, {"c", 1}});
    auto [tree, f] = quotient_from_divisor(k, d);
    CHECK(tree.vertex_count() == 2);
    CHECK(tree.labels() == std::vector<std::string>{"a", "d"});
    CHECK(degree(f) == 3);
    CHECK(vertex_multiplicity(f, k.index_of("d")) == 3);
}

TEST_CASE("quotient of a triple cover recovers the tree", "[morphism]") {
    Multigraph t = path(3);
    Multigraph g = triple_cover(t, {"p1", "p2", "p3"});
    Divisor d = div_of(g, {{"p2#1", 1}, {"p2#2", 1}, {"p2#3", 1}});
    auto [tree, f] = quotient_from_divisor(g, d);
    REQUIRE(tree.vertex_count() == 3);
    CHECK(tree.edge_count() == 2);
    CHECK(tree.labels() == std::vector<std::string>{"p1#1", "p2#1", "p3#1"});
    CHECK(tree.multiplicity(0, 1) == 1);
    CHECK(tree.multiplicity(1, 2) == 1);
    CHECK(tree.multiplicity(0, 2) == 0);
    CHECK(degree(f) == 3);
}

TEST_CASE("quotient preconditions are rejected with named codes", "[morphism]") {
    Multigraph b = banana(3);
    CHECK(error_code([&] { quotient_from_divisor(b, div_of(b, {{"x", 3}})); }) ==
          "TooFewVertices");
    Multigraph k = complete(4);
    CHECK(error_code([&] { quotient_from_divisor(k, div_of(k, {{"a", 2}})); }) == "WrongDegree");
    Multigraph c = cycle(4);
    CHECK(error_code([&] { quotient_from_divisor(c, div_of(c, {{"c1", 3}})); }) ==
          "NotThreeEdgeConnected");
}

TEST_CASE("tree fibres certify positive rank divisors", "[morphism]") {
    GraphMorphism f = k4_fold();
    Multigraph k = complete(4);
    CHECK(divisor_from_morphism(f, 1) == div_of(k, {{"d", 3}}));
    CHECK(divisor_from_morphism(f, 0) == div_of(k, {{"a", 1}, {"b", 1}, {"c", 1}}));

    GraphMorphism l = ladder_fold();
    Divisor d = divisor_from_morphism(l, 0);
    CHECK(d == pullback(l, div_of(l.target(), {{"p1", 1}})));
    CHECK(d.degree() == 2);
    CHECK(has_positive_rank(l.source(), d));
}

TEST_CASE("fibre certification rejects bad targets", "[morphism]") {
    Multigraph k = complete(4);
    std::vector<EdgeImage> id_edges;
    for (int e = 0; e < k.edge_count(); ++e) id_edges.push_back(EdgeImage::edge(e));
    GraphMorphism ident(k, k, {0, 1, 2, 3}, id_edges);
    CHECK(error_code([&] { divisor_from_morphism(ident, 0); }) == "TargetNotTree");

    std::vector<EdgeImage> em(k.edge_count(), EdgeImage::vertex(0));
    GraphMorphism collapse(k, single_edge(), {0, 0, 0, 0}, em);
    CHECK(error_code([&] { divisor_from_morphism(collapse, 0); }) == "Degenerate");
}

TEST_CASE("pullbacks of any two tree vertices are equivalent", "[morphism]") {
    Multigraph g = triple_cover(path(4), {"p1", "p2", "p3", "p4"});
    Divisor d = div_of(g, {{"p1#1", 1}, {"p1#2", 1}, {"p1#3", 1}});
    auto [tree, f] = quotient_from_divisor(g, d);
    for (int x = 0; x < tree.vertex_count(); ++x)
        for (int y = x + 1; y < tree.vertex_count(); ++y) {
            Divisor dx = pullback(f, [&] { Divisor e(tree.vertex_count()); e[x] = 1; return e; }());
            Divisor dy = pullback(f, [&] { Divisor e(tree.vertex_count()); e[y] = 1; return e; }());
            CHECK(is_equivalent(g, dx, dy));
        }
}

TEST_CASE("round trip from divisor to quotient and back", "[morphism]") {
    struct Case {
        Multigraph g;
        Divisor d;
    };
    Multigraph p = prism(), k = complete(4);
    std::vector<Case> cases = {
        {p, div_of(p, {{"a#1", 1}, {"a#2", 1}, {"a#3", 1}})},
        {k, div_of(k, {{"a", 1}, {"b", 1}, {"c", 1}})},
    };
    for (const Case& c : cases) {
        auto [tree, f] = quotient_from_divisor(c.g, c.d);
        int root = c.d.support().front();
        Divisor back = divisor_from_morphism(f, f.vertex_image(root));
        CHECK(back.degree() == 3);
        CHECK(has_positive_rank(c.g, back));
        CHECK(is_equivalent(c.g, back, c.d));
    }
}
