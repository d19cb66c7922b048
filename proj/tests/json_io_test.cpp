#include "test_support.hpp"

using namespace trigonal;

TEST_CASE("graph documents round trip byte for byte", "[json]") {
    std::string text = R"({"vertices":["x","y"],"edges":[["x","y"],["x","y"],["x","y"]]})";
    Multigraph g = graph_from_json(parse_json(text));
    CHECK(g.vertex_count() == 2);
    CHECK(g.edge_count() == 3);
    CHECK(graph_to_json(g).dump() == text);

    Multigraph w = wheel(5);
    Multigraph again = graph_from_json(graph_to_json(w));
    CHECK(again.labels() == w.labels());
    REQUIRE(again.edge_count() == w.edge_count());
    for (int e = 0; e < w.edge_count(); ++e) {
        CHECK(again.edges()[e].u == w.edges()[e].u);
        CHECK(again.edges()[e].v == w.edges()[e].v);
    }
}

TEST_CASE("graph documents reject malformed shapes", "[json]") {
    CHECK(error_code([] { parse_json("{oops"); }) == "MalformedInput");
    CHECK(error_code([] { graph_from_json(parse_json("[]")); }) == "MalformedInput");
    CHECK(error_code([] { graph_from_json(parse_json(R"({"edges":[]})")); }) == "MalformedInput");
    CHECK(error_code([] { graph_from_json(parse_json(R"({"vertices":["a"]})")); }) ==
          "MalformedInput");
    CHECK(error_code([] {
              graph_from_json(parse_json(R"({"vertices":["a",1],"edges":[]})"));
          }) == "MalformedInput");
    CHECK(error_code([] {
              graph_from_json(parse_json(R"({"vertices":["a","b"],"edges":[["a"]]})"));
          }) == "MalformedInput");
    // structural validation still applies after parsing
    CHECK(error_code([] {
              graph_from_json(parse_json(R"({"vertices":["a","b"],"edges":[["a","a"]]})"));
          }) == "LoopEdge");
    CHECK(error_code([] {
              graph_from_json(parse_json(R"({"vertices":["a","b"],"edges":[["a","c"]]})"));
          }) == "UnknownEndpoint");
}

TEST_CASE("divisor documents use labels and omit zeros", "[json]") {
    Multigraph g = banana(3);
    Divisor d = divisor_from_json(g, parse_json(R"({"x":2,"y":-1})"));
    CHECK(d == div_of(g, {{"x", 2}, {"y", -1}}));
    CHECK(divisor_from_json(g, parse_json("{}")) == Divisor(2));
    CHECK(divisor_from_json(g, parse_json(R"({"y":4})")) == div_of(g, {{"y", 4}}));

    CHECK(divisor_to_json(g, div_of(g, {{"y", 3}})).dump() == R"({"y":3})");
    CHECK(divisor_to_json(g, Divisor(2)).dump() == "{}");
    // declaration order, not alphabetical or insertion order
    Multigraph w = wheel(5);
    CHECK(divisor_to_json(w, div_of(w, {{"w3", 1}, {"h", 2}})).dump() == R"({"h":2,"w3":1})");

    CHECK(error_code([&] { divisor_from_json(g, parse_json(R"({"z":1})")); }) == "UnknownVertex");
    CHECK(error_code([&] { divisor_from_json(g, parse_json(R"({"x":1.5})")); }) ==
          "MalformedInput");
    CHECK(error_code([&] { divisor_from_json(g, parse_json(R"([1])")); }) == "MalformedInput");
}

TEST_CASE("morphism documents round trip", "[json]") {
    Multigraph k = complete(4);
    Multigraph pq = Multigraph::build({"p", "q"}, {{"p", "q"}});
    std::string text = R"({"vertex_map":{"a":"p","b":"p","c":"p","d":"q"},)"
                       R"("edge_map":[{"vertex":"p"},{"vertex":"p"},0,{"vertex":"p"},0,0]})";
    GraphMorphism f = morphism_from_json(k, pq, parse_json(text));
    CHECK(is_harmonic(f));
    CHECK(degree(f) == 3);
    CHECK(morphism_to_json(f).dump() == text);
}

TEST_CASE("morphism documents reject malformed shapes", "[json]") {
    Multigraph k = complete(4);
    Multigraph pq = Multigraph::build({"p", "q"}, {{"p", "q"}});
    auto parse = [&](const std::string& t) { return morphism_from_json(k, pq, parse_json(t)); };
    CHECK(error_code([&] { parse("[]"); }) == "MalformedInput");
    CHECK(error_code([&] { parse(R"({"edge_map":[]})"); }) == "MalformedInput");
    // missing vertex
    CHECK(error_code([&] {
              parse(R"({"vertex_map":{"a":"p","b":"p","c":"p"},)"
                    R"("edge_map":[{"vertex":"p"},{"vertex":"p"},0,{"vertex":"p"},0,0]})");
          }) == "MalformedInput");
    // wrong edge_map length
    CHECK(error_code([&] {
              parse(R"({"vertex_map":{"a":"p","b":"p","c":"p","d":"q"},"edge_map":[0]})");
          }) == "MalformedInput");
    // edge index out of range
    CHECK(error_code([&] {
              parse(R"({"vertex_map":{"a":"p","b":"p","c":"p","d":"q"},)"
                    R"("edge_map":[{"vertex":"p"},{"vertex":"p"},7,{"vertex":"p"},0,0]})");
          }) == "MalformedInput");
    // shape is fine but the morphism conditions fail
    CHECK(error_code([&] {
              parse(R"({"vertex_map":{"a":"p","b":"p","c":"p","d":"q"},)"
                    R"("edge_map":[0,{"vertex":"p"},0,{"vertex":"p"},0,0]})");
          }) == "EdgeCollapseViolation");
}

TEST_CASE("automorphism documents round trip", "[json]") {
    Multigraph k = complete(4);
    std::string text = R"({"map":{"a":"b","b":"c","c":"a","d":"d"}})";
    Automorphism s = automorphism_from_json(k, parse_json(text));
    CHECK(s.perm() == std::vector<int>{1, 2, 0, 3});
    CHECK(automorphism_to_json(k, s).dump() == text);

    CHECK(error_code([&] { automorphism_from_json(k, parse_json("{}")); }) == "MalformedInput");
    CHECK(error_code([&] {
              automorphism_from_json(k, parse_json(R"({"map":{"a":"b"}})"));
          }) == "MalformedInput");
    CHECK(error_code([&] {
              automorphism_from_json(
                  k, parse_json(R"({"map":{"a":"b","b":"b","c":"a","d":"d"}})"));
          }) == "NotAnAutomorphism");
}

TEST_CASE("DOT export lists vertices then edges", "[json]") {
    CHECK(to_dot(banana(2)) ==
          "graph {\n"
          "  \"x\";\n"
          "  \"y\";\n"
          "  \"x\" -- \"y\";\n"
          "  \"x\" -- \"y\";\n"
          "}\n");

    // labels with quotes and backslashes are escaped
    Multigraph odd = Multigraph::build({"a\"b", "c\\d"}, {{"a\"b", "c\\d"}});
    std::string dot = to_dot(odd);
    CHECK(dot.find("\"a\\\"b\"") != std::string::npos);
    CHECK(dot.find("\"c\\\\d\"") != std::string::npos);

    // line count: braces + one line per vertex + one per edge
    Multigraph tc = twin_triangles();
    std::string out = to_dot(tc);
    CHECK((int)std::count(out.begin(), out.end(), '\n') == 2 + 8 + 13);
}

TEST_CASE("serialization is stable across repeated calls", "[json]") {
    Multigraph g = twin_triangles();
    CHECK(graph_to_json(g).dump() == graph_to_json(twin_triangles()).dump());
    GonalityReport r1 = gonality(g), r2 = gonality(twin_triangles());
    CHECK(divisor_to_json(g, *r1.witness).dump() == divisor_to_json(g, *r2.witness).dump());
    CHECK(to_dot(g) == to_dot(twin_triangles()));
}
