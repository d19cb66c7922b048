// Command-line surface over the trigonal library.  Every subcommand reads
// graph/divisor/morphism documents (file path, inline JSON, or - for stdin),
// writes to stdout, and exits 0 on success, 1 when a checked property fails,
// 2 on malformed input, 3 on a violated precondition.

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "trigonal/trigonal.hpp"

using namespace trigonal;

namespace {

bool g_json = false;  // selected output mode, consulted by the error path

std::string slurp(const std::string& arg) {
    if (arg == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    if (!arg.empty() && (arg[0] == '{' || arg[0] == '[')) return arg;
    std::ifstream in(arg, std::ios::binary);
    require(bool(in), "FileUnreadable", "cannot read '" + arg + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Multigraph load_graph(const std::string& arg) { return graph_from_json(parse_json(slurp(arg))); }

Divisor load_divisor(const Multigraph& g, const std::string& arg) {
    return divisor_from_json(g, parse_json(slurp(arg)));
}

int parse_int(const std::string& s) {
    try {
        size_t used = 0;
        int v = std::stoi(s, &used);
        require(used == s.size(), "MalformedInput", "not an integer: '" + s + "'");
        return v;
    } catch (const Error&) {
        throw;
    } catch (const std::exception&) {
        fail("MalformedInput", "not an integer: '" + s + "'");
    }
}

void emit(const Json& j) { std::cout << j.dump() << "\n"; }

Json labels_json(const Multigraph& g, const VertexSet& s) {
    Json a = Json::array();
    for (int v : s.members()) a.push_back(g.label(v));
    return a;
}

// ---- subcommand bodies ------------------------------------------------------

int do_gonality(const std::string& graph_arg, std::optional<int> cap) {
    Multigraph g = load_graph(graph_arg);
    GonalityReport rep = gonality(g, cap);
    if (g_json) {
        Json j;
        j["gonality"] = rep.gonality ? Json(*rep.gonality) : Json(nullptr);
        if (rep.witness) j["witness"] = divisor_to_json(g, *rep.witness);
        j["lower_bound"] = rep.bounds.lower();
        j["searched_up_to"] = rep.searched_up_to;
        emit(j);
    } else if (rep.capped()) {
        std::cout << "> " << *cap << "\n";
    } else {
        std::cout << *rep.gonality << "\n";
        std::cout << "witness: " << divisor_to_json(g, *rep.witness).dump() << "\n";
    }
    return 0;
}

int do_bounds(const std::string& graph_arg) {
    Multigraph g = load_graph(graph_arg);
    GonalityBounds b = gonality_bounds(g);
    if (g_json) {
        Json j;
        j["lower"] = b.lower();
        j["upper"] = b.trivial_upper;
        j["vertices_or_edge_connectivity"] = b.vertices_or_eta;
        j["k4_minor"] = b.k4_minor;
        j["min_valence"] = b.min_valence ? Json(*b.min_valence) : Json(nullptr);
        emit(j);
    } else {
        std::cout << "lower: " << b.lower() << "\n";
        std::cout << "upper: " << b.trivial_upper << "\n";
        std::cout << "k4 minor: " << (b.k4_minor ? "true" : "false") << "\n";
        if (b.min_valence) std::cout << "min valence: " << *b.min_valence << "\n";
    }
    return 0;
}

int do_rank(const std::string& graph_arg, const std::string& div_arg) {
    Multigraph g = load_graph(graph_arg);
    int r = rank(g, load_divisor(g, div_arg));
    if (g_json) {
        Json j;
        j["rank"] = r;
        emit(j);
    } else {
        std::cout << r << "\n";
    }
    return 0;
}

int do_reduce(const std::string& graph_arg, const std::string& div_arg, const std::string& at) {
    Multigraph g = load_graph(graph_arg);
    ReductionTrace t = reduce(g, load_divisor(g, div_arg), g.index_of(at));
    Json fired = Json::array();
    for (const VertexSet& s : t.fired) fired.push_back(labels_json(g, s));
    if (g_json) {
        Json j;
        j["result"] = divisor_to_json(g, t.result);
        j["fired"] = fired;
        emit(j);
    } else {
        std::cout << divisor_to_json(g, t.result).dump() << "\n";
        std::cout << "fired: " << fired.dump() << "\n";
    }
    return 0;
}

int do_burn(const std::string& graph_arg, const std::string& div_arg, const std::string& from) {
    Multigraph g = load_graph(graph_arg);
    BurnResult b = dhar_burn(g, load_divisor(g, div_arg), g.index_of(from));
    if (g_json) {
        Json order = Json::array();
        for (auto [v, round] : b.burn_order)
            order.push_back({{"vertex", g.label(v)}, {"round", round}});
        Json j;
        j["burn_order"] = order;
        j["unburnt"] = labels_json(g, b.unburnt);
        j["all_burned"] = b.all_burned();
        emit(j);
    } else {
        for (auto [v, round] : b.burn_order)
            std::cout << "round " << round << ": " << g.label(v) << "\n";
        if (b.all_burned())
            std::cout << "all vertices burned\n";
        else
            std::cout << "unburnt: " << labels_json(g, b.unburnt).dump() << "\n";
    }
    return 0;
}

int do_equivalent(const std::string& graph_arg, const std::string& a_arg,
                  const std::string& b_arg) {
    Multigraph g = load_graph(graph_arg);
    bool eq = is_equivalent(g, load_divisor(g, a_arg), load_divisor(g, b_arg));
    if (g_json) {
        Json j;
        j["equivalent"] = eq;
        emit(j);
    } else {
        std::cout << (eq ? "true" : "false") << "\n";
    }
    return eq ? 0 : 1;
}

int do_classes(const std::string& graph_arg, const std::string& div_arg) {
    Multigraph g = load_graph(graph_arg);
    ClassPartition p = class_partition(g, load_divisor(g, div_arg));
    if (g_json) {
        Json blocks = Json::array();
        for (size_t b = 0; b < p.blocks.size(); ++b)
            blocks.push_back({{"members", labels_json(g, p.blocks[b])},
                              {"divisor", divisor_to_json(g, p.block_divisor[b])}});
        Json j;
        j["blocks"] = blocks;
        emit(j);
    } else {
        for (size_t b = 0; b < p.blocks.size(); ++b)
            std::cout << "block " << b << ": " << labels_json(g, p.blocks[b]).dump()
                      << " divisor " << divisor_to_json(g, p.block_divisor[b]).dump() << "\n";
    }
    return 0;
}

int do_quotient(const std::string& graph_arg, const std::string& div_arg) {
    Multigraph g = load_graph(graph_arg);
    auto [tree, f] = quotient_from_divisor(g, load_divisor(g, div_arg));
    if (g_json) {
        Json j;
        j["tree"] = graph_to_json(tree);
        j["morphism"] = morphism_to_json(f);
        emit(j);
    } else {
        std::cout << "tree: " << graph_to_json(tree).dump() << "\n";
        std::cout << "morphism: " << morphism_to_json(f).dump() << "\n";
    }
    return 0;
}

int do_morphism_check(const std::string& src_arg, const std::string& tgt_arg,
                      const std::string& map_arg) {
    Multigraph src = load_graph(src_arg);
    Multigraph tgt = load_graph(tgt_arg);
    try {
        GraphMorphism f = morphism_from_json(src, tgt, parse_json(slurp(map_arg)));
        bool harmonic = is_harmonic(f);
        bool nondeg = is_nondegenerate(f);
        std::optional<int> deg;
        if (harmonic && tgt.edge_count() >= 1) deg = degree(f);
        if (g_json) {
            Json j;
            j["valid"] = true;
            j["harmonic"] = harmonic;
            j["nondegenerate"] = nondeg;
            j["degree"] = deg ? Json(*deg) : Json(nullptr);
            emit(j);
        } else {
            std::cout << "valid\n";
            std::cout << "harmonic: " << (harmonic ? "true" : "false") << "\n";
            std::cout << "nondegenerate: " << (nondeg ? "true" : "false") << "\n";
            if (deg) std::cout << "degree: " << *deg << "\n";
        }
        return 0;
    } catch (const Error& e) {
        if (e.code() != "EdgeCollapseViolation" && e.code() != "EndpointMismatch") throw;
        if (g_json) {
            Json j;
            j["valid"] = false;
            j["reason"] = e.code();
            emit(j);
        } else {
            std::cout << "invalid: " << e.what() << "\n";
        }
        return 1;
    }
}

int do_pullback(const std::string& src_arg, const std::string& tgt_arg,
                const std::string& map_arg, const std::string& div_arg) {
    Multigraph src = load_graph(src_arg);
    Multigraph tgt = load_graph(tgt_arg);
    GraphMorphism f = morphism_from_json(src, tgt, parse_json(slurp(map_arg)));
    Divisor out = pullback(f, load_divisor(tgt, div_arg));
    if (g_json) {
        Json j;
        j["divisor"] = divisor_to_json(src, out);
        emit(j);
    } else {
        std::cout << divisor_to_json(src, out).dump() << "\n";
    }
    return 0;
}

int do_automorphisms(const std::string& graph_arg, int order_filter, bool tree_quotient) {
    Multigraph g = load_graph(graph_arg);
    std::vector<Automorphism> kept;
    for (const Automorphism& s : all_automorphisms(g)) {
        if (order_filter > 0 && s.order() != order_filter) continue;
        if (tree_quotient) {
            if (s.order() != 3 || fixes_an_edge(g, s)) continue;
            auto [q, f] = quotient_by(g, s);
            if (genus(q) != 0) continue;
        }
        kept.push_back(s);
    }
    if (g_json) {
        Json arr = Json::array();
        for (const Automorphism& s : kept) arr.push_back(automorphism_to_json(g, s));
        Json j;
        j["count"] = kept.size();
        j["automorphisms"] = arr;
        emit(j);
    } else {
        for (const Automorphism& s : kept)
            std::cout << automorphism_to_json(g, s).dump() << "\n";
        std::cout << "count: " << kept.size() << "\n";
    }
    return 0;
}

int do_sigma(const std::string& graph_arg, const std::string& div_arg) {
    Multigraph g = load_graph(graph_arg);
    Automorphism s = automorphism_from_divisor(g, load_divisor(g, div_arg));
    emit(automorphism_to_json(g, s));
    return 0;
}

int do_zero_three(const std::string& graph_arg) {
    Multigraph g = load_graph(graph_arg);
    auto [holds, witness] = zero_three_condition(g);
    if (g_json) {
        Json j;
        j["holds"] = holds;
        if (witness) j["witness"] = divisor_to_json(g, *witness);
        emit(j);
    } else if (holds) {
        std::cout << "holds\n";
        std::cout << "witness: " << divisor_to_json(g, *witness).dump() << "\n";
    } else {
        std::cout << "fails\n";
    }
    return holds ? 0 : 1;
}

int do_export_dot(const std::string& graph_arg) {
    std::cout << to_dot(load_graph(graph_arg));
    return 0;
}

int do_construct(const std::string& family, const std::vector<std::string>& args, int extra,
                 unsigned seed) {
    auto arity = [&](size_t n) {
        require(args.size() == n, "MalformedInput",
                "construct " + family + " expects " + std::to_string(n) + " argument(s)");
    };
    Multigraph g = [&]() -> Multigraph {
        if (family == "banana") {
            arity(1);
            return banana(parse_int(args[0]));
        }
        if (family == "path") {
            arity(1);
            return path(parse_int(args[0]));
        }
        if (family == "cycle") {
            arity(1);
            return cycle(parse_int(args[0]));
        }
        if (family == "complete") {
            arity(1);
            return complete(parse_int(args[0]));
        }
        if (family == "wheel") {
            arity(1);
            return wheel(parse_int(args[0]));
        }
        if (family == "cube") {
            arity(0);
            return cube();
        }
        if (family == "frucht") {
            arity(0);
            return frucht();
        }
        if (family == "twin-triangles") {
            arity(0);
            return twin_triangles();
        }
        if (family == "prism") {
            arity(0);
            return prism();
        }
        if (family == "two-bridge") {
            auto shape = [](const std::string& name) {
                if (name == "k4") return BlockShape::K4MinusEdge;
                if (name == "prism") return BlockShape::PrismMinusEdge;
                if (name == "cube") return BlockShape::CubeMinusEdge;
                fail("MalformedInput", "unknown block shape '" + name + "'");
            };
            if (args.empty()) return two_bridge_trivalent();
            arity(2);
            return two_bridge_trivalent(shape(args[0]), shape(args[1]));
        }
        if (family == "ladder") {
            arity(1);
            return ladder(load_graph(args[0]));
        }
        if (family == "triple-cover") {
            require(args.size() >= 2, "MalformedInput",
                    "construct triple-cover expects a tree and attachment labels");
            Multigraph t = load_graph(args[0]);
            std::vector<std::string> attach(args.begin() + 1, args.end());
            return triple_cover(t, VertexSet::of_labels(t, attach), extra);
        }
        if (family == "k-cover") {
            arity(2);
            return k_cover(load_graph(args[0]), parse_int(args[1]));
        }
        if (family == "random-tree") {
            arity(1);
            std::mt19937 rng(seed);
            return random_tree(parse_int(args[0]), rng);
        }
        fail("MalformedInput", "unknown construct family '" + family + "'");
    }();
    emit(graph_to_json(g));
    return 0;
}

const std::set<std::string>& input_error_codes() {
    static const std::set<std::string> codes = {
        "MalformedInput", "FileUnreadable",  "NoVertices",   "DuplicateVertex",
        "UnknownEndpoint", "LoopEdge",       "Disconnected", "UnknownVertex",
        "UnknownEdge",     "GraphMismatch",  "ParameterOutOfRange"};
    return codes;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"divisor theory, gonality search, and gonality-3 certificates on multigraphs"};
    app.require_subcommand(1);

    std::string graph_arg, div_arg, div2_arg, src_arg, tgt_arg, map_arg, at_arg, from_arg;
    std::string family;
    std::vector<std::string> construct_args;
    int max_degree = -1, order_filter = 0, extra = 0;
    unsigned seed = 0;
    bool tree_quotient = false;
    int exit_code = 0;

    auto add_json = [&](CLI::App* sub) { sub->add_flag("--json", g_json, "machine output"); };

    CLI::App* c_gon = app.add_subcommand("gonality", "smallest degree of a positive-rank divisor");
    c_gon->add_option("graph", graph_arg, "graph document")->required();
    c_gon->add_option("--max-degree", max_degree, "cap the search");
    add_json(c_gon);
    c_gon->callback([&] {
        exit_code = do_gonality(graph_arg,
                                max_degree >= 0 ? std::optional<int>(max_degree) : std::nullopt);
    });

    CLI::App* c_bounds = app.add_subcommand("bounds", "provable gonality bounds, no search");
    c_bounds->add_option("graph", graph_arg)->required();
    add_json(c_bounds);
    c_bounds->callback([&] { exit_code = do_bounds(graph_arg); });

    CLI::App* c_rank = app.add_subcommand("rank", "Baker-Norine rank of a divisor");
    c_rank->add_option("graph", graph_arg)->required();
    c_rank->add_option("divisor", div_arg)->required();
    add_json(c_rank);
    c_rank->callback([&] { exit_code = do_rank(graph_arg, div_arg); });

    CLI::App* c_reduce = app.add_subcommand("reduce", "v-reduced form with its firing trace");
    c_reduce->add_option("graph", graph_arg)->required();
    c_reduce->add_option("divisor", div_arg)->required();
    c_reduce->add_option("--at", at_arg, "root vertex label")->required();
    add_json(c_reduce);
    c_reduce->callback([&] { exit_code = do_reduce(graph_arg, div_arg, at_arg); });

    CLI::App* c_burn = app.add_subcommand("burn", "Dhar's burning walk from a root");
    c_burn->add_option("graph", graph_arg)->required();
    c_burn->add_option("divisor", div_arg)->required();
    c_burn->add_option("--from", from_arg, "root vertex label")->required();
    add_json(c_burn);
    c_burn->callback([&] { exit_code = do_burn(graph_arg, div_arg, from_arg); });

    CLI::App* c_eq = app.add_subcommand("equivalent", "linear equivalence of two divisors");
    c_eq->add_option("graph", graph_arg)->required();
    c_eq->add_option("divisor", div_arg)->required();
    c_eq->add_option("other", div2_arg)->required();
    add_json(c_eq);
    c_eq->callback([&] { exit_code = do_equivalent(graph_arg, div_arg, div2_arg); });

    CLI::App* c_classes =
        app.add_subcommand("classes", "moving-support partition of a degree-3 divisor");
    c_classes->add_option("graph", graph_arg)->required();
    c_classes->add_option("divisor", div_arg)->required();
    add_json(c_classes);
    c_classes->callback([&] { exit_code = do_classes(graph_arg, div_arg); });

    CLI::App* c_quot =
        app.add_subcommand("quotient", "tree quotient and projection from a degree-3 divisor");
    c_quot->add_option("graph", graph_arg)->required();
    c_quot->add_option("divisor", div_arg)->required();
    add_json(c_quot);
    c_quot->callback([&] { exit_code = do_quotient(graph_arg, div_arg); });

    CLI::App* c_mor = app.add_subcommand("morphism", "morphism tools");
    c_mor->require_subcommand(1);
    CLI::App* c_mor_check = c_mor->add_subcommand("check", "validate a morphism document");
    c_mor_check->add_option("source", src_arg)->required();
    c_mor_check->add_option("target", tgt_arg)->required();
    c_mor_check->add_option("map", map_arg)->required();
    add_json(c_mor_check);
    c_mor_check->callback([&] { exit_code = do_morphism_check(src_arg, tgt_arg, map_arg); });

    CLI::App* c_pull = app.add_subcommand("pullback", "pull a target divisor back along a map");
    c_pull->add_option("source", src_arg)->required();
    c_pull->add_option("target", tgt_arg)->required();
    c_pull->add_option("map", map_arg)->required();
    c_pull->add_option("divisor", div_arg, "divisor on the target")->required();
    add_json(c_pull);
    c_pull->callback([&] { exit_code = do_pullback(src_arg, tgt_arg, map_arg, div_arg); });

    CLI::App* c_auts = app.add_subcommand("automorphisms", "list graph symmetries");
    c_auts->add_option("graph", graph_arg)->required();
    c_auts->add_option("--order", order_filter, "keep elements of this order");
    c_auts->add_flag("--tree-quotient", tree_quotient,
                     "keep order-3 edge-free elements whose quotient is a tree");
    add_json(c_auts);
    c_auts->callback(
        [&] { exit_code = do_automorphisms(graph_arg, order_filter, tree_quotient); });

    CLI::App* c_sigma =
        app.add_subcommand("sigma", "order-3 symmetry built from a qualifying divisor");
    c_sigma->add_option("graph", graph_arg)->required();
    c_sigma->add_option("divisor", div_arg)->required();
    add_json(c_sigma);
    c_sigma->callback([&] { exit_code = do_sigma(graph_arg, div_arg); });

    CLI::App* c_check = app.add_subcommand("check", "decidable graph properties");
    c_check->require_subcommand(1);
    CLI::App* c_z3 = c_check->add_subcommand("zero-three", "zero-or-three-edges condition");
    c_z3->add_option("graph", graph_arg)->required();
    add_json(c_z3);
    c_z3->callback([&] { exit_code = do_zero_three(graph_arg); });

    CLI::App* c_cons = app.add_subcommand("construct", "emit a named family member as JSON");
    c_cons->add_option("family", family, "banana|path|cycle|complete|wheel|cube|frucht|"
                                         "twin-triangles|prism|two-bridge|ladder|triple-cover|"
                                         "k-cover|random-tree")
        ->required();
    c_cons->add_option("args", construct_args, "family parameters");
    c_cons->add_option("--extra", extra, "extra parallel triangle edges (triple-cover)");
    c_cons->add_option("--seed", seed, "random seed (random-tree)");
    add_json(c_cons);
    c_cons->callback([&] { exit_code = do_construct(family, construct_args, extra, seed); });

    CLI::App* c_dot = app.add_subcommand("export-dot", "emit Graphviz DOT");
    c_dot->add_option("graph", graph_arg)->required();
    c_dot->callback([&] { exit_code = do_export_dot(graph_arg); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    } catch (const Error& e) {
        if (g_json) {
            Json j;
            j["error"] = e.code();
            j["message"] = e.what();
            std::cerr << j.dump() << "\n";
        } else {
            std::cerr << "error: " << e.what() << "\n";
        }
        return input_error_codes().count(e.code()) ? 2 : 3;
    }
    return exit_code;
}
