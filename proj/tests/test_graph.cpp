#include <doctest.h>

#include <array>

#include "oracles.hpp"
#include "proxigraph/instances.hpp"
#include "proxigraph/path_proximinal.hpp"
#include "support.hpp"

using namespace proxigraph;

namespace {

SimpleGraph p4() { return alternating_path_example().graph; }

SimpleGraph two_edges() { return build_graph({"a", "b", "c", "d"}, {{"a", "b"}, {"c", "d"}}); }

SimpleGraph hamming_graph_on_x() {
    return build_threshold_graph(hypercube_example_space(), hypercube_example_parts());
}

}  // namespace

TEST_CASE("build_graph normalizes edges") {
    const auto k2 = build_graph({"a", "b"}, {{"b", "a"}, {"a", "b"}});
    CHECK(k2.order() == 2);
    CHECK(k2.size() == 1);
    CHECK(k2.edges().begin()->first == "a");
    CHECK(k2.adjacent("b", "a"));
    CHECK(hypercube_example_graph().graph.size() == 25);
}

TEST_CASE("build_graph rejects malformed input") {
    CHECK_CODE(build_graph({"a"}, {{"a", "a"}}), loop_edge);
    CHECK_CODE(build_graph({"a", "a"}, {}), duplicate_vertex);
    CHECK_CODE(build_graph({"a"}, {{"a", "z"}}), unknown_endpoint);
    CHECK_CODE(build_graph({"a b"}, {}), invalid_label);
    CHECK_CODE(build_graph({""}, {}), invalid_label);
    try {
        build_graph({"a"}, {{"a", "zz"}});
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("zz") != std::string::npos);
    }
}

TEST_CASE("bipartitions must be nonempty and disjoint") {
    CHECK_CODE(Bipartition({}, {"b"}), empty_part);
    CHECK_CODE(Bipartition({"a"}, {}), empty_part);
    CHECK_CODE(Bipartition({"a", "b"}, {"b"}), parts_overlap);
    const Bipartition p({"a"}, {"b", "c"});
    CHECK(p.all() == VertexSet{"a", "b", "c"});
    CHECK(p.crosses("b", "a"));
    CHECK_FALSE(p.crosses("b", "c"));
    CHECK(p.swapped().a() == VertexSet{"b", "c"});
}

TEST_CASE("induced subgraphs") {
    const auto g = p4();
    const auto on_a = induced_subgraph(g, {"a1", "a2"});
    CHECK(on_a.order() == 2);
    CHECK(on_a.size() == 0);
    CHECK(induced_subgraph(g, g.vertices()) == g);
    CHECK_CODE(induced_subgraph(g, {}), empty_subset);
    CHECK_CODE(induced_subgraph(g, {"a1", "zz"}), not_subset);

    const auto q = hamming_graph_on_x();
    const auto blocks = connected_components(induced_subgraph(q, hypercube_example_parts().a()));
    REQUIRE(blocks.size() == 2);
    CHECK(blocks[0] == VertexSet{"x1"});
    CHECK(blocks[1] == VertexSet{"x10", "x11", "x12", "x2", "x3", "x4", "x9"});
}

TEST_CASE("induced bipartite subgraphs keep only crossing edges") {
    const auto k2 = build_graph({"a", "b"}, {{"a", "b"}});
    CHECK(induced_bipartite_subgraph(k2, Bipartition({"a"}, {"b"})) == k2);
    const auto inst = alternating_path_example();
    CHECK(induced_bipartite_subgraph(inst.graph, inst.parts) == inst.graph);

    const auto q = hamming_graph_on_x();
    const auto parts = hypercube_example_parts();
    CHECK(q.size() == 32);
    CHECK(induced_bipartite_subgraph(q, parts).size() == 14);
    CHECK(induced_subgraph(q, parts.a()).size() == 9);
    CHECK(induced_subgraph(q, parts.b()).size() == 9);
    CHECK_CODE(induced_bipartite_subgraph(k2, Bipartition({"a"}, {"c"})), parts_not_subset);
}

TEST_CASE("components, connectivity and isolated vertices") {
    const auto blocks = connected_components(two_edges());
    REQUIRE(blocks.size() == 2);
    CHECK(blocks[0] == VertexSet{"a", "b"});
    CHECK(blocks[1] == VertexSet{"c", "d"});
    CHECK(connected_components(hypercube_example_graph().graph).size() == 1);
    CHECK(is_connected(p4()));
    CHECK_FALSE(is_connected(two_edges()));
    CHECK(is_connected(build_graph({"solo"}, {})));
    CHECK(connected_components(SimpleGraph()).empty());
    CHECK(isolated_vertices(build_graph({"a", "b", "c"}, {{"a", "b"}})) == VertexSet{"c"});
}

TEST_CASE("prune_isolated removes exactly the isolated vertices") {
    const auto k2c = build_graph({"a", "b", "c"}, {{"a", "b"}});
    const auto k2 = build_graph({"a", "b"}, {{"a", "b"}});
    CHECK(prune_isolated(k2c) == k2);
    CHECK(prune_isolated(p4()) == p4());
    CHECK_CODE(prune_isolated(build_graph({"a", "b", "c"}, {})), empty_graph);
}

TEST_CASE("find_path returns a shortest path") {
    const auto g = p4();
    CHECK(find_path(g, "a1", "b2") == Path{"a1", "b1", "a2", "b2"});
    CHECK_FALSE(find_path(two_edges(), "a", "c").has_value());
    CHECK_CODE(find_path(g, "a1", "a1"), equal_endpoints);
    CHECK_CODE(find_path(g, "a1", "zz"), unknown_vertex);

    const auto q = hamming_graph_on_x();
    const auto path = find_path(q, "x2", "x5");
    REQUIRE(path.has_value());
    CHECK(path->size() == 4);
    CHECK(is_path_in(q, *path));
    CHECK(oracle::hamming(hypercube_example_coordinates().at("x2"), hypercube_example_coordinates().at("x5")) == 3);
}

TEST_CASE("graph_union") {
    const std::array<SimpleGraph, 3> pieces = {
        path_graph({"a1", "b1"}), path_graph({"b1", "a2"}), path_graph({"a2", "b2"})};
    CHECK(graph_union(pieces) == p4());
    const std::array<SimpleGraph, 1> one = {p4()};
    CHECK(graph_union(one) == p4());
    CHECK_CODE(graph_union(std::span<const SimpleGraph>()), empty_list);
}

TEST_CASE("path validation") {
    const auto g = p4();
    CHECK(is_path_in(g, {"a1", "b1", "a2"}));
    CHECK_FALSE(is_path_in(g, {"a1"}));
    CHECK_FALSE(is_path_in(g, {"a1", "a2"}));
    CHECK_FALSE(is_path_in(g, {"a1", "b1", "a1"}));
    CHECK_FALSE(is_path_in(g, {"a1", "zz"}));
    CHECK_CODE(validate_path(g, {"a1", "b1", "a1"}), not_a_path);
    CHECK(is_complete(build_graph({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}})));
    CHECK_FALSE(is_complete(g));
}

TEST_CASE("three induced pieces reassemble every graph on at most five vertices") {
    std::size_t checked = 0;
    for (int n = 2; n <= 5; ++n) {
        for (const auto& g : enumerate_labeled_graphs(n)) {
            for (const auto& parts : all_bipartitions(g.vertices())) {
                const std::array<SimpleGraph, 3> pieces = {induced_subgraph(g, parts.a()), induced_subgraph(g, parts.b()),
                                                           induced_bipartite_subgraph(g, parts)};
                REQUIRE(graph_union(pieces) == g);
                ++checked;
            }
        }
    }
    CHECK(checked == 2 * 2 + 8 * 6 + 64 * 14 + 1024 * 30);
}

TEST_CASE("components, pruning and shortest paths agree with brute force") {
    for (int n = 1; n <= 5; ++n) {
        for (const auto& g : enumerate_labeled_graphs(n)) {
            const auto blocks = connected_components(g);
            REQUIRE(blocks == oracle::components(g));
            CHECK(is_connected(g) == (blocks.size() == 1));
            if (!g.edges().empty()) {
                const auto pruned = prune_isolated(g);
                CHECK(prune_isolated(pruned) == pruned);
                CHECK(isolated_vertices(pruned).empty());
                CHECK(pruned.edges() == g.edges());
            }
            const auto all_paths = oracle::simple_paths(g);
            for (const auto& u : g.vertices()) {
                for (const auto& v : g.vertices()) {
                    if (u == v) continue;
                    std::size_t best = 0;
                    for (const auto& p : all_paths) {
                        if (p.front() == u && p.back() == v && (best == 0 || p.size() < best)) best = p.size();
                    }
                    const auto found = find_path(g, u, v);
                    REQUIRE(found.has_value() == (best != 0));
                    if (found) {
                        CHECK(is_path_in(g, *found));
                        CHECK(found->size() == best);
                    }
                }
            }
        }
    }
}

TEST_CASE("union of overlapping connected graphs is connected") {
    std::size_t pairs = 0;
    for (std::uint64_t seed = 0; seed < 400; ++seed) {
        const auto g1 = random_graph(5, Rational(1, 2), seed);
        const auto g2 = random_graph(5, Rational(1, 2), seed + 1000);
        if (!is_connected(g1) || !is_connected(g2)) continue;
        const std::array<SimpleGraph, 2> both = {g1, g2};
        CHECK(is_connected(graph_union(both)));
        ++pairs;
    }
    CHECK(pairs > 20);
}
