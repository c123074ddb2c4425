#include <doctest.h>

#include "oracles.hpp"
#include "proxigraph/be_paths.hpp"
#include "proxigraph/instances.hpp"
#include "proxigraph/path_proximinal.hpp"
#include "support.hpp"

using namespace proxigraph;

namespace {

SimpleGraph k2() { return build_graph({"a", "b"}, {{"a", "b"}}); }
const Bipartition k2_parts({"a"}, {"b"});

CrossPairSet as_cross(const std::set<std::pair<Label, Label>>& s) { return CrossPairSet(s.begin(), s.end()); }

}  // namespace

TEST_CASE("as_be_path") {
    const auto ex = hypercube_example_graph();
    const auto w = as_be_path(ex.graph, {"x4", "x7", "x15"}, ex.parts);
    REQUIRE(w.has_value());
    CHECK(w->crossing_edge() == make_edge("x4", "x7"));
    CHECK(w->crossing_index == 0);

    const auto p = alternating_path_example();
    CHECK_FALSE(as_be_path(p.graph, {"a1", "b1", "a2"}, p.parts).has_value());
    CHECK_CODE(as_be_path(ex.graph, {"x4", "x7", "x13", "x16", "x14", "x6", "x13", "x16", "x15"}, ex.parts),
               not_a_path);
    // Vertices outside A ∪ B disqualify the sequence.
    const auto g = build_graph({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
    CHECK_FALSE(as_be_path(g, {"a", "b", "c"}, k2_parts).has_value());
}

TEST_CASE("is_path_bipartite") {
    const auto ex = hypercube_example_graph();
    CHECK(is_path_bipartite(ex.graph, ex.parts));
    const auto two = build_graph({"a1", "a2", "b1", "b2"}, {{"a1", "a2"}, {"b1", "b2"}});
    CHECK_FALSE(is_path_bipartite(two, Bipartition({"a1", "a2"}, {"b1", "b2"})));
    const auto with_isolated = build_graph({"a", "b", "c"}, {{"a", "b"}});
    for (const auto& parts : all_bipartitions(with_isolated.vertices())) CHECK_FALSE(is_path_bipartite(with_isolated, parts));
    // V(G) must equal A ∪ B.
    CHECK_FALSE(is_path_bipartite(k2(), Bipartition({"a"}, {"b", "z"})));
}

TEST_CASE("bpath pairs on the small examples") {
    CHECK(bpath_pairs(k2(), k2_parts) == CrossPairSet{{"a", "b"}});
    const auto p = alternating_path_example();
    const CrossPairSet expected{{"a1", "b1"}, {"a2", "b1"}, {"a2", "b2"}};
    CHECK(bpath_pairs(p.graph, p.parts) == expected);
    CHECK(as_cross(oracle::bpath(p.graph, p.parts)) == expected);
    CHECK_CODE(bpath_pairs(k2(), Bipartition({"a"}, {"c"})), parts_not_covering);
}

TEST_CASE("bpath pairs on the hypercube example cover A x B") {
    const auto ex = hypercube_example_graph();
    const auto pairs = bpath_pairs(ex.graph, ex.parts);
    CHECK(pairs.size() == 64);
    const auto listed = hypercube_example_listed_pairs();
    CHECK(listed.size() == 46);
    CHECK(std::includes(pairs.begin(), pairs.end(), listed.begin(), listed.end()));
    CHECK_FALSE(listed.contains({"x2", "x5"}));
    CHECK(as_be_path(ex.graph, {"x2", "x9", "x3", "x5"}, ex.parts).has_value());
    CHECK(as_cross(oracle::bpath(ex.graph, ex.parts)).size() == 64);
}

TEST_CASE("be_path_witness") {
    const auto ex = hypercube_example_graph();
    const auto w = be_path_witness(ex.graph, ex.parts, "x4", "x15");
    REQUIRE(w.has_value());
    CHECK(w->path.front() == "x4");
    CHECK(w->path.back() == "x15");
    CHECK(as_be_path(ex.graph, w->path, ex.parts) == w);

    const auto p = alternating_path_example();
    CHECK_FALSE(be_path_witness(p.graph, p.parts, "a1", "b2").has_value());
    CHECK(be_path_witness(k2(), k2_parts, "a", "b")->path == Path{"a", "b"});
    CHECK_CODE(be_path_witness(k2(), k2_parts, "b", "a"), wrong_side);
}

TEST_CASE("enumerate_be_paths") {
    CHECK(enumerate_be_paths(k2(), k2_parts).size() == 2);
    const auto p = alternating_path_example();
    const auto all = enumerate_be_paths(p.graph, p.parts);
    for (const auto& w : all) {
        CHECK_FALSE((w.path.front() == "a1" && w.path.back() == "b2"));
        CHECK_FALSE((w.path.front() == "b2" && w.path.back() == "a1"));
    }
    CHECK(all.size() == oracle::be_paths(p.graph, p.parts).size());
    CHECK(enumerate_be_paths(build_graph({"a", "b"}, {}), k2_parts).empty());
    CHECK_CODE(enumerate_be_paths(random_graph(11, Rational(1, 2), 1), Bipartition({"v1"}, {"v10", "v11", "v2", "v3", "v4", "v5", "v6", "v7", "v8", "v9"})),
               size_exceeded);
}

TEST_CASE("union of be-paths") {
    const auto p = alternating_path_example();
    CHECK(union_of_be_paths(p.graph, p.parts) == p.graph);
    const auto g = build_graph({"a", "b", "c"}, {{"a", "b"}});
    CHECK(union_of_be_paths(g, Bipartition({"a"}, {"b", "c"})) == k2());
}

TEST_CASE("path-completeness and the quotient graph") {
    const auto p = alternating_path_example();
    CHECK_FALSE(is_path_complete(p.graph, p.parts));
    CHECK(is_path_complete(k2(), k2_parts));

    const auto qp = quotient_graph(p.graph, p.parts);
    CHECK(qp.a_components == std::vector<VertexSet>{{"a1"}, {"a2"}});
    CHECK(qp.b_components == std::vector<VertexSet>{{"b1"}, {"b2"}});
    CHECK(qp.edges.size() == 3);
    CHECK_FALSE(qp.edges.contains({0, 1}));
    CHECK_FALSE(is_complete_bipartite(qp));

    const auto ex = hypercube_example_graph();
    const auto qx = quotient_graph(ex.graph, ex.parts);
    CHECK(qx.a_components.size() == 2);
    CHECK(qx.b_components.size() == 2);
    CHECK(qx.a_representative(0) == "x1");
    CHECK(qx.b_representative(1) == "x8");
    CHECK(is_complete_bipartite(qx));

    const auto qk = quotient_graph(k2(), k2_parts);
    CHECK(qk.edges.size() == 1);
    CHECK(is_complete_bipartite(qk));
}

TEST_CASE("find_path_bipartite_partition") {
    const auto k = find_path_bipartite_partition(k2());
    REQUIRE(k.has_value());
    CHECK(*k == k2_parts);
    const auto ex = hypercube_example_graph();
    const auto part = find_path_bipartite_partition(ex.graph);
    REQUIRE(part.has_value());
    CHECK(part->a() == VertexSet{"x1"});
    CHECK(part->b().size() == 15);
    CHECK(is_path_bipartite(ex.graph, *part));
    CHECK_FALSE(find_path_bipartite_partition(build_graph({"a", "b", "c"}, {{"a", "b"}})).has_value());
    CHECK_FALSE(find_path_bipartite_partition(SimpleGraph()).has_value());
}

TEST_CASE("path structure agrees with brute-force path enumeration up to five vertices") {
    std::size_t instances = 0;
    for (int n = 2; n <= 5; ++n) {
        for (const auto& g : enumerate_labeled_graphs(n)) {
            for (const auto& parts : all_bipartitions(g.vertices())) {
                ++instances;
                const auto expected = as_cross(oracle::bpath(g, parts));
                const auto pairs = bpath_pairs(g, parts);
                REQUIRE(pairs == expected);

                const auto [cover_v, cover_e] = oracle::be_path_cover(g, parts);
                const bool union_is_g = cover_v == g.vertices() && cover_e == g.edges();
                REQUIRE(is_path_bipartite(g, parts) == union_is_g);
                CHECK((union_of_be_paths(g, parts) == g) == union_is_g);
                if (union_is_g) CHECK(parts.all() == g.vertices());

                CHECK(enumerate_be_paths(g, parts).size() == oracle::be_paths(g, parts).size());
                CHECK(is_path_complete(g, parts) == (expected.size() == parts.a().size() * parts.b().size()));
                CHECK(is_path_complete(g, parts) == is_complete_bipartite(quotient_graph(g, parts)));

                for (const auto& a : parts.a()) {
                    for (const auto& b : parts.b()) {
                        const auto w = be_path_witness(g, parts, a, b);
                        REQUIRE(w.has_value() == expected.contains({a, b}));
                        if (w) CHECK(oracle::is_be_path(w->path, parts));
                    }
                }

                if (is_path_bipartite(g, parts) && std::min(parts.a().size(), parts.b().size()) == 1) {
                    CHECK(is_connected(g) == is_path_complete(g, parts));
                }
            }
        }
    }
    CHECK(instances == 31668);
}

TEST_CASE("the singleton-part bound is sharp") {
    // P4 has two vertices on each side, is connected and path-bipartite, yet
    // is not path-complete.
    const auto p = alternating_path_example();
    CHECK(is_connected(p.graph));
    CHECK(is_path_bipartite(p.graph, p.parts));
    CHECK_FALSE(is_path_complete(p.graph, p.parts));
}

TEST_CASE("canonical partition exists exactly when no vertex is isolated") {
    for (int n = 1; n <= 5; ++n) {
        for (const auto& g : enumerate_labeled_graphs(n)) {
            const bool no_isolated = isolated_vertices(g).empty() && !g.edges().empty();
            const auto found = find_path_bipartite_partition(g);
            CHECK(found.has_value() == no_isolated);
            if (found) CHECK(is_path_bipartite(g, *found));
        }
    }
}
