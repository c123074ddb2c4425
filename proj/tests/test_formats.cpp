#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "proxigraph/formats.hpp"
#include "proxigraph/instances.hpp"
#include "proxigraph/path_proximinal.hpp"
#include "support.hpp"

using namespace proxigraph;
using nlohmann::json;

TEST_CASE("graph files round trip") {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const auto g = random_graph(6, Rational(1, 3), seed);
        CHECK(graph_from_json(json::parse(graph_to_json(g).dump())) == g);
    }
    const auto ex = hypercube_example_graph();
    CHECK(graph_from_json(graph_to_json(ex.graph)) == ex.graph);
}

TEST_CASE("partition and space files round trip") {
    const auto parts = hypercube_example_parts();
    CHECK(partition_from_json(partition_to_json(parts)) == parts);

    const auto lattice = lattice_truncation({});
    const auto j = space_to_json(lattice.space);
    std::size_t halves = 0;
    for (const auto& row : j["distances"])
        for (const auto& v : row) halves += v.is_string() && v.get<std::string>().ends_with("/2") ? 1 : 0;
    CHECK(halves > 0);
    CHECK(space_from_json(json::parse(j.dump())) == lattice.space);

    const auto q = hypercube_space(3);
    CHECK(space_to_json(q)["distances"][0][7] == 3);
    CHECK(space_from_json(space_to_json(q)) == q);
}

TEST_CASE("certificates round trip") {
    const auto cert = is_path_proximinal_graph(alternating_path_example().graph);
    REQUIRE(cert.has_value());
    const auto back = certificate_from_json(json::parse(certificate_to_json(*cert).dump()));
    CHECK(back.graph == cert->graph);
    CHECK(back.parts == cert->parts);
    CHECK(back.space == cert->space);
    CHECK(verify_certificate(back));
}

TEST_CASE("malformed files are rejected") {
    CHECK_CODE(graph_from_json(json::parse(R"({"vertices": ["a"]})")), format);
    CHECK_CODE(graph_from_json(json::parse(R"({"vertices": [1], "edges": []})")), format);
    CHECK_CODE(graph_from_json(json::parse(R"({"vertices": ["a", "b"], "edges": [["a"]]})")), format);
    CHECK_CODE(graph_from_json(json::parse(R"({"vertices": ["a"], "edges": [["a", "a"]]})")), loop_edge);
    CHECK_CODE(graph_from_json(json::parse("[]")), format);
    CHECK_CODE(partition_from_json(json::parse(R"({"A": ["a"], "B": ["a"]})")), parts_overlap);
    CHECK_CODE(partition_from_json(json::parse(R"({"A": ["a", "a"], "B": ["b"]})")), duplicate_vertex);
    CHECK_CODE(space_from_json(json::parse(R"({"points": ["a", "b"], "distances": [[0, "1/0"], ["1/0", 0]]})")),
               malformed_rational);
    CHECK_CODE(space_from_json(json::parse(R"({"points": ["a", "b"], "distances": [[0, 1.5], [1.5, 0]]})")),
               malformed_rational);
    CHECK_CODE(space_from_json(json::parse(R"({"points": ["a", "b"], "distances": [[0, 1, 2], [1, 0, 2]]})")),
               shape_mismatch);
    CHECK_CODE(space_from_json(json::parse(R"({"points": ["a", "b"], "distances": [[0, 1], [2, 0]]})")),
               asymmetric_entry);
}

TEST_CASE("file helpers") {
    const auto dir = std::filesystem::temp_directory_path() / "proxigraph_formats_test";
    std::filesystem::create_directories(dir);
    const auto path = dir / "g.json";
    write_json_file(path, graph_to_json(alternating_path_example().graph));
    CHECK(graph_from_json(read_json_file(path)) == alternating_path_example().graph);
    std::ofstream(dir / "bad.json") << "{not json";
    CHECK_CODE(read_json_file(dir / "bad.json"), format);
    CHECK_CODE(read_json_file(dir / "missing.json"), format);
    std::filesystem::remove_all(dir);
}

TEST_CASE("DOT export lists vertices in label order") {
    const auto p = alternating_path_example();
    const auto dot = to_dot(p.graph, &p.parts);
    CHECK(dot.rfind("graph G {\n", 0) == 0);
    CHECK(dot.find("\"a1\" [part=A") < dot.find("\"a2\""));
    CHECK(dot.find("\"a2\"") < dot.find("\"b1\""));
    CHECK(dot.find("\"a2\" -- \"b2\";") != std::string::npos);
    CHECK(to_dot(p.graph).find("part=") == std::string::npos);
}
