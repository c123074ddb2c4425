#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "proxigraph/be_paths.hpp"
#include "proxigraph/graph.hpp"
#include "proxigraph/path_proximinal.hpp"
#include "proxigraph/space.hpp"

namespace proxigraph {

// File formats:
//   graph      {"vertices": ["a", ...], "edges": [["a", "b"], ...]}
//   partition  {"A": [...], "B": [...]}
//   space      {"points": [...], "distances": [[0, 1, "3/2"], ...]}
//   certificate {"graph": <graph>, "partition": <partition>, "space": <space>}
// Distance entries are integers or "p/q" strings. Parse failures throw
// Error(format) or the more specific code of the underlying validator.

nlohmann::json graph_to_json(const SimpleGraph& graph);
SimpleGraph graph_from_json(const nlohmann::json& j);

nlohmann::json partition_to_json(const Bipartition& parts);
Bipartition partition_from_json(const nlohmann::json& j);

nlohmann::json space_to_json(const FiniteSemimetricSpace& space);
FiniteSemimetricSpace space_from_json(const nlohmann::json& j);

nlohmann::json certificate_to_json(const PathProximinalCertificate& certificate);
PathProximinalCertificate certificate_from_json(const nlohmann::json& j);

nlohmann::json cross_pairs_to_json(const CrossPairSet& pairs);

/// Reads and parses a JSON file. Throws Error(format) on I/O or syntax errors.
nlohmann::json read_json_file(const std::filesystem::path& path);
void write_json_file(const std::filesystem::path& path, const nlohmann::json& j);

/// Undirected DOT, vertices in label order. When parts are given, vertices
/// carry a "part" attribute and A vertices are drawn as boxes.
std::string to_dot(const SimpleGraph& graph, const Bipartition* parts = nullptr);

/// Components of G[A] as A0, A1, ... and of G[B] as B0, B1, ...
std::string to_dot(const QuotientGraph& quotient);

}  // namespace proxigraph
