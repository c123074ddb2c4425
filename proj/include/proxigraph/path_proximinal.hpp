#pragma once

#include <optional>

#include "proxigraph/graph.hpp"
#include "proxigraph/space.hpp"

namespace proxigraph {

/// Graph, parts and space for which edges are exactly the distinct pairs at
/// distance at most dist(A, B), and the graph is path-bipartite of (A, B).
struct PathProximinalCertificate {
    SimpleGraph graph;
    Bipartition parts;
    FiniteSemimetricSpace space;
};

/// Graph on all points with {x, y} an edge iff 0 < d(x, y) <= dist(A, B).
/// Within-part edges are kept. Throws parts_not_covering.
SimpleGraph build_threshold_graph(const FiniteSemimetricSpace& space, const Bipartition& parts);

/// Recomputes the threshold graph and compares structurally; also requires
/// path-bipartiteness and proximinal parts. Throws vertex_mismatch.
bool verify_path_proximinal(const SimpleGraph& graph, const Bipartition& parts, const FiniteSemimetricSpace& space);

bool verify_certificate(const PathProximinalCertificate& certificate);

/// Every point of A outside A0 reaches A0 inside the threshold graph's G[A],
/// and likewise for B.
bool check_structural_conditions(const FiniteSemimetricSpace& space, const Bipartition& parts);

/// Metric with d = 1 on edges and 2 elsewhere. Throws not_path_bipartite.
FiniteSemimetricSpace witness_metric_for_path_bipartite(const SimpleGraph& graph, const Bipartition& parts);

/// Certificate whenever the graph has vertices and none is isolated.
std::optional<PathProximinalCertificate> is_path_proximinal_graph(const SimpleGraph& graph);

/// For a proximinal graph of (parts, space): A0 = A and B0 = B. Throws
/// not_a_proximinal_graph when the graph is not proximinal for the space.
bool parts_fully_proximal(const SimpleGraph& graph, const Bipartition& parts, const FiniteSemimetricSpace& space);

/// Distinct points of the same part lie strictly farther apart than dist(A, B).
bool check_within_part_separation(const FiniteSemimetricSpace& space, const Bipartition& parts);

/// Every vertex has exactly one neighbour. False for a vertexless graph.
bool all_degrees_one(const SimpleGraph& graph);

/// Perfect-matching ultrametric certificate: each edge puts its smaller
/// label in A; d = 1 on edges, 2 elsewhere. Nullopt unless all_degrees_one.
std::optional<PathProximinalCertificate> witness_ultrametric(const SimpleGraph& graph);

/// Every connected component has exactly two vertices.
bool components_are_pairs(const SimpleGraph& graph);

/// Four statements about an ultrametric path-proximinal bipartite graph,
/// evaluated independently.
struct UltrametricConnectivity {
    bool connected = false;
    bool complete = false;
    bool cross_complete = false;
    bool path_complete = false;

    bool agree() const {
        return connected == complete && complete == cross_complete && cross_complete == path_complete;
    }
};

/// Throws precondition_violation unless the space is ultrametric, the graph
/// verifies path-proximinal and is bipartite with the given parts.
UltrametricConnectivity ultrametric_connectivity(const SimpleGraph& graph, const Bipartition& parts,
                                                 const FiniteSemimetricSpace& space);

}  // namespace proxigraph
