#pragma once

#include "proxigraph/graph.hpp"
#include "proxigraph/space.hpp"

namespace proxigraph {

/// A bipartite graph together with parts and a space for which its edges are
/// exactly the best proximity pairs.
struct ProximinalGraphCertificate {
    SimpleGraph graph;
    Bipartition parts;
    FiniteSemimetricSpace space;
};

/// Bipartite graph on A ∪ B whose edges are the cross pairs at distance
/// dist(A, B). Throws parts_not_covering when A ∪ B is not the point set.
SimpleGraph build_proximinal_graph(const FiniteSemimetricSpace& space, const Bipartition& parts);

/// Throws vertex_mismatch when V(graph) differs from the point set.
bool verify_proximinal_graph(const SimpleGraph& graph, const Bipartition& parts, const FiniteSemimetricSpace& space);

/// No edge has both ends in the same part and A ∪ B = V(graph).
bool is_bipartite_with_parts(const SimpleGraph& graph, const Bipartition& parts);

/// d = 0 on the diagonal, 1 on edges, 2 on every other pair. Always a
/// metric since 2 <= 1 + 1.
FiniteSemimetricSpace unit_edge_metric(const SimpleGraph& graph);

/// unit_edge_metric for a nonempty graph that is bipartite with the given parts.
FiniteSemimetricSpace witness_proximinal_metric(const SimpleGraph& graph, const Bipartition& parts);

}  // namespace proxigraph
