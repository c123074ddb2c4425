#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <set>
#include <vector>

#include "proxigraph/graph.hpp"
#include "proxigraph/space.hpp"

namespace proxigraph {

/// A simple path inside A ∪ B with exactly one edge meeting both parts. The
/// crossing edge is (path[crossing_index], path[crossing_index + 1]).
struct BePathWitness {
    Path path;
    std::size_t crossing_index = 0;

    Edge crossing_edge() const { return make_edge(path[crossing_index], path[crossing_index + 1]); }

    auto operator<=>(const BePathWitness&) const = default;
};

/// Set of (a, b) with a in A and b in B.
using CrossPairSet = std::set<PointPair>;

inline constexpr std::size_t kDefaultEnumerationBound = 10;

/// Witness when seq qualifies, nullopt otherwise. Throws not_a_path when seq
/// is not a simple path of graph.
std::optional<BePathWitness> as_be_path(const SimpleGraph& graph, const Path& seq, const Bipartition& parts);

/// V(G) = A ∪ B and every connected component meets both parts.
bool is_path_bipartite(const SimpleGraph& graph, const Bipartition& parts);

/// Components of graph that miss A or miss B, in component order.
std::vector<VertexSet> one_sided_components(const SimpleGraph& graph, const Bipartition& parts);

/// Pairs (a, b) joined by a be-path, decided per pair of components of G[A]
/// and G[B]: the pair qualifies iff the graph induced on their union is
/// connected. Throws parts_not_covering.
CrossPairSet bpath_pairs(const SimpleGraph& graph, const Bipartition& parts);

/// Canonical be-path from a to b: shortest path in G[A] to the smallest
/// qualifying cross edge, that edge, then shortest path in G[B]. Throws
/// wrong_side when a is not in A or b is not in B.
std::optional<BePathWitness> be_path_witness(const SimpleGraph& graph, const Bipartition& parts, const Label& a,
                                             const Label& b);

/// Every be-path of graph by exhaustive depth-first extension. Reversed
/// sequences are distinct entries. Throws size_exceeded above max_vertices.
std::vector<BePathWitness> enumerate_be_paths(const SimpleGraph& graph, const Bipartition& parts,
                                              std::size_t max_vertices = kDefaultEnumerationBound);

/// Union of all enumerated be-paths; the vertexless graph when there are none.
SimpleGraph union_of_be_paths(const SimpleGraph& graph, const Bipartition& parts,
                              std::size_t max_vertices = kDefaultEnumerationBound);

/// bpath_pairs covers all of A x B.
bool is_path_complete(const SimpleGraph& graph, const Bipartition& parts);

/// Bipartite graph on the components of G[A] and G[B].
struct QuotientGraph {
    std::vector<VertexSet> a_components;
    std::vector<VertexSet> b_components;
    /// (index into a_components, index into b_components)
    std::set<std::pair<std::size_t, std::size_t>> edges;

    const Label& a_representative(std::size_t i) const { return *a_components.at(i).begin(); }
    const Label& b_representative(std::size_t j) const { return *b_components.at(j).begin(); }
};

QuotientGraph quotient_graph(const SimpleGraph& graph, const Bipartition& parts);

bool is_complete_bipartite(const QuotientGraph& quotient);

/// A = smallest vertex of each component, B = the rest. Nullopt when the
/// graph has no vertices or an isolated vertex.
std::optional<Bipartition> find_path_bipartite_partition(const SimpleGraph& graph);

}  // namespace proxigraph
