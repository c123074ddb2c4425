#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace proxigraph {

/// Vertex identity is the label text; all tie-breaking uses lexicographic
/// label order.
using Label = std::string;
using VertexSet = std::set<Label>;

/// Unordered edge stored as (smaller, larger).
using Edge = std::pair<Label, Label>;
using EdgeSet = std::set<Edge>;

/// A simple path as its vertex sequence (u0, ..., uk), k >= 1.
using Path = std::vector<Label>;

Edge make_edge(const Label& u, const Label& v);

/// Labels must be nonempty and free of whitespace.
bool is_valid_label(const Label& label);

/// Finite simple graph. Immutable once built; equality is structural.
class SimpleGraph {
public:
    SimpleGraph() = default;

    /// Validates loops and endpoints. Edges must already be normalized.
    SimpleGraph(VertexSet vertices, EdgeSet edges);

    const VertexSet& vertices() const noexcept { return vertices_; }
    const EdgeSet& edges() const noexcept { return edges_; }
    std::size_t order() const noexcept { return vertices_.size(); }
    std::size_t size() const noexcept { return edges_.size(); }

    bool has_vertex(const Label& v) const { return vertices_.contains(v); }
    bool adjacent(const Label& u, const Label& v) const { return u != v && edges_.contains(make_edge(u, v)); }

    /// Neighbors in label order. Throws unknown_vertex.
    const std::vector<Label>& neighbors(const Label& v) const;
    std::size_t degree(const Label& v) const { return neighbors(v).size(); }

    bool operator==(const SimpleGraph& other) const {
        return vertices_ == other.vertices_ && edges_ == other.edges_;
    }

private:
    VertexSet vertices_;
    EdgeSet edges_;
    std::map<Label, std::vector<Label>> adjacency_;
};

/// Ordered pair (A, B) of disjoint nonempty vertex sets.
class Bipartition {
public:
    Bipartition(VertexSet a, VertexSet b);

    const VertexSet& a() const noexcept { return a_; }
    const VertexSet& b() const noexcept { return b_; }

    bool in_a(const Label& v) const { return a_.contains(v); }
    bool in_b(const Label& v) const { return b_.contains(v); }

    VertexSet all() const;
    bool covers(const VertexSet& vertices) const;

    /// True when the edge meets both parts.
    bool crosses(const Label& u, const Label& v) const {
        return (in_a(u) && in_b(v)) || (in_b(u) && in_a(v));
    }

    /// Swaps the roles of the two parts.
    Bipartition swapped() const { return Bipartition(b_, a_); }

    bool operator==(const Bipartition&) const = default;

private:
    VertexSet a_;
    VertexSet b_;
};

SimpleGraph build_graph(const std::vector<Label>& vertices,
                        const std::vector<std::pair<Label, Label>>& edges);

SimpleGraph induced_subgraph(const SimpleGraph& graph, const VertexSet& subset);

/// Keeps exactly the edges meeting both parts, on vertex set A ∪ B.
SimpleGraph induced_bipartite_subgraph(const SimpleGraph& graph, const Bipartition& parts);

/// Components ordered by their smallest label; each block is sorted.
std::vector<VertexSet> connected_components(const SimpleGraph& graph);

bool is_connected(const SimpleGraph& graph);

VertexSet isolated_vertices(const SimpleGraph& graph);

/// G' : drops isolated vertices, keeps every edge. Throws empty_graph.
SimpleGraph prune_isolated(const SimpleGraph& graph);

/// Breadth-first shortest path, neighbours expanded in label order.
std::optional<Path> find_path(const SimpleGraph& graph, const Label& from, const Label& to);

SimpleGraph graph_union(std::span<const SimpleGraph> graphs);

/// True when seq is a simple path of graph with at least two vertices.
bool is_path_in(const SimpleGraph& graph, const Path& seq);

/// Throws not_a_path naming the first violation.
void validate_path(const SimpleGraph& graph, const Path& seq);

/// The path itself as a graph.
SimpleGraph path_graph(const Path& seq);

/// Every pair of distinct vertices adjacent.
bool is_complete(const SimpleGraph& graph);

}  // namespace proxigraph
