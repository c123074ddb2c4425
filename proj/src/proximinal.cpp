#include "proxigraph/proximinal.hpp"

#include <algorithm>

#include "proxigraph/error.hpp"

namespace proxigraph {

namespace {

void require_covering(const FiniteSemimetricSpace& space, const Bipartition& parts) {
    if (!parts.covers(space.point_set())) {
        throw Error(ErrorCode::parts_not_covering, "A ∪ B must equal the point set");
    }
}

}  // namespace

FiniteSemimetricSpace unit_edge_metric(const SimpleGraph& graph) {
    std::vector<Label> points(graph.vertices().begin(), graph.vertices().end());
    return space_from_function(std::move(points), [&](const Label& p, const Label& q) {
        return graph.adjacent(p, q) ? Rational(1) : Rational(2);
    });
}

SimpleGraph build_proximinal_graph(const FiniteSemimetricSpace& space, const Bipartition& parts) {
    require_covering(space, parts);
    const Rational dist = set_distance(space, parts.a(), parts.b());
    EdgeSet edges;
    for (const auto& a : parts.a()) {
        for (const auto& b : parts.b()) {
            if (space.distance(a, b) == dist) edges.insert(make_edge(a, b));
        }
    }
    return SimpleGraph(space.point_set(), std::move(edges));
}

bool is_bipartite_with_parts(const SimpleGraph& graph, const Bipartition& parts) {
    if (!parts.covers(graph.vertices())) return false;
    return std::all_of(graph.edges().begin(), graph.edges().end(),
                       [&](const Edge& e) { return parts.crosses(e.first, e.second); });
}

bool verify_proximinal_graph(const SimpleGraph& graph, const Bipartition& parts, const FiniteSemimetricSpace& space) {
    if (graph.vertices() != space.point_set()) {
        throw Error(ErrorCode::vertex_mismatch, "graph vertices differ from the space's points");
    }
    if (!is_bipartite_with_parts(graph, parts)) return false;
    if (!is_proximinal(space, parts.a()) || !is_proximinal(space, parts.b())) return false;
    const Rational dist = set_distance(space, parts.a(), parts.b());
    for (const auto& a : parts.a()) {
        for (const auto& b : parts.b()) {
            if (graph.adjacent(a, b) != (space.distance(a, b) == dist)) return false;
        }
    }
    return true;
}

FiniteSemimetricSpace witness_proximinal_metric(const SimpleGraph& graph, const Bipartition& parts) {
    if (graph.edges().empty()) throw Error(ErrorCode::empty_graph, "a finite empty graph is never proximinal");
    if (!is_bipartite_with_parts(graph, parts)) {
        throw Error(ErrorCode::not_bipartite_with_parts, "graph is not bipartite with the given parts");
    }
    return unit_edge_metric(graph);
}

}  // namespace proxigraph
