#include "proxigraph/path_proximinal.hpp"

#include <algorithm>
#include <deque>

#include "proxigraph/be_paths.hpp"
#include "proxigraph/error.hpp"
#include "proxigraph/proximinal.hpp"

namespace proxigraph {

namespace {

// Points of `part` that reach `targets` inside the subgraph induced on `part`.
VertexSet reaching(const SimpleGraph& induced, const VertexSet& targets) {
    VertexSet seen(targets.begin(), targets.end());
    std::deque<Label> queue(targets.begin(), targets.end());
    while (!queue.empty()) {
        const Label v = queue.front();
        queue.pop_front();
        for (const auto& w : induced.neighbors(v)) {
            if (seen.insert(w).second) queue.push_back(w);
        }
    }
    return seen;
}

bool all_reach(const SimpleGraph& threshold, const VertexSet& part, const VertexSet& targets) {
    const VertexSet reached = reaching(induced_subgraph(threshold, part), targets);
    return std::all_of(part.begin(), part.end(), [&](const Label& p) { return reached.contains(p); });
}

}  // namespace

SimpleGraph build_threshold_graph(const FiniteSemimetricSpace& space, const Bipartition& parts) {
    if (!parts.covers(space.point_set())) {
        throw Error(ErrorCode::parts_not_covering, "A ∪ B must equal the point set");
    }
    const Rational dist = set_distance(space, parts.a(), parts.b());
    EdgeSet edges;
    const auto& points = space.points();
    for (std::size_t i = 0; i < points.size(); ++i) {
        for (std::size_t j = i + 1; j < points.size(); ++j) {
            const Rational& d = space.distance(i, j);
            if (d > 0 && d <= dist) edges.insert(make_edge(points[i], points[j]));
        }
    }
    return SimpleGraph(space.point_set(), std::move(edges));
}

bool verify_path_proximinal(const SimpleGraph& graph, const Bipartition& parts, const FiniteSemimetricSpace& space) {
    if (graph.vertices() != space.point_set()) {
        throw Error(ErrorCode::vertex_mismatch, "graph vertices differ from the space's points");
    }
    if (!parts.covers(graph.vertices())) return false;
    if (!is_proximinal(space, parts.a()) || !is_proximinal(space, parts.b())) return false;
    return graph == build_threshold_graph(space, parts) && is_path_bipartite(graph, parts);
}

bool verify_certificate(const PathProximinalCertificate& certificate) {
    return verify_path_proximinal(certificate.graph, certificate.parts, certificate.space);
}

bool check_structural_conditions(const FiniteSemimetricSpace& space, const Bipartition& parts) {
    const SimpleGraph threshold = build_threshold_graph(space, parts);
    const ProximityReport report = proximity_report(space, parts);
    return all_reach(threshold, parts.a(), report.a0) && all_reach(threshold, parts.b(), report.b0);
}

FiniteSemimetricSpace witness_metric_for_path_bipartite(const SimpleGraph& graph, const Bipartition& parts) {
    if (!is_path_bipartite(graph, parts)) {
        throw Error(ErrorCode::not_path_bipartite, "graph is not path-bipartite for the given parts");
    }
    return unit_edge_metric(graph);
}

std::optional<PathProximinalCertificate> is_path_proximinal_graph(const SimpleGraph& graph) {
    auto parts = find_path_bipartite_partition(graph);
    if (!parts) return std::nullopt;
    PathProximinalCertificate cert{graph, *parts, witness_metric_for_path_bipartite(graph, *parts)};
    if (!verify_certificate(cert)) return std::nullopt;
    return cert;
}

bool parts_fully_proximal(const SimpleGraph& graph, const Bipartition& parts, const FiniteSemimetricSpace& space) {
    if (!verify_proximinal_graph(graph, parts, space)) {
        throw Error(ErrorCode::not_a_proximinal_graph, "graph is not proximinal for the given parts and space");
    }
    const ProximityReport report = proximity_report(space, parts);
    return report.a0 == parts.a() && report.b0 == parts.b();
}

bool check_within_part_separation(const FiniteSemimetricSpace& space, const Bipartition& parts) {
    if (!parts.covers(space.point_set())) {
        throw Error(ErrorCode::parts_not_covering, "A ∪ B must equal the point set");
    }
    const Rational dist = set_distance(space, parts.a(), parts.b());
    for (const VertexSet* part : {&parts.a(), &parts.b()}) {
        for (auto i = part->begin(); i != part->end(); ++i) {
            for (auto j = std::next(i); j != part->end(); ++j) {
                if (space.distance(*i, *j) <= dist) return false;
            }
        }
    }
    return true;
}

bool all_degrees_one(const SimpleGraph& graph) {
    return graph.order() > 0 && std::all_of(graph.vertices().begin(), graph.vertices().end(),
                                            [&](const Label& v) { return graph.degree(v) == 1; });
}

std::optional<PathProximinalCertificate> witness_ultrametric(const SimpleGraph& graph) {
    if (!all_degrees_one(graph)) return std::nullopt;
    VertexSet a;
    VertexSet b;
    for (const auto& [u, v] : graph.edges()) {
        a.insert(u);
        b.insert(v);
    }
    return PathProximinalCertificate{graph, Bipartition(std::move(a), std::move(b)), unit_edge_metric(graph)};
}

bool components_are_pairs(const SimpleGraph& graph) {
    const auto blocks = connected_components(graph);
    return !blocks.empty() &&
           std::all_of(blocks.begin(), blocks.end(), [](const VertexSet& block) { return block.size() == 2; });
}

UltrametricConnectivity ultrametric_connectivity(const SimpleGraph& graph, const Bipartition& parts,
                                                 const FiniteSemimetricSpace& space) {
    if (classify(space) != SpaceClass::ultrametric) {
        throw Error(ErrorCode::precondition_violation, "space is not ultrametric");
    }
    if (!verify_path_proximinal(graph, parts, space)) {
        throw Error(ErrorCode::precondition_violation, "graph is not path-proximinal for the space");
    }
    if (!is_bipartite_with_parts(graph, parts)) {
        throw Error(ErrorCode::precondition_violation, "graph is not bipartite with the given parts");
    }
    UltrametricConnectivity out;
    out.connected = is_connected(graph);
    out.complete = is_complete(graph);
    out.cross_complete = induced_bipartite_subgraph(graph, parts).size() == parts.a().size() * parts.b().size();
    out.path_complete = is_path_complete(graph, parts);
    return out;
}

}  // namespace proxigraph
