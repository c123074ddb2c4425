#include "proxigraph/graph.hpp"

#include <algorithm>
#include <cctype>
#include <deque>

#include "proxigraph/error.hpp"

namespace proxigraph {

Edge make_edge(const Label& u, const Label& v) {
    return u < v ? Edge{u, v} : Edge{v, u};
}

bool is_valid_label(const Label& label) {
    return !label.empty() && std::none_of(label.begin(), label.end(), [](unsigned char c) {
        return std::isspace(c) != 0;
    });
}

SimpleGraph::SimpleGraph(VertexSet vertices, EdgeSet edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
    for (const auto& v : vertices_) adjacency_[v];
    for (const auto& [u, v] : edges_) {
        if (u == v) throw Error(ErrorCode::loop_edge, "'" + u + "'");
        if (u > v) throw Error(ErrorCode::format, "edge (" + u + "," + v + ") not normalized");
        if (!vertices_.contains(u)) throw Error(ErrorCode::unknown_endpoint, "'" + u + "'");
        if (!vertices_.contains(v)) throw Error(ErrorCode::unknown_endpoint, "'" + v + "'");
        adjacency_[u].push_back(v);
        adjacency_[v].push_back(u);
    }
    for (auto& [v, list] : adjacency_) std::sort(list.begin(), list.end());
}

const std::vector<Label>& SimpleGraph::neighbors(const Label& v) const {
    auto it = adjacency_.find(v);
    if (it == adjacency_.end()) throw Error(ErrorCode::unknown_vertex, "'" + v + "'");
    return it->second;
}

Bipartition::Bipartition(VertexSet a, VertexSet b) : a_(std::move(a)), b_(std::move(b)) {
    if (a_.empty()) throw Error(ErrorCode::empty_part, "part A is empty");
    if (b_.empty()) throw Error(ErrorCode::empty_part, "part B is empty");
    for (const auto& v : a_) {
        if (b_.contains(v)) throw Error(ErrorCode::parts_overlap, "'" + v + "' lies in both parts");
    }
}

VertexSet Bipartition::all() const {
    VertexSet out = a_;
    out.insert(b_.begin(), b_.end());
    return out;
}

bool Bipartition::covers(const VertexSet& vertices) const {
    return a_.size() + b_.size() == vertices.size() &&
           std::all_of(vertices.begin(), vertices.end(),
                       [&](const Label& v) { return in_a(v) || in_b(v); });
}

SimpleGraph build_graph(const std::vector<Label>& vertices,
                        const std::vector<std::pair<Label, Label>>& edges) {
    VertexSet vs;
    for (const auto& v : vertices) {
        if (!is_valid_label(v)) throw Error(ErrorCode::invalid_label, "'" + v + "'");
        if (!vs.insert(v).second) throw Error(ErrorCode::duplicate_vertex, "'" + v + "'");
    }
    EdgeSet es;
    for (const auto& [u, v] : edges) {
        if (u == v) throw Error(ErrorCode::loop_edge, "'" + u + "'");
        if (!vs.contains(u)) throw Error(ErrorCode::unknown_endpoint, "'" + u + "'");
        if (!vs.contains(v)) throw Error(ErrorCode::unknown_endpoint, "'" + v + "'");
        es.insert(make_edge(u, v));
    }
    return SimpleGraph(std::move(vs), std::move(es));
}

SimpleGraph induced_subgraph(const SimpleGraph& graph, const VertexSet& subset) {
    if (subset.empty()) throw Error(ErrorCode::empty_subset, "induced subgraph needs a nonempty vertex set");
    for (const auto& v : subset) {
        if (!graph.has_vertex(v)) throw Error(ErrorCode::not_subset, "'" + v + "' is not a vertex");
    }
    EdgeSet es;
    for (const auto& e : graph.edges()) {
        if (subset.contains(e.first) && subset.contains(e.second)) es.insert(e);
    }
    return SimpleGraph(subset, std::move(es));
}

SimpleGraph induced_bipartite_subgraph(const SimpleGraph& graph, const Bipartition& parts) {
    VertexSet vs = parts.all();
    for (const auto& v : vs) {
        if (!graph.has_vertex(v)) throw Error(ErrorCode::parts_not_subset, "'" + v + "' is not a vertex");
    }
    EdgeSet es;
    for (const auto& e : graph.edges()) {
        if (parts.crosses(e.first, e.second)) es.insert(e);
    }
    return SimpleGraph(std::move(vs), std::move(es));
}

std::vector<VertexSet> connected_components(const SimpleGraph& graph) {
    std::vector<VertexSet> out;
    VertexSet seen;
    for (const auto& start : graph.vertices()) {
        if (seen.contains(start)) continue;
        VertexSet block{start};
        seen.insert(start);
        std::deque<Label> queue{start};
        while (!queue.empty()) {
            const Label v = queue.front();
            queue.pop_front();
            for (const auto& w : graph.neighbors(v)) {
                if (seen.insert(w).second) {
                    block.insert(w);
                    queue.push_back(w);
                }
            }
        }
        out.push_back(std::move(block));
    }
    return out;
}

bool is_connected(const SimpleGraph& graph) {
    return connected_components(graph).size() == 1;
}

VertexSet isolated_vertices(const SimpleGraph& graph) {
    VertexSet out;
    for (const auto& v : graph.vertices()) {
        if (graph.degree(v) == 0) out.insert(v);
    }
    return out;
}

SimpleGraph prune_isolated(const SimpleGraph& graph) {
    if (graph.edges().empty()) throw Error(ErrorCode::empty_graph, "G' is undefined for a graph without edges");
    VertexSet vs;
    for (const auto& [u, v] : graph.edges()) {
        vs.insert(u);
        vs.insert(v);
    }
    return SimpleGraph(std::move(vs), graph.edges());
}

std::optional<Path> find_path(const SimpleGraph& graph, const Label& from, const Label& to) {
    if (!graph.has_vertex(from)) throw Error(ErrorCode::unknown_vertex, "'" + from + "'");
    if (!graph.has_vertex(to)) throw Error(ErrorCode::unknown_vertex, "'" + to + "'");
    if (from == to) throw Error(ErrorCode::equal_endpoints, "'" + from + "'");

    std::map<Label, Label> parent;
    parent.emplace(from, from);
    std::deque<Label> queue{from};
    while (!queue.empty()) {
        const Label v = queue.front();
        queue.pop_front();
        if (v == to) break;
        for (const auto& w : graph.neighbors(v)) {
            if (parent.emplace(w, v).second) queue.push_back(w);
        }
    }
    if (!parent.contains(to)) return std::nullopt;

    Path path{to};
    while (path.back() != from) path.push_back(parent.at(path.back()));
    std::reverse(path.begin(), path.end());
    return path;
}

SimpleGraph graph_union(std::span<const SimpleGraph> graphs) {
    if (graphs.empty()) throw Error(ErrorCode::empty_list, "graph union of an empty family");
    VertexSet vs;
    EdgeSet es;
    for (const auto& g : graphs) {
        vs.insert(g.vertices().begin(), g.vertices().end());
        es.insert(g.edges().begin(), g.edges().end());
    }
    return SimpleGraph(std::move(vs), std::move(es));
}

void validate_path(const SimpleGraph& graph, const Path& seq) {
    if (seq.size() < 2) throw Error(ErrorCode::not_a_path, "a path needs at least two vertices");
    VertexSet seen;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        if (!graph.has_vertex(seq[i])) throw Error(ErrorCode::not_a_path, "'" + seq[i] + "' is not a vertex");
        if (!seen.insert(seq[i]).second) throw Error(ErrorCode::not_a_path, "vertex '" + seq[i] + "' repeats");
        if (i > 0 && !graph.adjacent(seq[i - 1], seq[i])) {
            throw Error(ErrorCode::not_a_path, "'" + seq[i - 1] + "' and '" + seq[i] + "' are not adjacent");
        }
    }
}

bool is_path_in(const SimpleGraph& graph, const Path& seq) {
    try {
        validate_path(graph, seq);
        return true;
    } catch (const Error&) {
        return false;
    }
}

SimpleGraph path_graph(const Path& seq) {
    VertexSet vs(seq.begin(), seq.end());
    EdgeSet es;
    for (std::size_t i = 1; i < seq.size(); ++i) es.insert(make_edge(seq[i - 1], seq[i]));
    return SimpleGraph(std::move(vs), std::move(es));
}

bool is_complete(const SimpleGraph& graph) {
    const auto n = graph.order();
    return graph.size() == n * (n - (n > 0 ? 1 : 0)) / 2;
}

}  // namespace proxigraph
