#include "proxigraph/be_paths.hpp"

#include <algorithm>

#include "proxigraph/error.hpp"

namespace proxigraph {

namespace {

void require_covering(const SimpleGraph& graph, const Bipartition& parts) {
    if (!parts.covers(graph.vertices())) {
        throw Error(ErrorCode::parts_not_covering, "A ∪ B must equal the vertex set");
    }
}

std::size_t component_index(const std::vector<VertexSet>& components, const Label& v) {
    for (std::size_t i = 0; i < components.size(); ++i) {
        if (components[i].contains(v)) return i;
    }
    throw Error(ErrorCode::unknown_vertex, "'" + v + "'");
}

// Connected components of G[A] and G[B], plus which component pairs are
// linked by a be-path.
struct ComponentLinks {
    std::vector<VertexSet> a_components;
    std::vector<VertexSet> b_components;
    std::set<std::pair<std::size_t, std::size_t>> linked;
};

ComponentLinks component_links(const SimpleGraph& graph, const Bipartition& parts) {
    require_covering(graph, parts);
    ComponentLinks out;
    out.a_components = connected_components(induced_subgraph(graph, parts.a()));
    out.b_components = connected_components(induced_subgraph(graph, parts.b()));
    for (std::size_t i = 0; i < out.a_components.size(); ++i) {
        for (std::size_t j = 0; j < out.b_components.size(); ++j) {
            VertexSet merged = out.a_components[i];
            merged.insert(out.b_components[j].begin(), out.b_components[j].end());
            if (is_connected(induced_subgraph(graph, merged))) out.linked.emplace(i, j);
        }
    }
    return out;
}

// Depth-first extension of simple paths; a prefix with two crossing edges
// can never become a be-path.
class BePathEnumerator {
public:
    BePathEnumerator(const SimpleGraph& graph, const Bipartition& parts) : graph_(graph), parts_(parts) {}

    std::vector<BePathWitness> run() {
        for (const auto& start : graph_.vertices()) {
            path_ = {start};
            on_path_ = {start};
            extend(0, 0);
        }
        return std::move(found_);
    }

private:
    void extend(int crossings, std::size_t crossing_index) {
        const Label last = path_.back();
        for (const auto& next : graph_.neighbors(last)) {
            if (on_path_.contains(next)) continue;
            const bool crosses = parts_.crosses(last, next);
            const int total = crossings + (crosses ? 1 : 0);
            if (total > 1) continue;
            const std::size_t index = crosses ? path_.size() - 1 : crossing_index;
            path_.push_back(next);
            on_path_.insert(next);
            if (total == 1) found_.push_back(BePathWitness{path_, index});
            extend(total, index);
            on_path_.erase(next);
            path_.pop_back();
        }
    }

    const SimpleGraph& graph_;
    const Bipartition& parts_;
    Path path_;
    VertexSet on_path_;
    std::vector<BePathWitness> found_;
};

}  // namespace

std::optional<BePathWitness> as_be_path(const SimpleGraph& graph, const Path& seq, const Bipartition& parts) {
    validate_path(graph, seq);
    std::optional<std::size_t> crossing;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        if (!parts.in_a(seq[i]) && !parts.in_b(seq[i])) return std::nullopt;
        if (i + 1 < seq.size() && parts.crosses(seq[i], seq[i + 1])) {
            if (crossing) return std::nullopt;
            crossing = i;
        }
    }
    if (!crossing) return std::nullopt;
    return BePathWitness{seq, *crossing};
}

std::vector<VertexSet> one_sided_components(const SimpleGraph& graph, const Bipartition& parts) {
    std::vector<VertexSet> out;
    for (auto& block : connected_components(graph)) {
        const bool meets_a = std::any_of(block.begin(), block.end(), [&](const Label& v) { return parts.in_a(v); });
        const bool meets_b = std::any_of(block.begin(), block.end(), [&](const Label& v) { return parts.in_b(v); });
        if (!meets_a || !meets_b) out.push_back(std::move(block));
    }
    return out;
}

bool is_path_bipartite(const SimpleGraph& graph, const Bipartition& parts) {
    return parts.covers(graph.vertices()) && one_sided_components(graph, parts).empty();
}

CrossPairSet bpath_pairs(const SimpleGraph& graph, const Bipartition& parts) {
    const ComponentLinks links = component_links(graph, parts);
    CrossPairSet out;
    for (const auto& [i, j] : links.linked) {
        for (const auto& a : links.a_components[i]) {
            for (const auto& b : links.b_components[j]) out.emplace(a, b);
        }
    }
    return out;
}

std::optional<BePathWitness> be_path_witness(const SimpleGraph& graph, const Bipartition& parts, const Label& a,
                                             const Label& b) {
    if (!parts.in_a(a)) throw Error(ErrorCode::wrong_side, "'" + a + "' is not in A");
    if (!parts.in_b(b)) throw Error(ErrorCode::wrong_side, "'" + b + "' is not in B");
    require_covering(graph, parts);

    const SimpleGraph graph_a = induced_subgraph(graph, parts.a());
    const SimpleGraph graph_b = induced_subgraph(graph, parts.b());
    const auto a_components = connected_components(graph_a);
    const auto b_components = connected_components(graph_b);
    const VertexSet& a_block = a_components[component_index(a_components, a)];
    const VertexSet& b_block = b_components[component_index(b_components, b)];

    // Smallest cross edge (a0, b0) joining the two blocks.
    std::optional<PointPair> bridge;
    for (const auto& a0 : a_block) {
        for (const auto& b0 : graph.neighbors(a0)) {
            if (b_block.contains(b0)) {
                bridge = PointPair{a0, b0};
                break;
            }
        }
        if (bridge) break;
    }
    if (!bridge) return std::nullopt;

    Path path = a == bridge->first ? Path{a} : *find_path(graph_a, a, bridge->first);
    const std::size_t crossing_index = path.size() - 1;
    const Path tail = bridge->second == b ? Path{b} : *find_path(graph_b, bridge->second, b);
    path.insert(path.end(), tail.begin(), tail.end());
    return BePathWitness{std::move(path), crossing_index};
}

std::vector<BePathWitness> enumerate_be_paths(const SimpleGraph& graph, const Bipartition& parts,
                                              std::size_t max_vertices) {
    if (graph.order() > max_vertices) {
        throw Error(ErrorCode::size_exceeded, std::to_string(graph.order()) + " vertices exceed the enumeration bound " +
                                                  std::to_string(max_vertices));
    }
    require_covering(graph, parts);
    auto found = BePathEnumerator(graph, parts).run();
    std::sort(found.begin(), found.end());
    return found;
}

SimpleGraph union_of_be_paths(const SimpleGraph& graph, const Bipartition& parts, std::size_t max_vertices) {
    VertexSet vertices;
    EdgeSet edges;
    for (const auto& witness : enumerate_be_paths(graph, parts, max_vertices)) {
        const auto& p = witness.path;
        vertices.insert(p.begin(), p.end());
        for (std::size_t i = 1; i < p.size(); ++i) edges.insert(make_edge(p[i - 1], p[i]));
    }
    return SimpleGraph(std::move(vertices), std::move(edges));
}

bool is_path_complete(const SimpleGraph& graph, const Bipartition& parts) {
    return bpath_pairs(graph, parts).size() == parts.a().size() * parts.b().size();
}

QuotientGraph quotient_graph(const SimpleGraph& graph, const Bipartition& parts) {
    const CrossPairSet pairs = bpath_pairs(graph, parts);
    QuotientGraph q;
    q.a_components = connected_components(induced_subgraph(graph, parts.a()));
    q.b_components = connected_components(induced_subgraph(graph, parts.b()));
    for (const auto& [a, b] : pairs) {
        q.edges.emplace(component_index(q.a_components, a), component_index(q.b_components, b));
    }
    return q;
}

bool is_complete_bipartite(const QuotientGraph& quotient) {
    return quotient.edges.size() == quotient.a_components.size() * quotient.b_components.size();
}

std::optional<Bipartition> find_path_bipartite_partition(const SimpleGraph& graph) {
    if (graph.order() == 0 || !isolated_vertices(graph).empty()) return std::nullopt;
    VertexSet a;
    for (const auto& block : connected_components(graph)) a.insert(*block.begin());
    VertexSet b;
    for (const auto& v : graph.vertices()) {
        if (!a.contains(v)) b.insert(v);
    }
    return Bipartition(std::move(a), std::move(b));
}

}  // namespace proxigraph
