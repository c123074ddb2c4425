#pragma once

// Brute-force reference implementations used only by the tests. They work
// from raw vertex/edge sets and distance tables and deliberately avoid the
// library's search routines.

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "proxigraph/graph.hpp"
#include "proxigraph/space.hpp"

namespace oracle {

using proxigraph::Bipartition;
using proxigraph::FiniteSemimetricSpace;
using proxigraph::Label;
using proxigraph::Path;
using proxigraph::Rational;
using proxigraph::SimpleGraph;
using proxigraph::VertexSet;

inline bool has_edge(const SimpleGraph& g, const Label& u, const Label& v) {
    return g.edges().contains(proxigraph::make_edge(u, v));
}

// Every sequence of at least two pairwise distinct vertices whose consecutive
// members are adjacent, found by extending over all vertex orderings.
inline std::vector<Path> simple_paths(const SimpleGraph& g) {
    const std::vector<Label> vs(g.vertices().begin(), g.vertices().end());
    std::vector<Path> out;
    Path current;
    std::vector<bool> used(vs.size(), false);
    std::function<void()> grow = [&] {
        if (current.size() >= 2) out.push_back(current);
        for (std::size_t i = 0; i < vs.size(); ++i) {
            if (used[i]) continue;
            if (!current.empty() && !has_edge(g, current.back(), vs[i])) continue;
            used[i] = true;
            current.push_back(vs[i]);
            grow();
            current.pop_back();
            used[i] = false;
        }
    };
    grow();
    return out;
}

inline std::size_t crossing_count(const Path& p, const Bipartition& parts) {
    std::size_t n = 0;
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
        const bool cross = (parts.in_a(p[i]) && parts.in_b(p[i + 1])) || (parts.in_b(p[i]) && parts.in_a(p[i + 1]));
        n += cross ? 1 : 0;
    }
    return n;
}

inline bool is_be_path(const Path& p, const Bipartition& parts) {
    for (const auto& v : p) {
        if (!parts.in_a(v) && !parts.in_b(v)) return false;
    }
    return crossing_count(p, parts) == 1;
}

inline std::vector<Path> be_paths(const SimpleGraph& g, const Bipartition& parts) {
    std::vector<Path> out;
    for (auto& p : simple_paths(g)) {
        if (is_be_path(p, parts)) out.push_back(std::move(p));
    }
    return out;
}

inline std::set<std::pair<Label, Label>> bpath(const SimpleGraph& g, const Bipartition& parts) {
    std::set<std::pair<Label, Label>> out;
    for (const auto& p : be_paths(g, parts)) {
        if (parts.in_a(p.front()) && parts.in_b(p.back())) out.emplace(p.front(), p.back());
        if (parts.in_b(p.front()) && parts.in_a(p.back())) out.emplace(p.back(), p.front());
    }
    return out;
}

// Vertices and edges covered by be-paths.
inline std::pair<VertexSet, std::set<proxigraph::Edge>> be_path_cover(const SimpleGraph& g, const Bipartition& parts) {
    VertexSet vs;
    std::set<proxigraph::Edge> es;
    for (const auto& p : be_paths(g, parts)) {
        vs.insert(p.begin(), p.end());
        for (std::size_t i = 0; i + 1 < p.size(); ++i) es.insert(proxigraph::make_edge(p[i], p[i + 1]));
    }
    return {vs, es};
}

// Union-find components, keyed by representative.
inline std::vector<VertexSet> components(const SimpleGraph& g) {
    std::map<Label, Label> parent;
    for (const auto& v : g.vertices()) parent[v] = v;
    std::function<Label(const Label&)> find = [&](const Label& v) -> Label {
        return parent[v] == v ? v : parent[v] = find(parent[v]);
    };
    for (const auto& [u, v] : g.edges()) parent[find(u)] = find(v);
    std::map<Label, VertexSet> blocks;
    for (const auto& v : g.vertices()) blocks[find(v)].insert(v);
    std::vector<VertexSet> out;
    for (auto& [root, block] : blocks) out.push_back(block);
    std::sort(out.begin(), out.end(), [](const VertexSet& x, const VertexSet& y) { return *x.begin() < *y.begin(); });
    return out;
}

inline Rational d(const FiniteSemimetricSpace& s, const Label& x, const Label& y) {
    const auto& pts = s.points();
    const auto i = static_cast<std::size_t>(std::find(pts.begin(), pts.end(), x) - pts.begin());
    const auto j = static_cast<std::size_t>(std::find(pts.begin(), pts.end(), y) - pts.begin());
    return s.table()[i][j];
}

inline bool triangle(const FiniteSemimetricSpace& s) {
    const auto& t = s.table();
    for (std::size_t a = 0; a < t.size(); ++a)
        for (std::size_t b = 0; b < t.size(); ++b)
            for (std::size_t c = 0; c < t.size(); ++c)
                if (t[a][b] > t[a][c] + t[c][b]) return false;
    return true;
}

inline bool strong_triangle(const FiniteSemimetricSpace& s) {
    const auto& t = s.table();
    for (std::size_t a = 0; a < t.size(); ++a)
        for (std::size_t b = 0; b < t.size(); ++b)
            for (std::size_t c = 0; c < t.size(); ++c)
                if (t[a][b] > std::max(t[a][c], t[c][b])) return false;
    return true;
}

inline Rational set_distance(const FiniteSemimetricSpace& s, const VertexSet& a, const VertexSet& b) {
    std::vector<Rational> values;
    for (const auto& x : a)
        for (const auto& y : b) values.push_back(d(s, x, y));
    return *std::min_element(values.begin(), values.end());
}

inline int hamming(const std::string& p, const std::string& q) {
    return static_cast<int>(std::inner_product(p.begin(), p.end(), q.begin(), 0, std::plus<>(),
                                               [](char x, char y) { return x != y ? 1 : 0; }));
}

// Labelled graph on v1..vn from an explicit edge list.
inline SimpleGraph graph(std::vector<Label> vertices, std::vector<std::pair<Label, Label>> edges) {
    return proxigraph::build_graph(vertices, edges);
}

}  // namespace oracle
