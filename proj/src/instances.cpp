#include "proxigraph/instances.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "proxigraph/error.hpp"

namespace proxigraph {

namespace {

int hamming(const std::string& p, const std::string& q) {
    int d = 0;
    for (std::size_t i = 0; i < p.size(); ++i) d += p[i] != q[i] ? 1 : 0;
    return d;
}

std::string bits_of(std::uint64_t value, int n) {
    std::string out(static_cast<std::size_t>(n), '0');
    for (int i = 0; i < n; ++i) {
        if (value & (std::uint64_t{1} << (n - 1 - i))) out[static_cast<std::size_t>(i)] = '1';
    }
    return out;
}

std::vector<Label> numbered(const char* prefix, int n) {
    std::vector<Label> out;
    out.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) out.push_back(prefix + std::to_string(i));
    return out;
}

void split_block(std::vector<std::size_t> block, const Rational& level, std::mt19937_64& rng,
                 std::vector<std::vector<Rational>>& table) {
    if (block.size() < 2) return;
    std::shuffle(block.begin(), block.end(), rng);
    const std::size_t max_parts = std::min<std::size_t>(block.size(), 3);
    const std::size_t parts = std::uniform_int_distribution<std::size_t>(2, max_parts)(rng);

    std::vector<std::size_t> cuts(block.size() - 1);
    std::iota(cuts.begin(), cuts.end(), 1);
    std::shuffle(cuts.begin(), cuts.end(), rng);
    cuts.resize(parts - 1);
    std::sort(cuts.begin(), cuts.end());
    cuts.push_back(block.size());

    std::vector<std::vector<std::size_t>> children;
    std::size_t begin = 0;
    for (auto end : cuts) {
        children.emplace_back(block.begin() + static_cast<std::ptrdiff_t>(begin),
                              block.begin() + static_cast<std::ptrdiff_t>(end));
        begin = end;
    }
    for (std::size_t i = 0; i < children.size(); ++i) {
        for (std::size_t j = i + 1; j < children.size(); ++j) {
            for (auto p : children[i]) {
                for (auto q : children[j]) table[p][q] = table[q][p] = level;
            }
        }
    }
    for (auto& child : children) {
        const Rational step(std::uniform_int_distribution<int>(1, 2)(rng), 2);
        split_block(std::move(child), level - step, rng, table);
    }
}

}  // namespace

FiniteSemimetricSpace hypercube_space(int n) {
    if (n < 1 || n > kMaxHypercubeDimension) {
        throw Error(ErrorCode::out_of_range, "hypercube dimension " + std::to_string(n) + " not in [1, 10]");
    }
    const std::uint64_t count = std::uint64_t{1} << n;
    std::vector<Label> points;
    points.reserve(count);
    for (std::uint64_t v = 0; v < count; ++v) points.push_back(bits_of(v, n));
    return space_from_function(std::move(points),
                               [](const Label& p, const Label& q) { return Rational(hamming(p, q)); });
}

const std::map<Label, std::string>& hypercube_example_coordinates() {
    static const std::map<Label, std::string> coords = {
        {"x1", "1000"},  {"x2", "0100"},  {"x3", "0010"},  {"x4", "0001"},
        {"x5", "1010"},  {"x6", "1100"},  {"x7", "1001"},  {"x8", "0000"},
        {"x9", "0110"},  {"x10", "0101"}, {"x11", "0011"}, {"x12", "0111"},
        {"x13", "1101"}, {"x14", "1110"}, {"x15", "1011"}, {"x16", "1111"},
    };
    return coords;
}

GraphInstance hypercube_example_graph() {
    const std::vector<std::pair<int, int>> listed = {
        {1, 5},  {1, 6},   {1, 7},   {1, 8},   {2, 6},   {2, 9},   {2, 10},  {3, 5},   {3, 8},
        {3, 9},  {3, 11},  {4, 7},   {4, 8},   {4, 10},  {5, 14},  {5, 15},  {6, 13},  {6, 14},
        {7, 15}, {9, 12},  {10, 12}, {11, 12}, {13, 16}, {14, 16}, {15, 16},
    };
    std::vector<std::pair<Label, Label>> edges;
    for (auto [u, v] : listed) edges.emplace_back("x" + std::to_string(u), "x" + std::to_string(v));
    return GraphInstance{
        build_graph(numbered("x", 16), edges),
        hypercube_example_parts(),
        {"x14 placed at (1,1,1,0); (1,1,1,1) would coincide with x16 and break the "
         "Hamming-1 edges {x5,x14}, {x6,x14}, {x14,x16}"},
    };
}

FiniteSemimetricSpace hypercube_example_space() {
    std::map<Label, Label> names;
    for (const auto& [x, bits] : hypercube_example_coordinates()) names[bits] = x;
    return relabel(hypercube_space(4), names);
}

Bipartition hypercube_example_parts() {
    return Bipartition({"x1", "x2", "x3", "x4", "x9", "x10", "x11", "x12"},
                       {"x5", "x6", "x7", "x8", "x13", "x14", "x15", "x16"});
}

CrossPairSet hypercube_example_listed_pairs() {
    const std::vector<std::pair<int, int>> listed = {
        {1, 5},   {1, 6},   {1, 7},   {1, 8},   {1, 13},  {1, 14},  {1, 15},  {1, 16},  {2, 6},   {2, 13},
        {2, 16},  {3, 5},   {3, 8},   {3, 14},  {3, 15},  {3, 16},  {4, 7},   {4, 8},   {4, 13},  {4, 15},
        {4, 16},  {9, 5},   {9, 6},   {9, 8},   {9, 13},  {9, 14},  {9, 15},  {9, 16},  {10, 6},  {10, 8},
        {10, 13}, {10, 14}, {10, 16}, {11, 5},  {11, 8},  {11, 14}, {11, 15}, {11, 16}, {12, 5},  {12, 6},
        {12, 7},  {12, 8},  {12, 13}, {12, 14}, {12, 15}, {12, 16},
    };
    CrossPairSet out;
    for (auto [a, b] : listed) out.emplace("x" + std::to_string(a), "x" + std::to_string(b));
    return out;
}

GraphInstance alternating_path_example() {
    return GraphInstance{
        build_graph({"a1", "b1", "a2", "b2"}, {{"a1", "b1"}, {"b1", "a2"}, {"a2", "b2"}}),
        Bipartition({"a1", "a2"}, {"b1", "b2"}),
        {},
    };
}

Label lattice_label(int real, int imag) {
    if (imag == 0) return std::to_string(real);
    return std::to_string(real) + "+" + std::to_string(imag) + "i";
}

SpaceInstance lattice_truncation(const TruncationParams& params) {
    if (params.n_max < 1 || params.m_max < 0 || params.k_max < 1) {
        throw Error(ErrorCode::out_of_range, "need n_max >= 1, m_max >= 0, k_max >= 1");
    }
    const auto total = static_cast<std::size_t>(params.n_max) +
                       static_cast<std::size_t>(params.m_max + 1) * static_cast<std::size_t>(params.k_max);
    if (total > kMaxTruncationPoints) {
        throw Error(ErrorCode::size_exceeded, std::to_string(total) + " points exceed " +
                                                  std::to_string(kMaxTruncationPoints));
    }
    std::map<Label, std::pair<int, int>> coords;
    VertexSet a;
    VertexSet b;
    for (int n = 1; n <= params.n_max; ++n) {
        coords[lattice_label(n, 0)] = {n, 0};
        a.insert(lattice_label(n, 0));
    }
    for (int m = 0; m <= params.m_max; ++m) {
        for (int k = 1; k <= params.k_max; ++k) {
            coords[lattice_label(m, k)] = {m, k};
            b.insert(lattice_label(m, k));
        }
    }
    std::vector<Label> points;
    for (const auto& [label, xy] : coords) points.push_back(label);
    auto space = space_from_function(std::move(points), [&](const Label& p, const Label& q) {
        const auto [x1, y1] = coords.at(p);
        const auto [x2, y2] = coords.at(q);
        return Rational(std::abs(x1 - x2), 2) + Rational(std::abs(y1 - y2)) + Rational(1);
    });
    std::vector<std::string> notes;
    if (params.m_max == 0) notes.emplace_back("m_max = 0 leaves no point m + ik with m >= 1; dist(A, B) is 5/2, not 2");
    return SpaceInstance{std::move(space), Bipartition(std::move(a), std::move(b)), std::move(notes)};
}

std::vector<Label> numbered_vertices(int n) { return numbered("v", n); }

int pair_count(int n) { return n * (n - 1) / 2; }

SimpleGraph labeled_graph(int n, std::uint64_t mask) {
    const auto labels = numbered_vertices(n);
    EdgeSet edges;
    int bit = 0;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j, ++bit) {
            if (mask & (std::uint64_t{1} << bit)) edges.insert(make_edge(labels[i], labels[j]));
        }
    }
    return SimpleGraph(VertexSet(labels.begin(), labels.end()), std::move(edges));
}

void for_each_labeled_graph(int n, const std::function<void(std::uint64_t, const SimpleGraph&)>& visit) {
    if (n < 1 || n > kHardMaxEnumeratedVertices) {
        throw Error(ErrorCode::out_of_range, "labelled-graph enumeration needs 1 <= n <= " +
                                                 std::to_string(kHardMaxEnumeratedVertices));
    }
    const std::uint64_t count = std::uint64_t{1} << pair_count(n);
    for (std::uint64_t mask = 0; mask < count; ++mask) visit(mask, labeled_graph(n, mask));
}

std::vector<SimpleGraph> enumerate_labeled_graphs(int n) {
    if (n < 1 || n > kMaxEnumeratedVertices) {
        throw Error(ErrorCode::out_of_range, "labelled-graph enumeration needs 1 <= n <= " +
                                                 std::to_string(kMaxEnumeratedVertices));
    }
    std::vector<SimpleGraph> out;
    out.reserve(std::size_t{1} << pair_count(n));
    for_each_labeled_graph(n, [&](std::uint64_t, const SimpleGraph& g) { out.push_back(g); });
    return out;
}

Bipartition bipartition_from_mask(const std::vector<Label>& sorted_vertices, std::uint64_t mask) {
    VertexSet a;
    VertexSet b;
    for (std::size_t i = 0; i < sorted_vertices.size(); ++i) {
        (mask & (std::uint64_t{1} << i) ? a : b).insert(sorted_vertices[i]);
    }
    return Bipartition(std::move(a), std::move(b));
}

std::vector<Bipartition> all_bipartitions(const VertexSet& vertices) {
    if (vertices.size() < 2) throw Error(ErrorCode::too_small, "bipartitions need at least two vertices");
    if (vertices.size() > 20) throw Error(ErrorCode::size_exceeded, "too many vertices to list bipartitions");
    const std::vector<Label> sorted(vertices.begin(), vertices.end());
    const std::uint64_t full = (std::uint64_t{1} << sorted.size()) - 1;
    std::vector<Bipartition> out;
    out.reserve(full - 1);
    for (std::uint64_t mask = 1; mask < full; ++mask) out.push_back(bipartition_from_mask(sorted, mask));
    return out;
}

FiniteSemimetricSpace random_ultrametric_space(int n, std::uint64_t seed) {
    if (n < 2 || n > 16) throw Error(ErrorCode::out_of_range, "random ultrametric needs 2 <= n <= 16");
    std::mt19937_64 rng(seed);
    const auto size = static_cast<std::size_t>(n);
    std::vector<std::vector<Rational>> table(size, std::vector<Rational>(size));
    std::vector<std::size_t> all(size);
    std::iota(all.begin(), all.end(), 0);
    split_block(std::move(all), Rational(n), rng, table);
    return FiniteSemimetricSpace(numbered("p", n), std::move(table));
}

FiniteSemimetricSpace random_semimetric_space(int n, std::uint64_t seed) {
    if (n < 2 || n > 16) throw Error(ErrorCode::out_of_range, "random semimetric needs 2 <= n <= 16");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> halves(1, 6);
    return space_from_function(numbered("p", n), [&](const Label&, const Label&) { return Rational(halves(rng), 2); });
}

SimpleGraph random_graph(int n, const Rational& edge_probability, std::uint64_t seed) {
    if (n < 1) throw Error(ErrorCode::out_of_range, "random graph needs n >= 1");
    if (edge_probability < 0 || edge_probability > 1) {
        throw Error(ErrorCode::probability_out_of_range, format_rational(edge_probability));
    }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::int64_t> draw(0, edge_probability.denominator() - 1);
    const auto labels = numbered_vertices(n);
    EdgeSet edges;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (draw(rng) < edge_probability.numerator()) edges.insert(make_edge(labels[i], labels[j]));
        }
    }
    return SimpleGraph(VertexSet(labels.begin(), labels.end()), std::move(edges));
}

}  // namespace proxigraph
