#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "proxigraph/be_paths.hpp"
#include "proxigraph/graph.hpp"
#include "proxigraph/space.hpp"

namespace proxigraph {

/// A named graph with its partition and human-readable remarks (errata,
/// provenance of corrected values).
struct GraphInstance {
    SimpleGraph graph;
    Bipartition parts;
    std::vector<std::string> notes;
};

struct SpaceInstance {
    FiniteSemimetricSpace space;
    Bipartition parts;
    std::vector<std::string> notes;
};

inline constexpr int kMaxHypercubeDimension = 10;

/// 2^n bit strings under Hamming distance, labelled by the strings.
FiniteSemimetricSpace hypercube_space(int n);

/// The sixteen-vertex, 25-edge subgraph of the 4-cube on labels x1..x16.
/// Vertex x14 sits at 1110 (the only free corner consistent with its edges).
GraphInstance hypercube_example_graph();

/// Bit-string coordinates of x1..x16.
const std::map<Label, std::string>& hypercube_example_coordinates();

/// The 4-cube Hamming space with points renamed x1..x16.
FiniteSemimetricSpace hypercube_example_space();

Bipartition hypercube_example_parts();

/// The 46 pairs listed in the literature for this example. Kept as data for
/// comparison only; the actual set is all 64 cross pairs.
CrossPairSet hypercube_example_listed_pairs();

/// P4 = (a1, b1, a2, b2) with A = {a1, a2}, B = {b1, b2}.
GraphInstance alternating_path_example();

/// Index bounds of the complex-lattice truncation: A = {1..n_max} on the real
/// axis, B = {m + ik : 0 <= m <= m_max, 1 <= k <= k_max}.
struct TruncationParams {
    int n_max = 2;
    int m_max = 2;
    int k_max = 2;
};

inline constexpr std::size_t kMaxTruncationPoints = 200;

/// d(z, w) = |Re z - Re w| / 2 + |Im z - Im w| + 1 for z != w. Throws
/// out_of_range for bad bounds and size_exceeded above 200 points.
SpaceInstance lattice_truncation(const TruncationParams& params);

/// Label used for lattice point m + ik (k = 0 gives the bare integer).
Label lattice_label(int real, int imag);

inline constexpr int kMaxEnumeratedVertices = 6;
inline constexpr int kHardMaxEnumeratedVertices = 7;

/// Vertices v1..vn.
std::vector<Label> numbered_vertices(int n);

/// Number of unordered vertex pairs, i.e. bits in a labelled-graph mask.
int pair_count(int n);

/// Labelled graph on v1..vn whose edge k (pairs in (i, j), i < j order) is
/// present iff bit k of mask is set.
SimpleGraph labeled_graph(int n, std::uint64_t mask);

/// All 2^(n(n-1)/2) labelled graphs on v1..vn in mask order; n <= 6.
std::vector<SimpleGraph> enumerate_labeled_graphs(int n);

/// Streaming variant accepting n up to the hard cap of 7.
void for_each_labeled_graph(int n, const std::function<void(std::uint64_t, const SimpleGraph&)>& visit);

/// Part A holds the vertices whose bit is set in mask (sorted order).
Bipartition bipartition_from_mask(const std::vector<Label>& sorted_vertices, std::uint64_t mask);

/// All 2^n - 2 ordered bipartitions (A, B) covering the set.
std::vector<Bipartition> all_bipartitions(const VertexSet& vertices);

/// Random laminar hierarchy on p1..pn: blocks split recursively with
/// strictly decreasing half-integer levels; d(x, y) is the level of the
/// smallest block separating them. Deterministic per seed; 2 <= n <= 16.
FiniteSemimetricSpace random_ultrametric_space(int n, std::uint64_t seed);

/// Semimetric on p1..pn with every distance drawn from {1/2, 1, ..., 3}.
/// Ties are frequent by construction.
FiniteSemimetricSpace random_semimetric_space(int n, std::uint64_t seed);

/// G(n, p) on v1..vn; p must lie in [0, 1].
SimpleGraph random_graph(int n, const Rational& edge_probability, std::uint64_t seed);

}  // namespace proxigraph
