#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <set>
#include <string_view>
#include <utility>
#include <vector>

#include "proxigraph/graph.hpp"
#include "proxigraph/rational.hpp"

namespace proxigraph {

/// Finite set of labelled points with a symmetric, zero-diagonal distance
/// table whose off-diagonal entries are strictly positive.
class FiniteSemimetricSpace {
public:
    FiniteSemimetricSpace() = default;

    /// Validates the semimetric axioms; see build_space.
    FiniteSemimetricSpace(std::vector<Label> points, std::vector<std::vector<Rational>> table);

    const std::vector<Label>& points() const noexcept { return points_; }
    std::size_t size() const noexcept { return points_.size(); }

    VertexSet point_set() const { return VertexSet(points_.begin(), points_.end()); }
    bool contains(const Label& p) const { return index_.contains(p); }

    /// Throws unknown_point.
    std::size_t index_of(const Label& p) const;

    const Rational& distance(std::size_t i, std::size_t j) const { return table_[i * points_.size() + j]; }
    const Rational& distance(const Label& p, const Label& q) const { return distance(index_of(p), index_of(q)); }

    std::vector<std::vector<Rational>> table() const;

    bool operator==(const FiniteSemimetricSpace& other) const {
        return points_ == other.points_ && table_ == other.table_;
    }

private:
    std::vector<Label> points_;
    std::map<Label, std::size_t> index_;
    std::vector<Rational> table_;
};

enum class SpaceClass { semimetric, metric, ultrametric };

std::string_view to_string(SpaceClass cls);

using PointPair = std::pair<Label, Label>;

/// Best-proximity structure of a pair of sets.
struct ProximityReport {
    Rational distance;
    VertexSet a0;
    VertexSet b0;
    std::set<PointPair> pairs;
};

FiniteSemimetricSpace build_space(std::vector<Label> points, std::vector<std::vector<Rational>> table);

/// Builds the table from d(p, q) evaluated for p before q; diagonal is 0.
FiniteSemimetricSpace space_from_function(std::vector<Label> points,
                                          const std::function<Rational(const Label&, const Label&)>& dist);

/// Renames points; the mapping must cover every point and be injective.
FiniteSemimetricSpace relabel(const FiniteSemimetricSpace& space, const std::map<Label, Label>& names);

bool satisfies_triangle_inequality(const FiniteSemimetricSpace& space);
bool satisfies_strong_triangle_inequality(const FiniteSemimetricSpace& space);

/// Strongest class whose axiom holds over all triples.
SpaceClass classify(const FiniteSemimetricSpace& space);

Rational set_distance(const FiniteSemimetricSpace& space, const VertexSet& a, const VertexSet& b);

/// All points of a attaining the minimum distance to x.
VertexSet best_approximations(const FiniteSemimetricSpace& space, const Label& x, const VertexSet& a);

/// Every point has a best approximation in a. Always true for finite spaces,
/// but evaluated rather than assumed.
bool is_proximinal(const FiniteSemimetricSpace& space, const VertexSet& a);

ProximityReport proximity_report(const FiniteSemimetricSpace& space, const Bipartition& parts);

/// Largest pairwise distance within s; 0 for empty and singleton sets.
Rational diameter(const FiniteSemimetricSpace& space, const VertexSet& s);

/// The two sides of the ultrametric diameter criterion for (A, B):
/// diameter_bound is diam(B) <= dist(A, B); full_proximity is
/// "A0 proximinal, B0 = B, and every (a, b) in A0 x B0 attains dist(A, B)".
struct DiameterCriterion {
    bool diameter_bound = false;
    bool full_proximity = false;
};

/// Throws not_ultrametric when the space fails the strong triangle inequality.
DiameterCriterion ultrametric_diameter_criterion(const FiniteSemimetricSpace& space, const Bipartition& parts);

}  // namespace proxigraph
