#include "proxigraph/space.hpp"

#include <algorithm>
#include <optional>

#include "proxigraph/error.hpp"

namespace proxigraph {

namespace {

std::string cell(std::size_t i, std::size_t j) {
    return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

void require_points(const FiniteSemimetricSpace& space, const VertexSet& s) {
    for (const auto& p : s) {
        if (!space.contains(p)) throw Error(ErrorCode::unknown_point, "'" + p + "'");
    }
}

void require_nonempty(const VertexSet& s, const char* name) {
    if (s.empty()) throw Error(ErrorCode::empty_subset, std::string(name) + " is empty");
}

}  // namespace

FiniteSemimetricSpace::FiniteSemimetricSpace(std::vector<Label> points, std::vector<std::vector<Rational>> table)
    : points_(std::move(points)) {
    const std::size_t n = points_.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (!is_valid_label(points_[i])) throw Error(ErrorCode::invalid_label, "'" + points_[i] + "'");
        if (!index_.emplace(points_[i], i).second) throw Error(ErrorCode::duplicate_vertex, "'" + points_[i] + "'");
    }
    if (table.size() != n) {
        throw Error(ErrorCode::shape_mismatch, std::to_string(table.size()) + " rows for " + std::to_string(n) + " points");
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (table[i].size() != n) {
            throw Error(ErrorCode::shape_mismatch, "row " + std::to_string(i) + " has " + std::to_string(table[i].size()) +
                                                       " entries, expected " + std::to_string(n));
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const Rational& v = table[i][j];
            if (v < 0) throw Error(ErrorCode::negative_entry, "entry " + cell(i, j) + " = " + format_rational(v));
            if (i == j && v != 0) throw Error(ErrorCode::nonzero_diagonal, "entry " + cell(i, j) + " = " + format_rational(v));
            if (i != j && v == 0) throw Error(ErrorCode::zero_off_diagonal, "entry " + cell(i, j));
            if (v != table[j][i]) {
                throw Error(ErrorCode::asymmetric_entry, "entry " + cell(i, j) + " = " + format_rational(v) + " but " +
                                                             cell(j, i) + " = " + format_rational(table[j][i]));
            }
        }
    }
    table_.reserve(n * n);
    for (auto& row : table) table_.insert(table_.end(), row.begin(), row.end());
}

std::size_t FiniteSemimetricSpace::index_of(const Label& p) const {
    auto it = index_.find(p);
    if (it == index_.end()) throw Error(ErrorCode::unknown_point, "'" + p + "'");
    return it->second;
}

std::vector<std::vector<Rational>> FiniteSemimetricSpace::table() const {
    const std::size_t n = points_.size();
    std::vector<std::vector<Rational>> out(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) out[i][j] = distance(i, j);
    }
    return out;
}

std::string_view to_string(SpaceClass cls) {
    switch (cls) {
        case SpaceClass::semimetric: return "Semimetric";
        case SpaceClass::metric: return "Metric";
        case SpaceClass::ultrametric: return "Ultrametric";
    }
    return "Semimetric";
}

FiniteSemimetricSpace build_space(std::vector<Label> points, std::vector<std::vector<Rational>> table) {
    return FiniteSemimetricSpace(std::move(points), std::move(table));
}

FiniteSemimetricSpace space_from_function(std::vector<Label> points,
                                          const std::function<Rational(const Label&, const Label&)>& dist) {
    const std::size_t n = points.size();
    std::vector<std::vector<Rational>> table(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            table[i][j] = table[j][i] = dist(points[i], points[j]);
        }
    }
    return FiniteSemimetricSpace(std::move(points), std::move(table));
}

FiniteSemimetricSpace relabel(const FiniteSemimetricSpace& space, const std::map<Label, Label>& names) {
    std::vector<Label> renamed;
    renamed.reserve(space.size());
    for (const auto& p : space.points()) {
        auto it = names.find(p);
        if (it == names.end()) throw Error(ErrorCode::unknown_point, "no new name for '" + p + "'");
        renamed.push_back(it->second);
    }
    return FiniteSemimetricSpace(std::move(renamed), space.table());
}

bool satisfies_triangle_inequality(const FiniteSemimetricSpace& space) {
    const std::size_t n = space.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            for (std::size_t k = 0; k < n; ++k) {
                if (space.distance(i, j) > space.distance(i, k) + space.distance(k, j)) return false;
            }
        }
    }
    return true;
}

bool satisfies_strong_triangle_inequality(const FiniteSemimetricSpace& space) {
    const std::size_t n = space.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            for (std::size_t k = 0; k < n; ++k) {
                if (space.distance(i, j) > std::max(space.distance(i, k), space.distance(k, j))) return false;
            }
        }
    }
    return true;
}

SpaceClass classify(const FiniteSemimetricSpace& space) {
    if (!satisfies_triangle_inequality(space)) return SpaceClass::semimetric;
    if (!satisfies_strong_triangle_inequality(space)) return SpaceClass::metric;
    return SpaceClass::ultrametric;
}

Rational set_distance(const FiniteSemimetricSpace& space, const VertexSet& a, const VertexSet& b) {
    require_nonempty(a, "first set");
    require_nonempty(b, "second set");
    require_points(space, a);
    require_points(space, b);
    std::optional<Rational> best;
    for (const auto& p : a) {
        for (const auto& q : b) {
            const Rational& d = space.distance(p, q);
            if (!best || d < *best) best = d;
        }
    }
    return *best;
}

VertexSet best_approximations(const FiniteSemimetricSpace& space, const Label& x, const VertexSet& a) {
    require_nonempty(a, "target set");
    require_points(space, a);
    space.index_of(x);
    const Rational best = set_distance(space, {x}, a);
    VertexSet out;
    for (const auto& p : a) {
        if (space.distance(x, p) == best) out.insert(p);
    }
    return out;
}

bool is_proximinal(const FiniteSemimetricSpace& space, const VertexSet& a) {
    require_nonempty(a, "set");
    require_points(space, a);
    return std::all_of(space.points().begin(), space.points().end(),
                       [&](const Label& x) { return !best_approximations(space, x, a).empty(); });
}

ProximityReport proximity_report(const FiniteSemimetricSpace& space, const Bipartition& parts) {
    ProximityReport report;
    report.distance = set_distance(space, parts.a(), parts.b());
    for (const auto& a : parts.a()) {
        for (const auto& b : parts.b()) {
            if (space.distance(a, b) == report.distance) {
                report.pairs.emplace(a, b);
                report.a0.insert(a);
                report.b0.insert(b);
            }
        }
    }
    return report;
}

Rational diameter(const FiniteSemimetricSpace& space, const VertexSet& s) {
    require_points(space, s);
    Rational best(0);
    for (auto i = s.begin(); i != s.end(); ++i) {
        for (auto j = std::next(i); j != s.end(); ++j) best = std::max(best, space.distance(*i, *j));
    }
    return best;
}

DiameterCriterion ultrametric_diameter_criterion(const FiniteSemimetricSpace& space, const Bipartition& parts) {
    if (!satisfies_strong_triangle_inequality(space)) {
        throw Error(ErrorCode::not_ultrametric, "the diameter criterion needs an ultrametric space");
    }
    const ProximityReport report = proximity_report(space, parts);
    DiameterCriterion out;
    out.diameter_bound = diameter(space, parts.b()) <= report.distance;

    bool all_pairs_best = true;
    for (const auto& a : report.a0) {
        for (const auto& b : report.b0) {
            if (space.distance(a, b) != report.distance) all_pairs_best = false;
        }
    }
    out.full_proximity = !report.a0.empty() && is_proximinal(space, report.a0) && report.b0 == parts.b() &&
                         all_pairs_best;
    return out;
}

}  // namespace proxigraph
