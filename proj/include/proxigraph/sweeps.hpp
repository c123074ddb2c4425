#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace proxigraph {

/// Bounds for a verification sweep. Exhaustive sweeps cover every labelled
/// graph with min_n..max_n vertices (and every bipartition where relevant);
/// randomized sweeps draw `instances` spaces from seeds seed, seed+1, ...
struct SweepOptions {
    int min_n = 1;
    int max_n = 5;
    std::size_t instances = 1000;
    std::uint64_t seed = 1;
    unsigned jobs = 1;
    /// Receives a line every 1000 checked instances when set.
    std::ostream* progress = nullptr;
};

struct SweepReport {
    std::string id;
    std::uint64_t checked = 0;
    std::optional<std::string> counterexample;
    std::vector<std::string> details;

    bool passed() const { return !counterexample.has_value(); }
};

struct SweepInfo {
    std::string id;
    std::string summary;
    /// Vertex bound used when the caller does not supply one; 0 when the
    /// sweep has no exhaustive phase.
    int default_max_n;
    /// Random instance count; 0 when the sweep has no randomized phase.
    std::size_t default_instances;
};

const std::vector<SweepInfo>& sweep_catalog();

/// Defaults for `id` from the catalogue. Throws unknown_name.
SweepOptions default_sweep_options(std::string_view id);

/// Runs one sweep. Throws unknown_name for an unrecognised id and
/// bound_exceeded when max_n exceeds the hard cap of 7.
SweepReport run_sweep(std::string_view id, const SweepOptions& options);

/// Generic engine: evaluates check(0..total-1) on `jobs` threads and keeps
/// the counterexample with the smallest index, so the result does not depend
/// on the worker count.
struct IndexedOutcome {
    std::uint64_t checked = 0;
    std::optional<std::string> counterexample;
};

IndexedOutcome run_indexed(std::uint64_t total, unsigned jobs, std::ostream* progress,
                           const std::function<std::optional<std::string>(std::uint64_t)>& check);

}  // namespace proxigraph
