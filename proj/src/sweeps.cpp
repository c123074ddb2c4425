#include "proxigraph/sweeps.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <ostream>
#include <random>
#include <thread>

#include "proxigraph/be_paths.hpp"
#include "proxigraph/error.hpp"
#include "proxigraph/formats.hpp"
#include "proxigraph/instances.hpp"
#include "proxigraph/path_proximinal.hpp"
#include "proxigraph/proximinal.hpp"

namespace proxigraph {

namespace {

using Check = std::function<std::optional<std::string>(std::uint64_t)>;

std::string describe(const SimpleGraph& graph) { return graph_to_json(graph).dump(); }

std::string describe(const SimpleGraph& graph, const Bipartition& parts) {
    return describe(graph) + " with " + partition_to_json(parts).dump();
}

std::string describe(const FiniteSemimetricSpace& space, const Bipartition& parts) {
    return space_to_json(space).dump() + " with " + partition_to_json(parts).dump();
}

std::optional<std::string> fail(std::string what, const std::string& where) {
    return what + " on " + where;
}

// Labelled graphs with n in [min_n, max_n], indexed consecutively.
class GraphFamily {
public:
    GraphFamily(int min_n, int max_n, bool with_partitions) : with_partitions_(with_partitions) {
        for (int n = std::max(min_n, with_partitions ? 2 : 1); n <= max_n; ++n) {
            const std::uint64_t graphs = std::uint64_t{1} << pair_count(n);
            const std::uint64_t per_graph = with_partitions ? (std::uint64_t{1} << n) - 2 : 1;
            segments_.push_back({n, total_, per_graph});
            total_ += graphs * per_graph;
        }
    }

    std::uint64_t total() const { return total_; }

    struct Instance {
        SimpleGraph graph;
        std::optional<Bipartition> parts;
    };

    Instance at(std::uint64_t index) const {
        auto it = std::upper_bound(segments_.begin(), segments_.end(), index,
                                   [](std::uint64_t i, const Segment& s) { return i < s.offset; });
        const Segment& seg = *std::prev(it);
        const std::uint64_t local = index - seg.offset;
        Instance out{labeled_graph(seg.n, local / seg.per_graph), std::nullopt};
        if (with_partitions_) {
            const auto labels = numbered_vertices(seg.n);
            std::vector<Label> sorted(labels.begin(), labels.end());
            std::sort(sorted.begin(), sorted.end());
            out.parts = bipartition_from_mask(sorted, local % seg.per_graph + 1);
        }
        return out;
    }

private:
    struct Segment {
        int n;
        std::uint64_t offset;
        std::uint64_t per_graph;
    };
    bool with_partitions_;
    std::vector<Segment> segments_;
    std::uint64_t total_ = 0;
};

int random_size(std::uint64_t seed, int lo, int hi) {
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

SweepReport exhaustive(std::string id, const SweepOptions& options, bool with_partitions,
                       const std::function<std::optional<std::string>(const SimpleGraph&,
                                                                      const std::optional<Bipartition>&)>& check) {
    const GraphFamily family(options.min_n, options.max_n, with_partitions);
    auto outcome = run_indexed(family.total(), options.jobs, options.progress, [&](std::uint64_t i) {
        auto inst = family.at(i);
        return check(inst.graph, inst.parts);
    });
    SweepReport report{std::move(id), outcome.checked, std::move(outcome.counterexample), {}};
    report.details.push_back(std::to_string(family.total()) + (with_partitions ? " graph/bipartition instances" : " graphs") +
                             " on " + std::to_string(std::max(options.min_n, with_partitions ? 2 : 1)) + ".." +
                             std::to_string(options.max_n) + " vertices");
    return report;
}

SweepReport merge(std::string id, SweepReport first, const SweepReport& second) {
    SweepReport out{std::move(id), first.checked, first.counterexample, first.details};
    out.details.insert(out.details.end(), second.details.begin(), second.details.end());
    if (out.passed()) {
        out.checked += second.checked;
        out.counterexample = second.counterexample;
    }
    return out;
}

// ---- individual sweeps -----------------------------------------------------

SweepReport sweep_path_bipartite_criterion(const SweepOptions& o) {
    return exhaustive("t3.9", o, true, [](const SimpleGraph& g, const std::optional<Bipartition>& p) {
        const bool criterion = is_path_bipartite(g, *p);
        const bool union_equal = union_of_be_paths(g, *p) == g;
        if (criterion != union_equal) return fail("component criterion disagrees with be-path union", describe(g, *p));
        return std::optional<std::string>{};
    });
}

SweepReport sweep_bpath_criterion(const SweepOptions& o) {
    return exhaustive("t3.4", o, true, [](const SimpleGraph& g, const std::optional<Bipartition>& p) {
        const Bipartition& parts = *p;
        const CrossPairSet fast = bpath_pairs(g, parts);
        CrossPairSet enumerated;
        for (const auto& w : enumerate_be_paths(g, parts)) {
            if (!as_be_path(g, w.path, parts)) return fail("enumerated path does not re-validate", describe(g, parts));
            const Label& front = w.path.front();
            const Label& back = w.path.back();
            if (parts.in_a(front) && parts.in_b(back)) enumerated.emplace(front, back);
            if (parts.in_b(front) && parts.in_a(back)) enumerated.emplace(back, front);
        }
        if (fast != enumerated) return fail("component B_path differs from enumeration", describe(g, parts));

        const auto a_blocks = connected_components(induced_subgraph(g, parts.a()));
        const auto b_blocks = connected_components(induced_subgraph(g, parts.b()));
        for (const auto& a : parts.a()) {
            for (const auto& b : parts.b()) {
                const bool member = fast.contains({a, b});
                const auto witness = be_path_witness(g, parts, a, b);
                if (witness.has_value() != member) return fail("witness presence mismatch for " + a + "," + b, describe(g, parts));
                if (witness) {
                    const auto check = as_be_path(g, witness->path, parts);
                    if (!check || witness->path.front() != a || witness->path.back() != b) {
                        return fail("witness for " + a + "," + b + " is not a be-path joining them", describe(g, parts));
                    }
                }
                if (!member) continue;
                const auto& ab = *std::find_if(a_blocks.begin(), a_blocks.end(), [&](const VertexSet& s) { return s.contains(a); });
                const auto& bb = *std::find_if(b_blocks.begin(), b_blocks.end(), [&](const VertexSet& s) { return s.contains(b); });
                for (const auto& x : ab) {
                    for (const auto& y : bb) {
                        if (!fast.contains({x, y})) return fail("B_path not closed under components", describe(g, parts));
                    }
                }
            }
        }
        return std::optional<std::string>{};
    });
}

SweepReport sweep_quotient_completeness(const SweepOptions& o) {
    return exhaustive("t3.6", o, true, [](const SimpleGraph& g, const std::optional<Bipartition>& p) {
        if (is_path_complete(g, *p) != is_complete_bipartite(quotient_graph(g, *p))) {
            return fail("path-completeness differs from quotient completeness", describe(g, *p));
        }
        return std::optional<std::string>{};
    });
}

SweepReport sweep_singleton_part(const SweepOptions& o) {
    return exhaustive("c2.9", o, true, [](const SimpleGraph& g, const std::optional<Bipartition>& p) {
        if (!is_path_bipartite(g, *p) || std::min(p->a().size(), p->b().size()) > 1) return std::optional<std::string>{};
        if (is_connected(g) != is_path_complete(g, *p)) return fail("connectivity differs from path-completeness", describe(g, *p));
        return std::optional<std::string>{};
    });
}

SweepReport sweep_isolated_vertex_partition(const SweepOptions& o) {
    return exhaustive("c3.10", o, false, [](const SimpleGraph& g, const std::optional<Bipartition>&) {
        const bool pruned_equal = !g.edges().empty() && prune_isolated(g) == g;
        bool some_partition = false;
        if (g.order() >= 2) {
            for (const auto& parts : all_bipartitions(g.vertices())) {
                if (is_path_bipartite(g, parts)) {
                    some_partition = true;
                    break;
                }
            }
        }
        if (some_partition != pruned_equal) return fail("partition existence differs from G = G'", describe(g));
        const auto found = find_path_bipartite_partition(g);
        if (found.has_value() != pruned_equal) return fail("canonical partition presence differs from G = G'", describe(g));
        if (found && !is_path_bipartite(g, *found)) return fail("canonical partition is not path-bipartite", describe(g));
        return std::optional<std::string>{};
    });
}

SweepReport sweep_path_proximinal_certificates(const SweepOptions& o) {
    return exhaustive("t3.16", o, false, [](const SimpleGraph& g, const std::optional<Bipartition>&) {
        const bool no_isolated = g.order() > 0 && isolated_vertices(g).empty();
        const auto cert = is_path_proximinal_graph(g);
        if (cert.has_value() != no_isolated) return fail("certificate presence differs from isolated-vertex test", describe(g));
        if (cert) {
            if (!verify_certificate(*cert)) return fail("certificate does not re-verify", describe(g));
            if (classify(cert->space) == SpaceClass::semimetric) return fail("certificate space is not a metric", describe(g));
        }
        return std::optional<std::string>{};
    });
}

SweepReport sweep_two_vertex_components(const SweepOptions& o) {
    return exhaustive("c3.12", o, false, [](const SimpleGraph& g, const std::optional<Bipartition>&) {
        const bool pairs = components_are_pairs(g);
        if (pairs != all_degrees_one(g)) return fail("two-vertex components differ from degree-one test", describe(g));
        if (pairs) {
            const auto cert = witness_ultrametric(g);
            if (!cert || !verify_proximinal_graph(cert->graph, cert->parts, cert->space) || !verify_certificate(*cert)) {
                return fail("graph is not both proximinal and path-proximinal for its ultrametric", describe(g));
            }
        }
        return std::optional<std::string>{};
    });
}

// Qualifying (space, bipartition) pairs from random ultrametric spaces:
// threshold graph bipartite with the parts and path-proximinal.
SweepReport ultrametric_converse(const SweepOptions& o) {
    SweepReport report{"t3.10", 0, std::nullopt, {}};
    const std::size_t wanted = o.instances;
    const std::uint64_t seed_cap = std::max<std::uint64_t>(1000, 200 * wanted);
    std::uint64_t seeds_used = 0;
    for (std::uint64_t s = 0; s < seed_cap && report.checked < wanted; ++s, ++seeds_used) {
        const std::uint64_t seed = o.seed + s;
        const auto space = random_ultrametric_space(random_size(seed, 2, 8), seed);
        for (const auto& parts : all_bipartitions(space.point_set())) {
            const SimpleGraph g = build_threshold_graph(space, parts);
            if (!is_bipartite_with_parts(g, parts) || !verify_path_proximinal(g, parts, space)) continue;
            ++report.checked;
            if (o.progress && report.checked % 1000 == 0) *o.progress << "[t3.10] " << report.checked << " ultrametric instances\n";
            if (!components_are_pairs(g)) {
                report.counterexample = "threshold graph has a component without exactly 2 vertices on " + describe(space, parts);
                return report;
            }
            if (!ultrametric_connectivity(g, parts, space).agree()) {
                report.counterexample = "connectivity statements disagree on " + describe(space, parts);
                return report;
            }
            if (report.checked == wanted) break;
        }
    }
    report.details.push_back(std::to_string(report.checked) + " qualifying ultrametric instances from " +
                             std::to_string(seeds_used) + " seeds");
    if (report.checked < wanted) {
        report.counterexample = "only " + std::to_string(report.checked) + " of " + std::to_string(wanted) +
                                " qualifying ultrametric instances found";
    }
    return report;
}

SweepReport sweep_degree_one_ultrametric(const SweepOptions& o) {
    auto forward = exhaustive("t3.10", o, false, [](const SimpleGraph& g, const std::optional<Bipartition>&) {
        const auto cert = witness_ultrametric(g);
        if (cert.has_value() != all_degrees_one(g)) return fail("ultrametric witness presence differs from degree-one test", describe(g));
        if (cert) {
            if (!satisfies_strong_triangle_inequality(cert->space)) return fail("witness space is not ultrametric", describe(g));
            if (!verify_certificate(*cert)) return fail("witness does not verify path-proximinal", describe(g));
            if (!is_bipartite_with_parts(cert->graph, cert->parts)) return fail("witness graph not bipartite with its parts", describe(g));
            if (set_distance(cert->space, cert->parts.a(), cert->parts.b()) != 1) return fail("witness dist(A,B) != 1", describe(g));
        }
        return std::optional<std::string>{};
    });
    if (!forward.passed() || o.instances == 0) return forward;
    return merge("t3.10", std::move(forward), ultrametric_converse(o));
}

SweepReport sweep_ultrametric_diameter(const SweepOptions& o) {
    auto outcome = run_indexed(o.instances, o.jobs, o.progress, [&](std::uint64_t i) -> std::optional<std::string> {
        const std::uint64_t seed = o.seed + i;
        const auto space = random_ultrametric_space(random_size(seed, 2, 8), seed);
        for (const auto& parts : all_bipartitions(space.point_set())) {
            const auto c = ultrametric_diameter_criterion(space, parts);
            if (c.diameter_bound != c.full_proximity) return fail("diameter bound differs from proximity structure", describe(space, parts));
        }
        return std::nullopt;
    });
    SweepReport report{"t2.1", outcome.checked, std::move(outcome.counterexample), {}};
    report.details.push_back(std::to_string(o.instances) + " random ultrametric spaces on 2..8 points, all bipartitions");
    return report;
}

SweepReport sweep_structural_conditions(const SweepOptions& o) {
    auto outcome = run_indexed(o.instances, o.jobs, o.progress, [&](std::uint64_t i) -> std::optional<std::string> {
        const std::uint64_t seed = o.seed + i;
        const auto space = random_semimetric_space(random_size(seed, 2, 7), seed);
        for (const auto& parts : all_bipartitions(space.point_set())) {
            const bool structural = check_structural_conditions(space, parts);
            const bool path_bipartite = is_path_bipartite(build_threshold_graph(space, parts), parts);
            if (structural != path_bipartite) return fail("structural conditions differ from path-bipartiteness", describe(space, parts));
        }
        return std::nullopt;
    });
    SweepReport report{"t3.5", outcome.checked, std::move(outcome.counterexample), {}};
    report.details.push_back(std::to_string(o.instances) + " random semimetric spaces on 2..7 points, all bipartitions");
    return report;
}

bool bipartite_nonempty(const SimpleGraph& g, const Bipartition& p) {
    return !g.edges().empty() && is_bipartite_with_parts(g, p);
}

SweepReport sweep_full_proximity(const SweepOptions& o) {
    auto witness_family = exhaustive("p3.22", o, true, [](const SimpleGraph& g, const std::optional<Bipartition>& p) {
        if (!bipartite_nonempty(g, *p)) return std::optional<std::string>{};
        const auto space = witness_proximinal_metric(g, *p);
        const bool full = parts_fully_proximal(g, *p, space);
        const bool no_isolated = isolated_vertices(g).empty();
        if (full != no_isolated) return fail("A0 = A, B0 = B differs from isolated-vertex test", describe(g, *p));
        if (full != is_path_proximinal_graph(g).has_value()) return fail("A0 = A, B0 = B differs from path-proximinality", describe(g, *p));
        return std::optional<std::string>{};
    });
    if (!witness_family.passed() || o.instances == 0) return witness_family;

    auto outcome = run_indexed(o.instances, o.jobs, o.progress, [&](std::uint64_t i) -> std::optional<std::string> {
        const std::uint64_t seed = o.seed + i;
        const auto space = random_semimetric_space(random_size(seed, 2, 7), seed);
        for (const auto& parts : all_bipartitions(space.point_set())) {
            const SimpleGraph g = build_proximinal_graph(space, parts);
            if (parts_fully_proximal(g, parts, space) != isolated_vertices(g).empty()) {
                return fail("A0 = A, B0 = B differs from isolated-vertex test", describe(space, parts));
            }
        }
        return std::nullopt;
    });
    SweepReport random_part{"p3.22", outcome.checked, std::move(outcome.counterexample), {}};
    random_part.details.push_back(std::to_string(o.instances) + " random semimetric spaces with their proximinal graphs");
    return merge("p3.22", std::move(witness_family), random_part);
}

// Perturbs the 1/2 witness: cross edges stay at 1, cross non-edges move
// above 1, same-part pairs take any value in {1/2, ..., 3}.
FiniteSemimetricSpace perturbed_metric(const SimpleGraph& g, const Bipartition& parts, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> within(1, 6);
    std::uniform_int_distribution<int> above(3, 6);
    std::vector<Label> points(g.vertices().begin(), g.vertices().end());
    return space_from_function(std::move(points), [&](const Label& x, const Label& y) {
        if (!parts.crosses(x, y)) return Rational(within(rng), 2);
        return g.adjacent(x, y) ? Rational(1) : Rational(above(rng), 2);
    });
}

SweepReport sweep_within_part_separation(const SweepOptions& o) {
    auto witness_family = exhaustive("p3.9", o, true, [](const SimpleGraph& g, const std::optional<Bipartition>& p) {
        if (!bipartite_nonempty(g, *p) || !isolated_vertices(g).empty()) return std::optional<std::string>{};
        const auto space = witness_proximinal_metric(g, *p);
        if (verify_path_proximinal(g, *p, space) != check_within_part_separation(space, *p)) {
            return fail("path-proximinality differs from within-part separation", describe(g, *p));
        }
        return std::optional<std::string>{};
    });
    if (!witness_family.passed() || o.instances == 0) return witness_family;

    auto outcome = run_indexed(o.instances, o.jobs, o.progress, [&](std::uint64_t i) -> std::optional<std::string> {
        const std::uint64_t seed = o.seed + i;
        std::mt19937_64 rng(seed);
        const int n = std::uniform_int_distribution<int>(2, 7)(rng);
        const auto labels = numbered_vertices(n);
        const std::uint64_t mask = std::uniform_int_distribution<std::uint64_t>(1, (std::uint64_t{1} << n) - 2)(rng);
        const Bipartition parts = bipartition_from_mask(labels, mask);
        EdgeSet edges;
        for (const auto& a : parts.a()) {
            for (const auto& b : parts.b()) {
                if (rng() % 2 == 0) edges.insert(make_edge(a, b));
            }
        }
        const SimpleGraph g(VertexSet(labels.begin(), labels.end()), std::move(edges));
        if (g.edges().empty() || !isolated_vertices(g).empty()) return std::nullopt;
        const auto space = perturbed_metric(g, parts, seed);
        if (!verify_proximinal_graph(g, parts, space)) return fail("perturbation broke proximinality", describe(space, parts));
        if (verify_path_proximinal(g, parts, space) != check_within_part_separation(space, parts)) {
            return fail("path-proximinality differs from within-part separation", describe(space, parts));
        }
        return std::nullopt;
    });
    SweepReport random_part{"p3.9", outcome.checked, std::move(outcome.counterexample), {}};
    random_part.details.push_back(std::to_string(o.instances) + " perturbed witness metrics on 2..7 points");
    return merge("p3.9", std::move(witness_family), random_part);
}

using SweepFn = SweepReport (*)(const SweepOptions&);

const std::map<std::string, SweepFn, std::less<>>& sweep_table() {
    static const std::map<std::string, SweepFn, std::less<>> table = {
        {"t3.4", sweep_bpath_criterion},
        {"t3.6", sweep_quotient_completeness},
        {"t3.9", sweep_path_bipartite_criterion},
        {"t3.16", sweep_path_proximinal_certificates},
        {"t2.1", sweep_ultrametric_diameter},
        {"t3.10", sweep_degree_one_ultrametric},
        {"c2.9", sweep_singleton_part},
        {"c3.10", sweep_isolated_vertex_partition},
        {"c3.12", sweep_two_vertex_components},
        {"p3.22", sweep_full_proximity},
        {"p3.9", sweep_within_part_separation},
        {"t3.5", sweep_structural_conditions},
    };
    return table;
}

}  // namespace

IndexedOutcome run_indexed(std::uint64_t total, unsigned jobs, std::ostream* progress, const Check& check) {
    if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
    constexpr std::uint64_t kChunk = 64;

    std::atomic<std::uint64_t> next{0};
    std::atomic<std::uint64_t> first_failure{total};
    std::atomic<std::uint64_t> done{0};
    std::mutex mutex;
    std::optional<std::string> message;

    auto worker = [&] {
        for (;;) {
            const std::uint64_t start = next.fetch_add(kChunk);
            if (start >= total) return;
            const std::uint64_t stop = std::min(total, start + kChunk);
            for (std::uint64_t i = start; i < stop && i < first_failure.load(); ++i) {
                std::optional<std::string> result;
                try {
                    result = check(i);
                } catch (const std::exception& e) {
                    result = std::string("exception: ") + e.what();
                }
                const std::uint64_t count = done.fetch_add(1) + 1;
                std::lock_guard lock(mutex);
                if (progress && count % 1000 == 0) *progress << "  checked " << count << "/" << total << '\n';
                if (result && i < first_failure.load()) {
                    first_failure.store(i);
                    message = "instance " + std::to_string(i) + ": " + *result;
                }
            }
        }
    };

    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
    }
    const std::uint64_t failed_at = first_failure.load();
    return IndexedOutcome{failed_at < total ? failed_at + 1 : total, message};
}

const std::vector<SweepInfo>& sweep_catalog() {
    static const std::vector<SweepInfo> catalog = {
        {"t3.4", "component B_path criterion vs exhaustive be-path enumeration", 5, 0},
        {"t3.6", "path-completeness vs complete-bipartite quotient", 5, 0},
        {"t3.9", "path-bipartite component criterion vs union of all be-paths", 5, 0},
        {"t3.16", "path-proximinal certificate iff no isolated vertex", 6, 0},
        {"t2.1", "ultrametric diameter bound vs full proximity structure", 0, 1000},
        {"t3.10", "ultrametric witness iff all degrees one; converse on random ultrametrics", 6, 500},
        {"c2.9", "singleton part: connected iff path-complete", 5, 0},
        {"c3.10", "some path-bipartite partition iff G = G'", 6, 0},
        {"c3.12", "components of size two iff degree one, with ultrametric witness", 6, 0},
        {"p3.22", "proximinal graph: A0 = A and B0 = B iff path-proximinal", 5, 500},
        {"p3.9", "proximinal graph with G = G': path-proximinal iff within-part separation", 5, 500},
        {"t3.5", "structural reachability conditions vs path-bipartite threshold graph", 0, 500},
    };
    return catalog;
}

SweepOptions default_sweep_options(std::string_view id) {
    for (const auto& info : sweep_catalog()) {
        if (info.id == id) {
            SweepOptions o;
            o.max_n = info.default_max_n;
            o.instances = info.default_instances;
            return o;
        }
    }
    throw Error(ErrorCode::unknown_name, "unknown sweep id '" + std::string(id) + "'");
}

SweepReport run_sweep(std::string_view id, const SweepOptions& options) {
    const auto& table = sweep_table();
    auto it = table.find(id);
    if (it == table.end()) throw Error(ErrorCode::unknown_name, "unknown sweep id '" + std::string(id) + "'");
    if (options.max_n > kHardMaxEnumeratedVertices) {
        throw Error(ErrorCode::bound_exceeded, "max-n " + std::to_string(options.max_n) + " exceeds the hard cap " +
                                                   std::to_string(kHardMaxEnumeratedVertices));
    }
    return it->second(options);
}

}  // namespace proxigraph
