#include "proxigraph/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "proxigraph/be_paths.hpp"
#include "proxigraph/error.hpp"
#include "proxigraph/formats.hpp"
#include "proxigraph/instances.hpp"
#include "proxigraph/path_proximinal.hpp"
#include "proxigraph/proximinal.hpp"
#include "proxigraph/sweeps.hpp"

namespace proxigraph {

namespace fs = std::filesystem;

namespace {

const char* verdict(bool value) { return value ? "true" : "false"; }

int status(bool value) { return value ? kExitTrue : kExitFalse; }

std::string join(const VertexSet& set) {
    std::string out = "{";
    for (const auto& v : set) out += (out.size() > 1 ? "," : "") + v;
    return out + "}";
}

std::string join(const Path& path) {
    std::string out;
    for (const auto& v : path) out += (out.empty() ? "" : " ") + v;
    return out;
}

SimpleGraph load_graph(const std::string& path) { return graph_from_json(read_json_file(path)); }
Bipartition load_partition(const std::string& path) { return partition_from_json(read_json_file(path)); }
FiniteSemimetricSpace load_space(const std::string& path) { return space_from_json(read_json_file(path)); }

void require_same_vertices(const SimpleGraph& graph, const VertexSet& other, std::string_view what) {
    if (graph.vertices() != other) {
        throw Error(ErrorCode::vertex_mismatch, std::string(what) + " does not match the graph's vertex set");
    }
}

// Writes JSON either to the given file or after the verdict on out.
void emit_json(const nlohmann::json& j, const std::string& path, std::ostream& out) {
    if (path.empty()) {
        out << j.dump(2) << '\n';
    } else {
        write_json_file(path, j);
        out << "written: " << path << '\n';
    }
}

void emit_text(const std::string& text, const std::string& path, std::ostream& out) {
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(path);
    if (!(file << text)) throw Error(ErrorCode::format, "cannot write '" + path + "'");
    out << "written: " << path << '\n';
}

// Upper bound on exhaustive sweep sizes: 6, or PROXIGRAPH_MAX_N capped at 7.
int exhaustive_limit() {
    const char* raw = std::getenv("PROXIGRAPH_MAX_N");
    if (raw == nullptr || *raw == '\0') return kMaxEnumeratedVertices;
    int value = 0;
    const std::string_view text(raw);
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size() || value < 1) {
        throw Error(ErrorCode::usage, "PROXIGRAPH_MAX_N must be a positive integer");
    }
    return std::min(value, kHardMaxEnumeratedVertices);
}

// ---- classify --------------------------------------------------------------

struct ClassifyArgs {
    std::string space;
};

int cmd_classify(const ClassifyArgs& a, std::ostream& out) {
    out << to_string(classify(load_space(a.space))) << '\n';
    return kExitTrue;
}

// ---- check -----------------------------------------------------------------

struct CheckArgs {
    std::string kind;
    std::string graph;
    std::string partition;
    std::string space;
    std::string certificate;
};

int check_path_bipartite(const SimpleGraph& g, const Bipartition& p, std::ostream& out) {
    const auto bad = one_sided_components(g, p);
    out << verdict(bad.empty()) << '\n';
    if (bad.empty()) {
        out << "every component meets both parts\n";
    } else {
        for (const auto& c : bad) {
            const bool meets_a = std::any_of(c.begin(), c.end(), [&](const Label& v) { return p.in_a(v); });
            out << "component " << join(c) << " misses " << (meets_a ? "B" : "A") << '\n';
        }
    }
    return status(bad.empty());
}

int check_path_complete(const SimpleGraph& g, const Bipartition& p, std::ostream& out) {
    const auto pairs = bpath_pairs(g, p);
    const std::size_t full = p.a().size() * p.b().size();
    const bool complete = pairs.size() == full;
    out << verdict(complete) << '\n';
    out << "B_path has " << pairs.size() << " of " << full << " cross pairs\n";
    if (!complete) {
        for (const auto& a : p.a()) {
            for (const auto& b : p.b()) {
                if (!pairs.contains({a, b})) {
                    out << "missing: (" << a << "," << b << ")\n";
                    return kExitFalse;
                }
            }
        }
    }
    return status(complete);
}

int check_path_proximinal(const SimpleGraph& g, const Bipartition& p, const FiniteSemimetricSpace& s, std::ostream& out) {
    const bool ok = verify_path_proximinal(g, p, s);
    out << verdict(ok) << '\n';
    out << "dist(A,B) = " << format_rational(set_distance(s, p.a(), p.b())) << '\n';
    const SimpleGraph threshold = build_threshold_graph(s, p);
    if (threshold != g) {
        for (const auto& e : threshold.edges()) {
            if (!g.edges().contains(e)) out << "edge missing from graph: {" << e.first << "," << e.second << "}\n";
        }
        for (const auto& e : g.edges()) {
            if (!threshold.edges().contains(e)) out << "edge above threshold: {" << e.first << "," << e.second << "}\n";
        }
    }
    for (const auto& c : one_sided_components(g, p)) out << "component " << join(c) << " misses a part\n";
    return status(ok);
}

int check_proximinal(const SimpleGraph& g, const Bipartition& p, const FiniteSemimetricSpace& s, std::ostream& out) {
    const bool ok = verify_proximinal_graph(g, p, s);
    const auto report = proximity_report(s, p);
    out << verdict(ok) << '\n';
    out << "dist(A,B) = " << format_rational(report.distance) << '\n';
    out << "best proximity pairs: " << report.pairs.size() << ", graph edges: " << g.size() << '\n';
    if (!is_bipartite_with_parts(g, p)) out << "graph has an edge inside one part\n";
    return status(ok);
}

int cmd_check(const CheckArgs& a, std::ostream& out) {
    std::optional<SimpleGraph> graph;
    std::optional<Bipartition> parts;
    std::optional<FiniteSemimetricSpace> space;
    if (!a.certificate.empty()) {
        auto cert = certificate_from_json(read_json_file(a.certificate));
        graph = std::move(cert.graph);
        parts = std::move(cert.parts);
        space = std::move(cert.space);
    } else {
        if (a.graph.empty() || a.partition.empty()) {
            throw Error(ErrorCode::usage, "check needs GRAPH and PARTITION files or --certificate");
        }
        graph = load_graph(a.graph);
        parts = load_partition(a.partition);
        if (!a.space.empty()) space = load_space(a.space);
    }
    require_same_vertices(*graph, parts->all(), "partition");
    if (space) require_same_vertices(*graph, space->point_set(), "space");

    if (a.kind == "path-bipartite") return check_path_bipartite(*graph, *parts, out);
    if (a.kind == "path-complete") return check_path_complete(*graph, *parts, out);
    if (!space) throw Error(ErrorCode::missing_space_file, "check " + a.kind + " needs a space file");
    if (a.kind == "path-proximinal") return check_path_proximinal(*graph, *parts, *space, out);
    return check_proximinal(*graph, *parts, *space, out);
}

// ---- bpath -----------------------------------------------------------------

struct BpathArgs {
    std::string graph;
    std::string partition;
    std::vector<std::string> witness;
    bool quotient = false;
};

int cmd_bpath(const BpathArgs& a, std::ostream& out) {
    const SimpleGraph g = load_graph(a.graph);
    const Bipartition p = load_partition(a.partition);
    require_same_vertices(g, p.all(), "partition");

    if (!a.witness.empty()) {
        const auto w = be_path_witness(g, p, a.witness[0], a.witness[1]);
        if (!w) {
            out << "false: pair-not-in-bpath\n";
            out << "no be-path joins " << a.witness[0] << " and " << a.witness[1] << '\n';
            return kExitFalse;
        }
        out << "true\n" << join(w->path) << '\n';
        out << "crossing edge: {" << w->crossing_edge().first << "," << w->crossing_edge().second << "}\n";
        return kExitTrue;
    }

    const auto pairs = bpath_pairs(g, p);
    out << pairs.size() << '\n';
    if (a.quotient) {
        const auto q = quotient_graph(g, p);
        out << "// complete bipartite: " << verdict(is_complete_bipartite(q)) << '\n';
        out << to_dot(q);
        return kExitTrue;
    }
    for (const auto& [x, y] : pairs) out << x << ' ' << y << '\n';
    return kExitTrue;
}

// ---- witness ---------------------------------------------------------------

struct WitnessArgs {
    std::string kind;
    std::string graph;
    std::string partition;
    std::string output;
};

int refuse(std::ostream& out, std::string_view token, const std::string& detail) {
    out << "false: " << token << '\n' << detail << '\n';
    return kExitFalse;
}

int cmd_witness(const WitnessArgs& a, std::ostream& out) {
    const SimpleGraph g = load_graph(a.graph);
    if (g.order() == 0) return refuse(out, to_string(ErrorCode::empty_graph), "the graph has no vertices");

    if (a.kind == "ultrametric") {
        const auto cert = witness_ultrametric(g);
        if (!cert) {
            for (const auto& v : g.vertices()) {
                if (g.degree(v) != 1) {
                    return refuse(out, "not-degree-one", "vertex " + v + " has degree " + std::to_string(g.degree(v)));
                }
            }
        }
        if (!verify_certificate(*cert) || !satisfies_strong_triangle_inequality(cert->space)) {
            throw Error(ErrorCode::precondition_violation, "ultrametric witness failed re-verification");
        }
        out << "true\nUltrametric; dist(A,B) = 1\n";
        emit_json(certificate_to_json(*cert), a.output, out);
        return kExitTrue;
    }

    if (a.partition.empty()) throw Error(ErrorCode::usage, "witness " + a.kind + " needs a PARTITION file");
    const Bipartition p = load_partition(a.partition);
    require_same_vertices(g, p.all(), "partition");

    std::optional<FiniteSemimetricSpace> space;
    try {
        space = a.kind == "metric" ? witness_metric_for_path_bipartite(g, p) : witness_proximinal_metric(g, p);
    } catch (const Error& e) {
        if (e.code() == ErrorCode::not_path_bipartite || e.code() == ErrorCode::not_bipartite_with_parts ||
            e.code() == ErrorCode::empty_graph) {
            return refuse(out, to_string(e.code()), e.what());
        }
        throw;
    }
    const bool verified =
        a.kind == "metric" ? verify_path_proximinal(g, p, *space) : verify_proximinal_graph(g, p, *space);
    if (!verified) throw Error(ErrorCode::precondition_violation, "witness metric failed re-verification");
    out << "true\n" << to_string(classify(*space)) << "; dist(A,B) = " << format_rational(set_distance(*space, p.a(), p.b()))
        << '\n';
    emit_json(space_to_json(*space), a.output, out);
    return kExitTrue;
}

// ---- verify ----------------------------------------------------------------

struct VerifyArgs {
    std::string id;
    std::optional<int> min_n;
    std::optional<int> max_n;
    std::optional<std::size_t> instances;
    std::optional<std::uint64_t> seed;
    unsigned jobs = 1;
};

SweepReport verify_one(const std::string& id, const VerifyArgs& a, int limit, std::ostream& err) {
    SweepOptions o = default_sweep_options(id);
    const bool exhaustive = o.max_n > 0;
    if (a.min_n) o.min_n = *a.min_n;
    if (a.max_n) o.max_n = *a.max_n;
    if (a.instances) o.instances = *a.instances;
    if (a.seed) o.seed = *a.seed;
    o.jobs = a.jobs;
    o.progress = &err;
    if (exhaustive && o.max_n > limit) {
        throw Error(ErrorCode::bound_exceeded, "max-n " + std::to_string(o.max_n) + " exceeds the exhaustive limit " +
                                                   std::to_string(limit) + " (raise with PROXIGRAPH_MAX_N, at most " +
                                                   std::to_string(kHardMaxEnumeratedVertices) + ")");
    }
    err << "[" << id << "] running\n";
    return run_sweep(id, o);
}

void print_report(const SweepReport& r, std::ostream& out) {
    out << r.id << ": " << (r.passed() ? "pass" : "FAIL") << ", checked " << r.checked << '\n';
    for (const auto& d : r.details) out << "  " << d << '\n';
    out << "  counterexample: " << r.counterexample.value_or("none") << '\n';
}

int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
    const int limit = exhaustive_limit();
    std::vector<SweepReport> reports;
    if (a.id == "all") {
        for (const auto& info : sweep_catalog()) reports.push_back(verify_one(info.id, a, limit, err));
    } else {
        reports.push_back(verify_one(a.id, a, limit, err));
    }
    const bool ok = std::all_of(reports.begin(), reports.end(), [](const SweepReport& r) { return r.passed(); });
    out << verdict(ok) << '\n';
    for (const auto& r : reports) print_report(r, out);
    return status(ok);
}

// ---- example ---------------------------------------------------------------

struct ExampleArgs {
    std::string name;
    std::string dir;
    TruncationParams truncation;
};

// Collects re-checked claims; the verdict is true iff every claim holds.
class Report {
public:
    void claim(bool holds, const std::string& line) {
        all_ &= holds;
        lines_.push_back((holds ? "" : "MISMATCH: ") + line);
    }
    void note(const std::string& line) { lines_.push_back(line); }
    int emit(std::ostream& out) const {
        out << verdict(all_) << '\n';
        for (const auto& l : lines_) out << l << '\n';
        return status(all_);
    }

private:
    bool all_ = true;
    std::vector<std::string> lines_;
};

struct Bundle {
    std::optional<SimpleGraph> graph;
    std::optional<Bipartition> parts;
    std::optional<FiniteSemimetricSpace> space;
};

void write_bundle(const Bundle& b, const fs::path& dir, Report& report) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw Error(ErrorCode::format, "cannot create '" + dir.string() + "': " + ec.message());
    if (b.graph) write_json_file(dir / "graph.json", graph_to_json(*b.graph));
    if (b.parts) write_json_file(dir / "partition.json", partition_to_json(*b.parts));
    if (b.space) write_json_file(dir / "space.json", space_to_json(*b.space));
    if (b.graph && b.parts && b.space) {
        write_json_file(dir / "certificate.json",
                        nlohmann::json{{"graph", graph_to_json(*b.graph)},
                                       {"partition", partition_to_json(*b.parts)},
                                       {"space", space_to_json(*b.space)}});
    }
    report.note("bundle: " + dir.string());
}

std::string fraction(const Rational& r) { return format_rational(r); }

FiniteSemimetricSpace restrict_space(const FiniteSemimetricSpace& s, const VertexSet& subset) {
    return space_from_function(std::vector<Label>(subset.begin(), subset.end()),
                               [&](const Label& x, const Label& y) { return s.distance(x, y); });
}

int example_3_1(const ExampleArgs& a, std::ostream& out) {
    const auto inst = hypercube_example_graph();
    Report r;
    r.claim(inst.graph.order() == 16 && inst.graph.size() == 25, "16 vertices, 25 edges");
    r.claim(is_path_bipartite(inst.graph, inst.parts), "path-bipartite: true");
    const auto pairs = bpath_pairs(inst.graph, inst.parts);
    r.note("B_path: " + std::to_string(pairs.size()) + " pairs");
    for (const auto& n : inst.notes) r.note("note: " + n);
    write_bundle({inst.graph, inst.parts, hypercube_example_space()}, a.dir, r);
    return r.emit(out);
}

int example_3_2(const ExampleArgs& a, std::ostream& out) {
    const auto space = hypercube_example_space();
    const auto parts = hypercube_example_parts();
    const SimpleGraph g = build_threshold_graph(space, parts);
    Report r;
    const Rational d = set_distance(space, parts.a(), parts.b());
    r.claim(d == 1, "dist=" + fraction(d));
    r.claim(g.size() == 32, "threshold graph edges: " + std::to_string(g.size()));
    r.claim(verify_path_proximinal(g, parts, space), "path-proximinal: true");
    const auto pairs = bpath_pairs(g, parts);
    r.claim(pairs.size() == parts.a().size() * parts.b().size(),
            "B_path = AxB (" + std::to_string(pairs.size()) + " pairs); path-complete: true");

    // The listed pairs come from the 25-edge drawing; B_path of that graph is
    // all 64 pairs as well.
    const auto drawn = hypercube_example_graph();
    const auto drawn_pairs = bpath_pairs(drawn.graph, drawn.parts);
    const auto listed = hypercube_example_listed_pairs();
    const bool subset = std::includes(drawn_pairs.begin(), drawn_pairs.end(), listed.begin(), listed.end());
    r.claim(subset && listed.size() < drawn_pairs.size(),
            "listed pairs: " + std::to_string(listed.size()) + ", a strict subset of the " +
                std::to_string(drawn_pairs.size()) + " computed pairs (list flagged as erratum)");
    const auto w = be_path_witness(drawn.graph, drawn.parts, "x2", "x5");
    r.claim(w && !listed.contains({"x2", "x5"}), "omitted pair (x2,x5) has be-path " + (w ? join(w->path) : "none"));
    write_bundle({g, parts, space}, a.dir, r);
    return r.emit(out);
}

int example_3_7(const ExampleArgs& a, std::ostream& out) {
    const auto inst = alternating_path_example();
    Report r;
    r.claim(is_connected(inst.graph), "connected: true");
    r.claim(is_path_bipartite(inst.graph, inst.parts), "path-bipartite: true");
    const auto pairs = bpath_pairs(inst.graph, inst.parts);
    r.claim(pairs.size() == 3, "B_path: " + std::to_string(pairs.size()) + " pairs");
    r.claim(!pairs.contains({"a1", "b2"}), "(a1,b2) excluded");
    r.claim(!is_path_complete(inst.graph, inst.parts), "path-complete: false");
    write_bundle({inst.graph, inst.parts, witness_metric_for_path_bipartite(inst.graph, inst.parts)}, a.dir, r);
    return r.emit(out);
}

int example_3_12(const ExampleArgs& a, std::ostream& out) {
    const auto inst = lattice_truncation(a.truncation);
    const SimpleGraph g = build_threshold_graph(inst.space, inst.parts);
    Report r;
    r.note("N=" + std::to_string(a.truncation.n_max) + " M=" + std::to_string(a.truncation.m_max) +
           " K=" + std::to_string(a.truncation.k_max) + ", " + std::to_string(inst.space.size()) + " points");
    const Rational d = set_distance(inst.space, inst.parts.a(), inst.parts.b());
    const bool has_origin_column = a.truncation.m_max >= 1;
    r.claim(!has_origin_column || d == 2, "dist=" + fraction(d));
    r.claim(classify(inst.space) != SpaceClass::semimetric, "class: " + std::string(to_string(classify(inst.space))));
    r.claim(is_path_complete(g, inst.parts), "path-complete: true");
    r.claim(verify_path_proximinal(g, inst.parts, inst.space), "path-proximinal: true");
    for (const auto& n : inst.notes) r.note("note: " + n);
    write_bundle({g, inst.parts, inst.space}, a.dir, r);
    return r.emit(out);
}

int example_3_16(const ExampleArgs& a, std::ostream& out) {
    const auto full = hypercube_example_space();
    const auto parts = hypercube_example_parts();
    const SimpleGraph g = induced_subgraph(build_threshold_graph(full, parts), parts.a());
    Report r;
    const auto isolated = isolated_vertices(g);
    r.claim(isolated == VertexSet{"x1"}, "isolated: " + join(isolated));
    r.claim(!is_path_proximinal_graph(g).has_value(), "x1 isolated; not path-proximinal");
    write_bundle({g, std::nullopt, restrict_space(full, parts.a())}, a.dir, r);
    return r.emit(out);
}

int cmd_example(ExampleArgs a, std::ostream& out) {
    if (a.dir.empty()) a.dir = a.name;
    if (a.name == "ex3.1") return example_3_1(a, out);
    if (a.name == "ex3.2") return example_3_2(a, out);
    if (a.name == "ex3.7") return example_3_7(a, out);
    if (a.name == "ex3.12") return example_3_12(a, out);
    if (a.name == "ex3.16") return example_3_16(a, out);
    throw Error(ErrorCode::unknown_name, "unknown example '" + a.name + "'");
}

// ---- export-dot ------------------------------------------------------------

struct ExportArgs {
    std::string graph;
    std::string partition;
    std::string output;
};

int cmd_export_dot(const ExportArgs& a, std::ostream& out) {
    const SimpleGraph g = load_graph(a.graph);
    std::optional<Bipartition> p;
    if (!a.partition.empty()) {
        p = load_partition(a.partition);
        require_same_vertices(g, p->all(), "partition");
    }
    const std::string dot = to_dot(g, p ? &*p : nullptr);
    out << "true\n";
    emit_text(dot, a.output, out);
    return kExitTrue;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Proximinal and path-proximinal graphs over finite semimetric spaces", "proxigraph"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "proxigraph 0.1.0");

    ClassifyArgs classify_args;
    auto* classify_cmd = app.add_subcommand("classify", "Print Semimetric, Metric or Ultrametric for a space file");
    classify_cmd->add_option("space", classify_args.space, "space file")->required();

    CheckArgs check_args;
    auto* check_cmd = app.add_subcommand("check", "Decide a graph property for a graph and partition");
    check_cmd->add_option("kind", check_args.kind, "property to decide")
        ->required()
        ->check(CLI::IsMember({"path-bipartite", "path-complete", "path-proximinal", "proximinal"}));
    check_cmd->add_option("graph", check_args.graph, "graph file");
    check_cmd->add_option("partition", check_args.partition, "partition file");
    check_cmd->add_option("space", check_args.space, "space file (proximinal kinds)");
    check_cmd->add_option("--certificate", check_args.certificate, "bundle with graph, partition and space");

    BpathArgs bpath_args;
    auto* bpath_cmd = app.add_subcommand("bpath", "List the cross pairs joined by a be-path");
    bpath_cmd->add_option("graph", bpath_args.graph, "graph file")->required();
    bpath_cmd->add_option("partition", bpath_args.partition, "partition file")->required();
    auto* witness_opt = bpath_cmd->add_option("--witness", bpath_args.witness, "print one be-path from a in A to b in B")
                            ->expected(2);
    bpath_cmd->add_flag("--quotient", bpath_args.quotient, "print the quotient graph in DOT")->excludes(witness_opt);

    WitnessArgs witness_args;
    auto* witness_cmd = app.add_subcommand("witness", "Build and re-verify a metric realizing the graph");
    witness_cmd->add_option("kind", witness_args.kind, "witness to build")
        ->required()
        ->check(CLI::IsMember({"metric", "ultrametric", "proximinal-metric"}));
    witness_cmd->add_option("graph", witness_args.graph, "graph file")->required();
    witness_cmd->add_option("partition", witness_args.partition, "partition file (metric kinds)");
    witness_cmd->add_option("-o,--output", witness_args.output, "write the space or bundle here");

    VerifyArgs verify_args;
    auto* verify_cmd = app.add_subcommand("verify", "Run an equivalence sweep; 'all' runs every sweep");
    std::vector<std::string> ids{"all"};
    for (const auto& info : sweep_catalog()) ids.push_back(info.id);
    verify_cmd->add_option("id", verify_args.id, "sweep id")->required()->check(CLI::IsMember(ids));
    verify_cmd->add_option("--min-n", verify_args.min_n, "smallest vertex count")->check(CLI::Range(1, 64));
    verify_cmd->add_option("--max-n", verify_args.max_n, "largest vertex count (exhaustive sweeps)")->check(CLI::Range(1, 64));
    verify_cmd->add_option("--instances", verify_args.instances, "random instances");
    verify_cmd->add_option("--seed", verify_args.seed, "first seed of random sweeps");
    verify_cmd->add_option("--jobs", verify_args.jobs, "worker threads, 0 for all cores");

    ExampleArgs example_args;
    auto* example_cmd = app.add_subcommand("example", "Rebuild a worked example, write its bundle and re-check it");
    example_cmd->add_option("name", example_args.name, "example name")->required();
    example_cmd->add_option("-o,--output-dir", example_args.dir, "bundle directory (default: the example name)");
    example_cmd->add_option("--n", example_args.truncation.n_max, "ex3.12: real-axis points 1..N");
    example_cmd->add_option("--m", example_args.truncation.m_max, "ex3.12: real parts 0..M");
    example_cmd->add_option("--k", example_args.truncation.k_max, "ex3.12: imaginary parts 1..K");

    ExportArgs export_args;
    auto* export_cmd = app.add_subcommand("export-dot", "Write a graph as DOT, optionally marking the parts");
    export_cmd->add_option("graph", export_args.graph, "graph file")->required();
    export_cmd->add_option("partition", export_args.partition, "partition file");
    export_cmd->add_option("-o,--output", export_args.output, "DOT file");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << "help\n" << app.help();
        return kExitTrue;
    } catch (const CLI::CallForAllHelp&) {
        out << "help\n" << app.help("", CLI::AppFormatMode::All);
        return kExitTrue;
    } catch (const CLI::CallForVersion& e) {
        out << e.what() << '\n';
        return kExitTrue;
    } catch (const CLI::ParseError& e) {
        std::string message = e.what();
        std::replace(message.begin(), message.end(), '\n', ' ');
        out << "error: usage: " << message << '\n';
        err << app.help();
        return kExitError;
    }

    try {
        if (*classify_cmd) return cmd_classify(classify_args, out);
        if (*check_cmd) return cmd_check(check_args, out);
        if (*bpath_cmd) return cmd_bpath(bpath_args, out);
        if (*witness_cmd) return cmd_witness(witness_args, out);
        if (*verify_cmd) return cmd_verify(verify_args, out, err);
        if (*example_cmd) return cmd_example(example_args, out);
        if (*export_cmd) return cmd_export_dot(export_args, out);
    } catch (const Error& e) {
        out << "error: " << e.what() << '\n';
        return kExitError;
    } catch (const std::exception& e) {
        out << "error: internal: " << e.what() << '\n';
        return kExitError;
    }
    out << "error: usage: no command\n";
    return kExitError;
}

}  // namespace proxigraph
