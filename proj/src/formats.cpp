#include "proxigraph/formats.hpp"

#include <fstream>
#include <sstream>

#include "proxigraph/error.hpp"

namespace proxigraph {

using nlohmann::json;

namespace {

const json& member(const json& j, const char* key, const char* what) {
    if (!j.is_object()) throw Error(ErrorCode::format, std::string(what) + " must be a JSON object");
    auto it = j.find(key);
    if (it == j.end()) throw Error(ErrorCode::format, std::string(what) + " lacks \"" + key + "\"");
    return *it;
}

std::vector<Label> label_list(const json& j, const char* what) {
    if (!j.is_array()) throw Error(ErrorCode::format, std::string(what) + " must be a list of strings");
    std::vector<Label> out;
    for (const auto& item : j) {
        if (!item.is_string()) throw Error(ErrorCode::format, std::string(what) + " must be a list of strings");
        out.push_back(item.get<std::string>());
    }
    return out;
}

VertexSet label_set(const json& j, const char* what) {
    const auto list = label_list(j, what);
    VertexSet out;
    for (const auto& v : list) {
        if (!out.insert(v).second) throw Error(ErrorCode::duplicate_vertex, "'" + v + "' in " + what);
    }
    return out;
}

Rational rational_from_json(const json& j) {
    if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
    if (j.is_string()) return parse_rational(j.get<std::string>());
    throw Error(ErrorCode::malformed_rational, j.dump());
}

json rational_to_json(const Rational& r) {
    if (r.denominator() == 1) return r.numerator();
    return format_rational(r);
}

std::string quoted(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out + "\"";
}

std::string block_label(const VertexSet& block) {
    std::string out = "{";
    bool first = true;
    for (const auto& v : block) {
        if (!first) out += ",";
        out += v;
        first = false;
    }
    return out + "}";
}

}  // namespace

json graph_to_json(const SimpleGraph& graph) {
    json edges = json::array();
    for (const auto& [u, v] : graph.edges()) edges.push_back({u, v});
    return json{{"vertices", graph.vertices()}, {"edges", edges}};
}

SimpleGraph graph_from_json(const json& j) {
    const auto vertices = label_list(member(j, "vertices", "graph"), "\"vertices\"");
    const json& edges_json = member(j, "edges", "graph");
    if (!edges_json.is_array()) throw Error(ErrorCode::format, "\"edges\" must be a list");
    std::vector<std::pair<Label, Label>> edges;
    for (const auto& e : edges_json) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string()) {
            throw Error(ErrorCode::format, "edge " + e.dump() + " is not a 2-element string list");
        }
        edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
    }
    return build_graph(vertices, edges);
}

json partition_to_json(const Bipartition& parts) {
    return json{{"A", parts.a()}, {"B", parts.b()}};
}

Bipartition partition_from_json(const json& j) {
    return Bipartition(label_set(member(j, "A", "partition"), "\"A\""),
                       label_set(member(j, "B", "partition"), "\"B\""));
}

json space_to_json(const FiniteSemimetricSpace& space) {
    json rows = json::array();
    for (const auto& row : space.table()) {
        json out = json::array();
        for (const auto& v : row) out.push_back(rational_to_json(v));
        rows.push_back(std::move(out));
    }
    return json{{"points", space.points()}, {"distances", rows}};
}

FiniteSemimetricSpace space_from_json(const json& j) {
    auto points = label_list(member(j, "points", "space"), "\"points\"");
    const json& rows = member(j, "distances", "space");
    if (!rows.is_array()) throw Error(ErrorCode::shape_mismatch, "\"distances\" must be a list of rows");
    std::vector<std::vector<Rational>> table;
    for (const auto& row : rows) {
        if (!row.is_array()) throw Error(ErrorCode::shape_mismatch, "every distance row must be a list");
        std::vector<Rational> values;
        for (const auto& v : row) values.push_back(rational_from_json(v));
        table.push_back(std::move(values));
    }
    return build_space(std::move(points), std::move(table));
}

json certificate_to_json(const PathProximinalCertificate& certificate) {
    return json{{"graph", graph_to_json(certificate.graph)},
                {"partition", partition_to_json(certificate.parts)},
                {"space", space_to_json(certificate.space)}};
}

PathProximinalCertificate certificate_from_json(const json& j) {
    return PathProximinalCertificate{graph_from_json(member(j, "graph", "certificate")),
                                     partition_from_json(member(j, "partition", "certificate")),
                                     space_from_json(member(j, "space", "certificate"))};
}

json cross_pairs_to_json(const CrossPairSet& pairs) {
    json out = json::array();
    for (const auto& [a, b] : pairs) out.push_back({a, b});
    return out;
}

json read_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::format, "cannot read " + path.string());
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw Error(ErrorCode::format, path.string() + ": " + e.what());
    }
}

void write_json_file(const std::filesystem::path& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw Error(ErrorCode::format, "cannot write " + path.string());
    out << j.dump(2) << '\n';
}

std::string to_dot(const SimpleGraph& graph, const Bipartition* parts) {
    std::ostringstream out;
    out << "graph G {\n";
    for (const auto& v : graph.vertices()) {
        out << "  " << quoted(v);
        if (parts != nullptr) {
            if (parts->in_a(v)) out << " [part=A, shape=box]";
            else if (parts->in_b(v)) out << " [part=B, shape=ellipse]";
        }
        out << ";\n";
    }
    for (const auto& [u, v] : graph.edges()) out << "  " << quoted(u) << " -- " << quoted(v) << ";\n";
    out << "}\n";
    return out.str();
}

std::string to_dot(const QuotientGraph& quotient) {
    std::ostringstream out;
    out << "graph Q {\n";
    for (std::size_t i = 0; i < quotient.a_components.size(); ++i) {
        out << "  \"A" << i << "\" [shape=box, label=" << quoted(block_label(quotient.a_components[i])) << "];\n";
    }
    for (std::size_t j = 0; j < quotient.b_components.size(); ++j) {
        out << "  \"B" << j << "\" [label=" << quoted(block_label(quotient.b_components[j])) << "];\n";
    }
    for (const auto& [i, j] : quotient.edges) out << "  \"A" << i << "\" -- \"B" << j << "\";\n";
    out << "}\n";
    return out.str();
}

}  // namespace proxigraph
