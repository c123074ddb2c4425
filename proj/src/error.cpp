#include "proxigraph/error.hpp"

namespace proxigraph {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::invalid_label: return "invalid-label";
        case ErrorCode::duplicate_vertex: return "duplicate-vertex";
        case ErrorCode::loop_edge: return "loop-edge";
        case ErrorCode::unknown_endpoint: return "unknown-endpoint";
        case ErrorCode::unknown_vertex: return "unknown-vertex";
        case ErrorCode::equal_endpoints: return "equal-endpoints";
        case ErrorCode::empty_subset: return "empty-subset";
        case ErrorCode::not_subset: return "not-subset";
        case ErrorCode::empty_part: return "empty-part";
        case ErrorCode::parts_overlap: return "parts-overlap";
        case ErrorCode::parts_not_subset: return "parts-not-subset";
        case ErrorCode::parts_not_covering: return "parts-not-covering";
        case ErrorCode::empty_graph: return "empty-graph";
        case ErrorCode::empty_list: return "empty-list";
        case ErrorCode::not_a_path: return "not-a-path";
        case ErrorCode::wrong_side: return "wrong-side";
        case ErrorCode::size_exceeded: return "size-exceeded";
        case ErrorCode::shape_mismatch: return "shape-mismatch";
        case ErrorCode::asymmetric_entry: return "asymmetric-entry";
        case ErrorCode::nonzero_diagonal: return "nonzero-diagonal";
        case ErrorCode::zero_off_diagonal: return "zero-off-diagonal";
        case ErrorCode::negative_entry: return "negative-entry";
        case ErrorCode::malformed_rational: return "malformed-rational";
        case ErrorCode::unknown_point: return "unknown-point";
        case ErrorCode::not_ultrametric: return "not-ultrametric";
        case ErrorCode::vertex_mismatch: return "vertex-mismatch";
        case ErrorCode::not_bipartite_with_parts: return "not-bipartite-with-parts";
        case ErrorCode::not_path_bipartite: return "not-path-bipartite";
        case ErrorCode::not_a_proximinal_graph: return "not-a-proximinal-graph";
        case ErrorCode::precondition_violation: return "precondition-violation";
        case ErrorCode::out_of_range: return "out-of-range";
        case ErrorCode::probability_out_of_range: return "probability-out-of-range";
        case ErrorCode::too_small: return "too-small";
        case ErrorCode::bound_exceeded: return "bound-exceeded";
        case ErrorCode::unknown_name: return "unknown-name";
        case ErrorCode::missing_space_file: return "missing-space-file";
        case ErrorCode::usage: return "usage";
        case ErrorCode::format: return "format";
    }
    return "unknown";
}

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

}  // namespace proxigraph
