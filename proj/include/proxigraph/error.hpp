#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace proxigraph {

/// Failure categories reported by the library. Each maps to a stable
/// kebab-case token used in CLI diagnostics.
enum class ErrorCode {
    invalid_label,
    duplicate_vertex,
    loop_edge,
    unknown_endpoint,
    unknown_vertex,
    equal_endpoints,
    empty_subset,
    not_subset,
    empty_part,
    parts_overlap,
    parts_not_subset,
    parts_not_covering,
    empty_graph,
    empty_list,
    not_a_path,
    wrong_side,
    size_exceeded,
    shape_mismatch,
    asymmetric_entry,
    nonzero_diagonal,
    zero_off_diagonal,
    negative_entry,
    malformed_rational,
    unknown_point,
    not_ultrametric,
    vertex_mismatch,
    not_bipartite_with_parts,
    not_path_bipartite,
    not_a_proximinal_graph,
    precondition_violation,
    out_of_range,
    probability_out_of_range,
    too_small,
    bound_exceeded,
    unknown_name,
    missing_space_file,
    usage,
    format,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& detail);

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace proxigraph
