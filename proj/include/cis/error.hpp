#pragma once

#include <stdexcept>
#include <string>

namespace cis {

enum class errc {
    // graph construction
    empty_order,
    order_too_large,
    loop_edge,
    vertex_out_of_range,
    no_edges,
    empty_set,
    isolated_vertex,
    all_vertices_isolated,
    // graph6 codec
    malformed_header,
    truncated_body,
    nonzero_padding,
    trailing_data,
    // enumeration
    enumeration_limit,
    order_too_large_for_coloring,
    // families / groups
    bad_parameter,
    identity_in_connection_set,
    not_inverse_closed,
    bad_group_table,
    // symmetry
    search_budget_exceeded,
    group_too_large,
    not_vertex_transitive,
    // cli
    bad_input,
};

inline const char* errc_name(errc c) {
    switch (c) {
    case errc::empty_order: return "EmptyOrder";
    case errc::order_too_large: return "OrderTooLarge";
    case errc::loop_edge: return "LoopEdge";
    case errc::vertex_out_of_range: return "VertexOutOfRange";
    case errc::no_edges: return "NoEdges";
    case errc::empty_set: return "EmptySet";
    case errc::isolated_vertex: return "IsolatedVertex";
    case errc::all_vertices_isolated: return "AllVerticesIsolated";
    case errc::malformed_header: return "MalformedHeader";
    case errc::truncated_body: return "TruncatedBody";
    case errc::nonzero_padding: return "NonzeroPadding";
    case errc::trailing_data: return "TrailingData";
    case errc::enumeration_limit: return "EnumerationLimitExceeded";
    case errc::order_too_large_for_coloring: return "OrderTooLargeForExactColoring";
    case errc::bad_parameter: return "BadParameter";
    case errc::identity_in_connection_set: return "IdentityInConnectionSet";
    case errc::not_inverse_closed: return "NotInverseClosed";
    case errc::bad_group_table: return "BadGroupTable";
    case errc::search_budget_exceeded: return "SearchBudgetExceeded";
    case errc::group_too_large: return "GroupTooLarge";
    case errc::not_vertex_transitive: return "NotVertexTransitive";
    case errc::bad_input: return "BadInput";
    }
    return "UnknownError";
}

class error : public std::runtime_error {
public:
    error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

} // namespace cis
