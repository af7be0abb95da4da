#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "sgc/graph.hpp"

namespace sgc {

struct GraphParseError : std::runtime_error {
    std::size_t line;  // 1-based
    GraphParseError(std::size_t line_no, const std::string& msg);
};

// Line-oriented edge list; '#' starts a comment, blank lines ignored:
//   vertices <n>
//   edge <u> <v> +|-
//   negloop <v>
//   posloop <v>
//   halfedge <v>
// The vertices line must come first.
SignedGraph parse_graph_text(std::string_view text);
std::string write_graph_text(const SignedGraph& g);

// Whitespace-separated integer grid, one matrix row per line;
// '#' comments and blank lines ignored. All rows must have the same
// number of entries (possibly zero entries per row for an edgeless
// graph with rows but no columns).
IncidenceMatrix parse_incidence_text(std::string_view text);
std::string write_incidence_text(const IncidenceMatrix& m);

// True when the first significant token is "vertices".
bool looks_like_edge_list(std::string_view text);

}  // namespace sgc
