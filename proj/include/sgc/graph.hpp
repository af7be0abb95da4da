#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace sgc {

// Edge kinds of a signed graph. Links join two distinct vertices and
// carry a sign; loops and half edges sit at a single vertex. Loose
// edges (no endpoint) never affect colorings and are not represented:
// every construction point drops them.
//
// The enumeration order is the canonical edge sort order, so the first
// edge of a sorted graph is a positive link whenever one exists.
enum class EdgeKind : std::uint8_t {
    PositiveLink,
    NegativeLink,
    PositiveLoop,
    NegativeLoop,
    HalfEdge,
};

bool is_link(EdgeKind k);
bool is_loop(EdgeKind k);  // loops only, not half edges

struct Edge {
    EdgeKind kind;
    int u;  // links: smaller endpoint; loops/half edges: the vertex (u == v)
    int v;

    static Edge link(int a, int b, int sign);  // sign +1 or -1; a != b
    static Edge positive_loop(int vertex);
    static Edge negative_loop(int vertex);
    static Edge half_edge(int vertex);

    auto operator<=>(const Edge&) const = default;
};

// Switching function: signs[v] is +1 or -1 per vertex.
struct SignVector {
    std::vector<int> signs;
};

// Vertices are 0..vertex_count-1. The edge list is kept sorted by
// (kind, u, v) and may contain parallel duplicates until reduce() runs.
// improper is set once a positive loop has been absorbed: no coloring
// is proper, every polynomial of the graph is 0.
struct SignedGraph {
    int vertex_count = 0;
    std::vector<Edge> edges;
    bool improper = false;

    bool operator==(const SignedGraph&) const = default;
};

// Validates endpoints, normalizes link endpoint order, sorts.
// Throws std::invalid_argument on out-of-range vertices or a link with
// equal endpoints (declare those as loops).
SignedGraph build_graph(int vertex_count, std::vector<Edge> edges);

// Switched graph: a link u-v gets sign * s[u]*s[v]; loops and half
// edges are unchanged. An involution when s is applied twice, and all
// chromatic counts are invariant under it.
SignedGraph switch_graph(const SignedGraph& g, const SignVector& s);

// Removes the edge at the given index of the sorted edge list.
SignedGraph delete_edge(const SignedGraph& g, std::size_t index);

// Contracts a positive link a-b: b merges into a (the smaller index),
// vertices above b shift down by one. Parallel links a-b collapse to
// loops at a (negative link -> negative loop, positive link -> positive
// loop); loops and half edges at b move to a.
SignedGraph contract_positive_link(const SignedGraph& g, std::size_t index);

// Contracts a negative loop at v: v disappears and every link at v
// becomes a half edge at its other endpoint. Requires the loop to be
// the only loop or half edge at v (reduce first); otherwise the
// deletion-contraction identity would not hold, so this throws.
SignedGraph contract_negative_loop(const SignedGraph& g, std::size_t index);

// Coloring-preserving normal form:
//   - identical parallel links collapse to one (opposite-sign parallel
//     pairs are NOT merged; they constrain x_u != +-x_v),
//   - half edges and negative loops at a vertex collapse to a single
//     negative loop (both just forbid color 0),
//   - positive loops are removed and improper is set.
SignedGraph reduce(const SignedGraph& g);

bool is_reduced(const SignedGraph& g);

// Connected components (links connect; loops and half edges follow
// their vertex), re-densified preserving relative vertex order, ordered
// by smallest original vertex. An improper flag propagates to every
// component. A graph with no vertices has no components.
std::vector<SignedGraph> split_components(const SignedGraph& g);

// A switching that makes every link positive, when one exists. Half
// edges and negative loops are negative cycles, so they rule it out;
// positive loops are positive cycles and do not.
std::optional<SignVector> balance_witness(const SignedGraph& g);
bool is_balanced(const SignedGraph& g);

// Whether some switching carries a onto b. Throws std::invalid_argument
// unless a and b share the underlying unsigned multigraph (vertex count
// and edge supports with multiplicity).
bool switching_equivalent(const SignedGraph& a, const SignedGraph& b);

// Bidirected incidence matrix, entries in {-1, 0, +1}, one column per
// edge: positive link +1/-1, negative link +1/+1, negative loop or half
// edge a single +1. Row-major storage.
struct IncidenceMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<std::int8_t> entries;

    std::int8_t at(int r, int c) const { return entries[static_cast<std::size_t>(r) * cols + c]; }
    std::int8_t& at(int r, int c) { return entries[static_cast<std::size_t>(r) * cols + c]; }

    bool operator==(const IncidenceMatrix&) const = default;
};

// Requires a reduced edge structure (no positive loops, half edges, or
// duplicate parallel links); the improper flag is not representable and
// is not carried. Columns follow the sorted edge order.
IncidenceMatrix encode_incidence(const SignedGraph& g);

// Columns with a single nonzero decode to half edges (reduce() turns
// them into negative loops); two nonzeros summing to 0 decode to a
// positive link, summing to +-2 a negative link; all-zero columns are
// loose edges and are dropped. Throws std::invalid_argument on a column
// with more than two nonzeros or entries outside {-1, 0, +1}.
SignedGraph decode_incidence(const IncidenceMatrix& m);

}  // namespace sgc
