#include "sgc/engine.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>

namespace sgc {

namespace {

const IntPolynomial kOne(BigInt(1));
// 2k and 2k+1 as reusable factors.
const IntPolynomial kTwoK = IntPolynomial::from_coeffs({BigInt(0), BigInt(2)});
const IntPolynomial kTwoKPlusOne = IntPolynomial::from_coeffs({BigInt(1), BigInt(2)});

// Exact-match subproblem cache. The recursion revisits the same reduced
// component along many delete/contract orders, and a signature sweep
// revisits it across signatures; keys are the packed edge list, with no
// isomorphism folding. Capped so long sweeps cannot grow without bound.
constexpr std::size_t kCacheCapacity = 1u << 19;
thread_local std::unordered_map<std::string, IntPolynomial> subproblem_cache;

void append_int(std::string& key, int value) {
    for (int shift = 0; shift < 32; shift += 8)
        key.push_back(static_cast<char>((value >> shift) & 0xff));
}

std::string cache_key(const SignedGraph& g, bool zero_free) {
    std::string key;
    key.reserve(9 * g.edges.size() + 5);
    key.push_back(static_cast<char>(zero_free));
    append_int(key, g.vertex_count);
    for (const Edge& e : g.edges) {
        key.push_back(static_cast<char>(e.kind));
        append_int(key, e.u);
        append_int(key, e.v);
    }
    return key;
}

IntPolynomial recurse(SignedGraph g, bool zero_free);

// g reduced, connected, improper flag clear, at least one link.
IntPolynomial connected_with_links(SignedGraph g, bool zero_free) {
    std::string key = cache_key(g, zero_free);
    if (auto it = subproblem_cache.find(key); it != subproblem_cache.end()) return it->second;
    std::size_t pivot = select_pivot_edge(g);
    if (g.edges[pivot].kind == EdgeKind::NegativeLink) {
        // Make the pivot positive by switching at its smaller endpoint,
        // then find it again in the re-sorted edge list.
        Edge e = g.edges[pivot];
        SignVector s;
        s.signs.assign(static_cast<std::size_t>(g.vertex_count), 1);
        s.signs[static_cast<std::size_t>(e.u)] = -1;
        g = switch_graph(g, s);
        Edge want{EdgeKind::PositiveLink, e.u, e.v};
        auto it = std::lower_bound(g.edges.begin(), g.edges.end(), want);
        pivot = static_cast<std::size_t>(it - g.edges.begin());
    }
    IntPolynomial del = recurse(delete_edge(g, pivot), zero_free);
    IntPolynomial con = recurse(contract_positive_link(g, pivot), zero_free);
    IntPolynomial out = del - con;
    if (subproblem_cache.size() >= kCacheCapacity) subproblem_cache.clear();
    subproblem_cache.emplace(std::move(key), out);
    return out;
}

IntPolynomial recurse(SignedGraph g, bool zero_free) {
    g = reduce(g);
    if (g.improper) return IntPolynomial();
    bool any_link = false;
    for (const Edge& e : g.edges)
        if (is_link(e.kind)) {
            any_link = true;
            break;
        }
    if (!any_link) return loops_only_closed_form(g, zero_free);
    std::vector<SignedGraph> comps = split_components(g);
    if (comps.size() == 1) return connected_with_links(std::move(comps.front()), zero_free);
    IntPolynomial out = kOne;
    for (SignedGraph& c : comps) {
        bool comp_link = false;
        for (const Edge& e : c.edges)
            if (is_link(e.kind)) {
                comp_link = true;
                break;
            }
        out *= comp_link ? connected_with_links(std::move(c), zero_free)
                         : loops_only_closed_form(c, zero_free);
        if (out.is_zero()) break;
    }
    return out;
}

}  // namespace

std::size_t select_pivot_edge(const SignedGraph& g) {
    // Sorted order puts positive links first, then negative links, so
    // the first link in the list is the pivot.
    for (std::size_t i = 0; i < g.edges.size(); ++i)
        if (is_link(g.edges[i].kind)) return i;
    throw std::invalid_argument("select_pivot_edge: graph has no links");
}

IntPolynomial loops_only_closed_form(const SignedGraph& g, bool zero_free) {
    for (const Edge& e : g.edges)
        if (is_link(e.kind)) throw std::invalid_argument("loops_only_closed_form: graph has links");
    if (g.improper) return IntPolynomial();
    if (zero_free) return pow(kTwoK, static_cast<unsigned long>(g.vertex_count));
    // Reduced form has at most one loop per vertex; tolerate unreduced
    // input by counting distinct looped vertices.
    std::vector<bool> seen(static_cast<std::size_t>(g.vertex_count), false);
    int looped = 0;
    for (const Edge& e : g.edges) {
        if (e.kind != EdgeKind::NegativeLoop && e.kind != EdgeKind::HalfEdge) continue;
        if (!seen[static_cast<std::size_t>(e.u)]) {
            seen[static_cast<std::size_t>(e.u)] = true;
            ++looped;
        }
    }
    return pow(kTwoK, static_cast<unsigned long>(looped)) *
           pow(kTwoKPlusOne, static_cast<unsigned long>(g.vertex_count - looped));
}

IntPolynomial chromatic_polynomial(const SignedGraph& g) { return recurse(g, false); }

IntPolynomial zero_free_polynomial(const SignedGraph& g) { return recurse(g, true); }

}  // namespace sgc
