#include "sgc/graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

namespace sgc {

bool is_link(EdgeKind k) {
    return k == EdgeKind::PositiveLink || k == EdgeKind::NegativeLink;
}

bool is_loop(EdgeKind k) {
    return k == EdgeKind::PositiveLoop || k == EdgeKind::NegativeLoop;
}

Edge Edge::link(int a, int b, int sign) {
    if (a == b) throw std::invalid_argument("link endpoints must differ; declare a loop instead");
    if (sign != 1 && sign != -1) throw std::invalid_argument("link sign must be +1 or -1");
    if (a > b) std::swap(a, b);
    return Edge{sign > 0 ? EdgeKind::PositiveLink : EdgeKind::NegativeLink, a, b};
}

Edge Edge::positive_loop(int vertex) { return Edge{EdgeKind::PositiveLoop, vertex, vertex}; }
Edge Edge::negative_loop(int vertex) { return Edge{EdgeKind::NegativeLoop, vertex, vertex}; }
Edge Edge::half_edge(int vertex) { return Edge{EdgeKind::HalfEdge, vertex, vertex}; }

namespace {

void check_vertex(int v, int n) {
    if (v < 0 || v >= n)
        throw std::invalid_argument("vertex " + std::to_string(v) + " out of range 0.." +
                                    std::to_string(n - 1));
}

}  // namespace

SignedGraph build_graph(int vertex_count, std::vector<Edge> edges) {
    if (vertex_count < 0) throw std::invalid_argument("negative vertex count");
    for (auto& e : edges) {
        if (is_link(e.kind)) {
            check_vertex(e.u, vertex_count);
            check_vertex(e.v, vertex_count);
            if (e.u == e.v)
                throw std::invalid_argument("link endpoints must differ; declare a loop instead");
            if (e.u > e.v) std::swap(e.u, e.v);
        } else {
            check_vertex(e.u, vertex_count);
            e.v = e.u;
        }
    }
    std::sort(edges.begin(), edges.end());
    return SignedGraph{vertex_count, std::move(edges), false};
}

SignedGraph switch_graph(const SignedGraph& g, const SignVector& s) {
    if (static_cast<int>(s.signs.size()) != g.vertex_count)
        throw std::invalid_argument("switching vector size does not match vertex count");
    for (int v : s.signs)
        if (v != 1 && v != -1) throw std::invalid_argument("switching entries must be +1 or -1");
    SignedGraph out = g;
    for (auto& e : out.edges) {
        if (!is_link(e.kind)) continue;
        if (s.signs[e.u] * s.signs[e.v] < 0)
            e.kind = e.kind == EdgeKind::PositiveLink ? EdgeKind::NegativeLink
                                                      : EdgeKind::PositiveLink;
    }
    std::sort(out.edges.begin(), out.edges.end());
    return out;
}

SignedGraph delete_edge(const SignedGraph& g, std::size_t index) {
    if (index >= g.edges.size()) throw std::out_of_range("edge index out of range");
    SignedGraph out = g;
    out.edges.erase(out.edges.begin() + static_cast<std::ptrdiff_t>(index));
    return out;
}

SignedGraph contract_positive_link(const SignedGraph& g, std::size_t index) {
    if (index >= g.edges.size()) throw std::out_of_range("edge index out of range");
    const Edge& e = g.edges[index];
    if (e.kind != EdgeKind::PositiveLink)
        throw std::invalid_argument("contract_positive_link: edge is not a positive link");
    const int a = e.u, b = e.v;
    auto map = [a, b](int x) { return x == b ? a : (x > b ? x - 1 : x); };
    SignedGraph out;
    out.vertex_count = g.vertex_count - 1;
    out.improper = g.improper;
    out.edges.reserve(g.edges.size() - 1);
    for (std::size_t j = 0; j < g.edges.size(); ++j) {
        if (j == index) continue;
        const Edge& f = g.edges[j];
        if (is_link(f.kind)) {
            int x = map(f.u), y = map(f.v);
            if (x == y)
                out.edges.push_back(f.kind == EdgeKind::PositiveLink ? Edge::positive_loop(x)
                                                                     : Edge::negative_loop(x));
            else
                out.edges.push_back(
                    Edge::link(x, y, f.kind == EdgeKind::PositiveLink ? 1 : -1));
        } else {
            out.edges.push_back(Edge{f.kind, map(f.u), map(f.u)});
        }
    }
    std::sort(out.edges.begin(), out.edges.end());
    return out;
}

SignedGraph contract_negative_loop(const SignedGraph& g, std::size_t index) {
    if (index >= g.edges.size()) throw std::out_of_range("edge index out of range");
    const Edge& e = g.edges[index];
    if (e.kind != EdgeKind::NegativeLoop)
        throw std::invalid_argument("contract_negative_loop: edge is not a negative loop");
    const int v = e.u;
    for (std::size_t j = 0; j < g.edges.size(); ++j) {
        if (j == index) continue;
        const Edge& f = g.edges[j];
        if (!is_link(f.kind) && f.u == v)
            throw std::invalid_argument(
                "contract_negative_loop: another loop or half edge at the vertex; reduce first");
    }
    auto map = [v](int x) { return x > v ? x - 1 : x; };
    SignedGraph out;
    out.vertex_count = g.vertex_count - 1;
    out.improper = g.improper;
    out.edges.reserve(g.edges.size() - 1);
    for (std::size_t j = 0; j < g.edges.size(); ++j) {
        if (j == index) continue;
        const Edge& f = g.edges[j];
        if (is_link(f.kind)) {
            if (f.u == v)
                out.edges.push_back(Edge::half_edge(map(f.v)));
            else if (f.v == v)
                out.edges.push_back(Edge::half_edge(map(f.u)));
            else
                out.edges.push_back(Edge{f.kind, map(f.u), map(f.v)});
        } else {
            out.edges.push_back(Edge{f.kind, map(f.u), map(f.u)});
        }
    }
    std::sort(out.edges.begin(), out.edges.end());
    return out;
}

SignedGraph reduce(const SignedGraph& g) {
    SignedGraph out;
    out.vertex_count = g.vertex_count;
    out.improper = g.improper;
    out.edges.reserve(g.edges.size());
    for (const Edge& e : g.edges) {
        if (e.kind == EdgeKind::PositiveLoop)
            out.improper = true;
        else if (e.kind == EdgeKind::HalfEdge)
            out.edges.push_back(Edge::negative_loop(e.u));
        else
            out.edges.push_back(e);
    }
    std::sort(out.edges.begin(), out.edges.end());
    out.edges.erase(std::unique(out.edges.begin(), out.edges.end()), out.edges.end());
    return out;
}

bool is_reduced(const SignedGraph& g) {
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
        const Edge& e = g.edges[i];
        if (e.kind == EdgeKind::PositiveLoop || e.kind == EdgeKind::HalfEdge) return false;
        if (i > 0 && g.edges[i - 1] == e) return false;
    }
    return true;
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

std::vector<SignedGraph> split_components(const SignedGraph& g) {
    UnionFind uf(g.vertex_count);
    for (const Edge& e : g.edges)
        if (is_link(e.kind)) uf.unite(e.u, e.v);

    // Component ids in order of smallest member vertex; vertices keep
    // their relative order inside each component.
    std::vector<int> comp_of(g.vertex_count, -1), local(g.vertex_count, -1);
    int comps = 0;
    std::vector<int> comp_size;
    for (int v = 0; v < g.vertex_count; ++v) {
        int r = uf.find(v);
        if (comp_of[r] == -1) {
            comp_of[r] = comps++;
            comp_size.push_back(0);
        }
        comp_of[v] = comp_of[r];
        local[v] = comp_size[comp_of[v]]++;
    }
    std::vector<SignedGraph> out(comps);
    for (int c = 0; c < comps; ++c) {
        out[c].vertex_count = comp_size[c];
        out[c].improper = g.improper;
    }
    for (const Edge& e : g.edges) {
        SignedGraph& target = out[comp_of[e.u]];
        target.edges.push_back(Edge{e.kind, local[e.u], local[e.v]});
    }
    // Local indexing is monotone per component, so edge order survives.
    return out;
}

std::optional<SignVector> balance_witness(const SignedGraph& g) {
    std::vector<std::vector<std::pair<int, int>>> adj(g.vertex_count);
    for (const Edge& e : g.edges) {
        if (e.kind == EdgeKind::NegativeLoop || e.kind == EdgeKind::HalfEdge) return std::nullopt;
        if (!is_link(e.kind)) continue;  // positive loops are positive cycles
        int sgn = e.kind == EdgeKind::PositiveLink ? 1 : -1;
        adj[e.u].emplace_back(e.v, sgn);
        adj[e.v].emplace_back(e.u, sgn);
    }
    std::vector<int> signs(g.vertex_count, 0);
    std::vector<int> queue;
    for (int root = 0; root < g.vertex_count; ++root) {
        if (signs[root] != 0) continue;
        signs[root] = 1;
        queue.assign(1, root);
        while (!queue.empty()) {
            int v = queue.back();
            queue.pop_back();
            for (auto [w, sgn] : adj[v]) {
                int want = signs[v] * sgn;
                if (signs[w] == 0) {
                    signs[w] = want;
                    queue.push_back(w);
                } else if (signs[w] != want) {
                    return std::nullopt;
                }
            }
        }
    }
    return SignVector{std::move(signs)};
}

bool is_balanced(const SignedGraph& g) { return balance_witness(g).has_value(); }

bool switching_equivalent(const SignedGraph& a, const SignedGraph& b) {
    if (a.vertex_count != b.vertex_count)
        throw std::invalid_argument("switching_equivalent: vertex counts differ");

    // Underlying supports: per vertex pair the link count, per vertex the
    // loop count and half edge count, signs ignored.
    struct Support {
        std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>> links;  // (u,v) -> (neg, total)
        std::vector<std::pair<int, int>> loops;  // per vertex (neg, total)
        std::vector<int> halves;                 // per vertex count
    };
    auto collect = [](const SignedGraph& g) {
        Support s;
        s.loops.assign(g.vertex_count, {0, 0});
        s.halves.assign(g.vertex_count, 0);
        for (const Edge& e : g.edges) {
            switch (e.kind) {
                case EdgeKind::PositiveLink:
                case EdgeKind::NegativeLink: {
                    std::pair<int, int> key{e.u, e.v};
                    if (s.links.empty() || s.links.back().first != key)
                        s.links.push_back({key, {0, 0}});
                    s.links.back().second.second++;
                    if (e.kind == EdgeKind::NegativeLink) s.links.back().second.first++;
                    break;
                }
                case EdgeKind::PositiveLoop:
                case EdgeKind::NegativeLoop:
                    s.loops[e.u].second++;
                    if (e.kind == EdgeKind::NegativeLoop) s.loops[e.u].first++;
                    break;
                case EdgeKind::HalfEdge:
                    s.halves[e.u]++;
                    break;
            }
        }
        std::sort(s.links.begin(), s.links.end());
        // Parallel classes of mixed sign appear once per sign kind; merge.
        std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>> merged;
        for (auto& item : s.links) {
            if (!merged.empty() && merged.back().first == item.first) {
                merged.back().second.first += item.second.first;
                merged.back().second.second += item.second.second;
            } else {
                merged.push_back(item);
            }
        }
        s.links = std::move(merged);
        return s;
    };
    Support sa = collect(a), sb = collect(b);

    auto same_support = [&] {
        if (sa.halves != sb.halves) return false;
        if (sa.loops.size() != sb.loops.size()) return false;
        for (std::size_t i = 0; i < sa.loops.size(); ++i)
            if (sa.loops[i].second != sb.loops[i].second) return false;
        if (sa.links.size() != sb.links.size()) return false;
        for (std::size_t i = 0; i < sa.links.size(); ++i)
            if (sa.links[i].first != sb.links[i].first ||
                sa.links[i].second.second != sb.links[i].second.second)
                return false;
        return true;
    };
    if (!same_support())
        throw std::invalid_argument("switching_equivalent: different underlying graphs");

    // Switching never changes a loop's sign.
    for (std::size_t i = 0; i < sa.loops.size(); ++i)
        if (sa.loops[i].first != sb.loops[i].first) return false;

    // A parallel class is flipped as a whole: its sign multisets must be
    // equal (forcing s_u s_v = +1), opposite (forcing -1), or both when
    // the class is self-opposite, which leaves s_u s_v free.
    std::vector<Edge> constraints;
    for (std::size_t i = 0; i < sa.links.size(); ++i) {
        auto [u, v] = sa.links[i].first;
        int na = sa.links[i].second.first, nb = sb.links[i].second.first;
        int total = sa.links[i].second.second;
        bool equal = na == nb, opposite = na == total - nb;
        if (!equal && !opposite) return false;
        if (equal && opposite) continue;
        constraints.push_back(Edge::link(u, v, equal ? 1 : -1));
    }
    return is_balanced(build_graph(a.vertex_count, std::move(constraints)));
}

IncidenceMatrix encode_incidence(const SignedGraph& g) {
    if (!is_reduced(g))
        throw std::invalid_argument("encode_incidence: graph is not reduced");
    IncidenceMatrix m;
    m.rows = g.vertex_count;
    m.cols = static_cast<int>(g.edges.size());
    m.entries.assign(static_cast<std::size_t>(m.rows) * m.cols, 0);
    for (int j = 0; j < m.cols; ++j) {
        const Edge& e = g.edges[static_cast<std::size_t>(j)];
        switch (e.kind) {
            case EdgeKind::PositiveLink:
                m.at(e.u, j) = 1;
                m.at(e.v, j) = -1;
                break;
            case EdgeKind::NegativeLink:
                m.at(e.u, j) = 1;
                m.at(e.v, j) = 1;
                break;
            case EdgeKind::NegativeLoop:
                m.at(e.u, j) = 1;
                break;
            default:
                throw std::invalid_argument("encode_incidence: graph is not reduced");
        }
    }
    return m;
}

SignedGraph decode_incidence(const IncidenceMatrix& m) {
    std::vector<Edge> edges;
    for (int j = 0; j < m.cols; ++j) {
        int r1 = -1, r2 = -1;
        for (int r = 0; r < m.rows; ++r) {
            int x = m.at(r, j);
            if (x == 0) continue;
            if (x != 1 && x != -1)
                throw std::invalid_argument("decode_incidence: entry outside {-1,0,+1} in column " +
                                            std::to_string(j));
            if (r1 == -1)
                r1 = r;
            else if (r2 == -1)
                r2 = r;
            else
                throw std::invalid_argument(
                    "decode_incidence: more than two nonzeros in column " + std::to_string(j));
        }
        if (r1 == -1) continue;  // loose edge
        if (r2 == -1) {
            edges.push_back(Edge::half_edge(r1));
        } else {
            int sum = m.at(r1, j) + m.at(r2, j);
            edges.push_back(Edge::link(r1, r2, sum == 0 ? 1 : -1));
        }
    }
    return build_graph(m.rows, std::move(edges));
}

}  // namespace sgc
