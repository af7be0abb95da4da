#include "sgc/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <utility>

namespace sgc {

namespace {

SignedGraph with_negatives(SignedGraph g, const std::vector<std::pair<int, int>>& negatives) {
    for (auto [a, b] : negatives) {
        bool found = false;
        for (auto& e : g.edges) {
            if (e.kind == EdgeKind::PositiveLink && e.u == std::min(a, b) &&
                e.v == std::max(a, b)) {
                e.kind = EdgeKind::NegativeLink;
                found = true;
                break;
            }
        }
        if (!found) throw std::logic_error("catalog: negative edge not in underlying graph");
    }
    std::sort(g.edges.begin(), g.edges.end());
    return g;
}

}  // namespace

SignedGraph underlying_petersen() {
    std::vector<Edge> edges;
    for (int i = 0; i < 5; ++i) {
        edges.push_back(Edge::link(i, (i + 1) % 5, 1));          // outer cycle
        edges.push_back(Edge::link(5 + i, 5 + (i + 2) % 5, 1));  // inner pentagram
        edges.push_back(Edge::link(i, i + 5, 1));                // spoke
    }
    return build_graph(10, std::move(edges));
}

SignedGraph underlying_complete(int n) {
    if (n < 1) throw std::invalid_argument("underlying_complete: need at least one vertex");
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.push_back(Edge::link(i, j, 1));
    return build_graph(n, std::move(edges));
}

SignedGraph signed_petersen(int index) {
    // Outer vertices 0..4 clockwise, inner 5..9 under them; the
    // negative sets below are one representative per switching class.
    switch (index) {
        case 1:
            return underlying_petersen();
        case 2:
            return with_negatives(underlying_petersen(), {{3, 4}});
        case 3:
            return with_negatives(underlying_petersen(), {{2, 3}, {4, 0}});
        case 4:
            return with_negatives(underlying_petersen(), {{3, 4}, {5, 7}});
        case 5:
            return with_negatives(underlying_petersen(), {{2, 3}, {4, 0}, {5, 7}});
        case 6:
            return with_negatives(underlying_petersen(), {{3, 4}, {5, 7}, {1, 6}});
        default:
            throw std::invalid_argument("signed_petersen: index must be 1..6");
    }
}

SignedGraph signed_complete(int order, int variant) {
    auto bad = [order, variant] {
        return std::invalid_argument("signed_complete: no variant " + std::to_string(variant) +
                                     " of order " + std::to_string(order));
    };
    switch (order) {
        case 3:
            switch (variant) {
                case 1:
                    return underlying_complete(3);
                case 2:
                    return with_negatives(underlying_complete(3), {{1, 2}});
                default:
                    throw bad();
            }
        case 4:
            switch (variant) {
                case 1:
                    return underlying_complete(4);
                case 2:
                    return with_negatives(underlying_complete(4), {{2, 3}});
                case 3:
                    return with_negatives(underlying_complete(4), {{0, 1}, {2, 3}});
                default:
                    throw bad();
            }
        case 5:
            switch (variant) {
                case 1:
                    return underlying_complete(5);
                case 2:  // one negative edge
                    return with_negatives(underlying_complete(5), {{3, 4}});
                case 3:  // two disjoint
                    return with_negatives(underlying_complete(5), {{3, 4}, {0, 2}});
                case 4:  // two sharing a vertex
                    return with_negatives(underlying_complete(5), {{0, 1}, {1, 2}});
                case 5:  // two sharing a vertex plus one disjoint
                    return with_negatives(underlying_complete(5), {{0, 1}, {1, 2}, {3, 4}});
                case 6:  // path of three
                    return with_negatives(underlying_complete(5), {{2, 3}, {3, 4}, {4, 0}});
                case 7:  // triangle plus one disjoint
                    return with_negatives(underlying_complete(5), {{0, 1}, {1, 2}, {0, 2}, {3, 4}});
                default:
                    throw bad();
            }
        default:
            throw std::invalid_argument("signed_complete: order must be 3..5");
    }
}

std::optional<SignedGraph> catalog_lookup(std::string_view name) {
    try {
        if (name.size() == 2 && name[0] == 'P' && name[1] >= '1' && name[1] <= '6')
            return signed_petersen(name[1] - '0');
        if (name.size() == 4 && name[0] == 'K' && name[2] == '.' &&
            std::isdigit(static_cast<unsigned char>(name[1])) &&
            std::isdigit(static_cast<unsigned char>(name[3])))
            return signed_complete(name[1] - '0', name[3] - '0');
    } catch (const std::invalid_argument&) {
        return std::nullopt;
    }
    return std::nullopt;
}

std::vector<std::string> catalog_names() {
    std::vector<std::string> names;
    for (int i = 1; i <= 6; ++i) names.push_back("P" + std::to_string(i));
    for (int v = 1; v <= 2; ++v) names.push_back("K3." + std::to_string(v));
    for (int v = 1; v <= 3; ++v) names.push_back("K4." + std::to_string(v));
    for (int v = 1; v <= 7; ++v) names.push_back("K5." + std::to_string(v));
    return names;
}

std::uint64_t signature_count(const SignedGraph& underlying) {
    int links = 0;
    for (const Edge& e : underlying.edges) {
        if (!is_link(e.kind))
            throw std::invalid_argument("signatures require a graph of links only");
        ++links;
    }
    if (links > 63) throw std::invalid_argument("signature space too large");
    return std::uint64_t(1) << links;
}

SignedGraph signature_at(const SignedGraph& underlying, std::uint64_t index) {
    if (index >= signature_count(underlying))
        throw std::invalid_argument("signature index out of range");
    SignedGraph g = underlying;
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
        g.edges[i].kind =
            (index >> i) & 1 ? EdgeKind::NegativeLink : EdgeKind::PositiveLink;
    }
    std::sort(g.edges.begin(), g.edges.end());
    return g;
}

SignatureRange::SignatureRange(SignedGraph underlying)
    : underlying_(std::move(underlying)), count_(signature_count(underlying_)) {}

SignatureRange all_signatures(const SignedGraph& underlying) {
    return SignatureRange(underlying);
}

}  // namespace sgc
