#pragma once

#include <random>
#include <vector>

#include "sgc/graph.hpp"

// Deterministic random signed multigraphs for the property suites.
namespace testutil {

inline sgc::SignedGraph random_graph(std::mt19937& rng, int max_n = 6, int max_m = 10,
                                     bool allow_positive_loops = true) {
    std::uniform_int_distribution<int> vertex_count(1, max_n);
    int n = vertex_count(rng);
    std::uniform_int_distribution<int> edge_count(0, max_m);
    int m = edge_count(rng);
    std::uniform_int_distribution<int> vertex(0, n - 1);
    std::uniform_int_distribution<int> roll(0, 99);
    std::vector<sgc::Edge> edges;
    for (int i = 0; i < m; ++i) {
        int r = roll(rng);
        if (n >= 2 && r < 72) {  // mostly links, mixed signs, duplicates welcome
            int u = vertex(rng), v = vertex(rng);
            while (v == u) v = vertex(rng);
            edges.push_back(sgc::Edge::link(u, v, r % 2 ? -1 : 1));
        } else if (r < 84) {
            edges.push_back(sgc::Edge::negative_loop(vertex(rng)));
        } else if (r < 94) {
            edges.push_back(sgc::Edge::half_edge(vertex(rng)));
        } else if (allow_positive_loops && r < 97) {
            edges.push_back(sgc::Edge::positive_loop(vertex(rng)));
        } else {
            edges.push_back(sgc::Edge::negative_loop(vertex(rng)));
        }
    }
    return sgc::build_graph(n, std::move(edges));
}

inline sgc::SignVector random_switching(std::mt19937& rng, int n) {
    sgc::SignVector s;
    std::uniform_int_distribution<int> coin(0, 1);
    for (int i = 0; i < n; ++i) s.signs.push_back(coin(rng) ? 1 : -1);
    return s;
}

}  // namespace testutil
