#include <set>
#include <stdexcept>

#include "doctest.h"
#include "sgc/catalog.hpp"
#include "sgc/engine.hpp"

using namespace sgc;

namespace {

int negative_links(const SignedGraph& g) {
    int n = 0;
    for (const Edge& e : g.edges)
        if (e.kind == EdgeKind::NegativeLink) ++n;
    return n;
}

}  // namespace

TEST_CASE("underlying petersen shape") {
    SignedGraph p = underlying_petersen();
    CHECK(p.vertex_count == 10);
    CHECK(p.edges.size() == 15);
    std::vector<int> degree(10, 0);
    for (const Edge& e : p.edges) {
        CHECK(e.kind == EdgeKind::PositiveLink);
        ++degree[static_cast<std::size_t>(e.u)];
        ++degree[static_cast<std::size_t>(e.v)];
    }
    for (int d : degree) CHECK(d == 3);
    // girth 5: no triangles, no 4-cycles; check via adjacency
    auto adjacent = [&p](int a, int b) {
        for (const Edge& e : p.edges)
            if ((e.u == std::min(a, b)) && (e.v == std::max(a, b))) return true;
        return false;
    };
    for (int a = 0; a < 10; ++a)
        for (int b = a + 1; b < 10; ++b)
            for (int c = b + 1; c < 10; ++c) {
                bool triangle = adjacent(a, b) && adjacent(b, c) && adjacent(a, c);
                CHECK_FALSE(triangle);
            }
}

TEST_CASE("underlying complete graphs") {
    CHECK(underlying_complete(5).edges.size() == 10);
    CHECK(underlying_complete(1).edges.empty());
    CHECK_THROWS_AS(underlying_complete(0), std::invalid_argument);
}

TEST_CASE("catalog signatures have the right negative edge patterns") {
    CHECK(negative_links(signed_petersen(1)) == 0);
    CHECK(negative_links(signed_petersen(2)) == 1);
    CHECK(negative_links(signed_petersen(3)) == 2);
    CHECK(negative_links(signed_petersen(4)) == 2);
    CHECK(negative_links(signed_petersen(5)) == 3);
    CHECK(negative_links(signed_petersen(6)) == 3);
    // P6 is the only one with a negative spoke
    bool spoke = false;
    for (const Edge& e : signed_petersen(6).edges)
        if (e.kind == EdgeKind::NegativeLink && e.v == e.u + 5) spoke = true;
    CHECK(spoke);

    CHECK(negative_links(signed_complete(3, 1)) == 0);
    CHECK(negative_links(signed_complete(3, 2)) == 1);
    CHECK(negative_links(signed_complete(4, 3)) == 2);
    CHECK(negative_links(signed_complete(5, 7)) == 4);

    CHECK_THROWS_AS(signed_petersen(0), std::invalid_argument);
    CHECK_THROWS_AS(signed_petersen(7), std::invalid_argument);
    CHECK_THROWS_AS(signed_complete(5, 8), std::invalid_argument);
    CHECK_THROWS_AS(signed_complete(6, 1), std::invalid_argument);
}

TEST_CASE("catalog lookup") {
    CHECK(catalog_lookup("P1").has_value());
    CHECK(*catalog_lookup("P4") == signed_petersen(4));
    CHECK(*catalog_lookup("K5.7") == signed_complete(5, 7));
    CHECK_FALSE(catalog_lookup("P7").has_value());
    CHECK_FALSE(catalog_lookup("K5.8").has_value());
    CHECK_FALSE(catalog_lookup("nonsense").has_value());
    CHECK(catalog_names().size() == 18);
    for (const auto& name : catalog_names()) CHECK(catalog_lookup(name).has_value());
}

TEST_CASE("only the all-positive representatives are balanced") {
    for (const auto& name : catalog_names()) {
        SignedGraph g = *catalog_lookup(name);
        bool all_positive = negative_links(g) == 0;
        CHECK(is_balanced(g) == all_positive);
    }
}

TEST_CASE("catalog representatives are switching inequivalent") {
    // pairwise inequivalent within each family, as distinct classes must be
    for (int i = 1; i <= 6; ++i)
        for (int j = i + 1; j <= 6; ++j)
            CHECK_FALSE(switching_equivalent(signed_petersen(i), signed_petersen(j)));
    for (int i = 1; i <= 7; ++i)
        for (int j = i + 1; j <= 7; ++j)
            CHECK_FALSE(switching_equivalent(signed_complete(5, i), signed_complete(5, j)));
}

TEST_CASE("signature enumeration") {
    SignedGraph k3 = underlying_complete(3);
    CHECK(signature_count(k3) == 8);
    std::set<std::vector<Edge>> seen;
    for (std::uint64_t i = 0; i < 8; ++i) seen.insert(signature_at(k3, i).edges);
    CHECK(seen.size() == 8);
    CHECK(signature_at(k3, 0) == k3);  // index 0 is all-positive
    CHECK(negative_links(signature_at(k3, 7)) == 3);

    CHECK(signature_count(underlying_petersen()) == 32768);
    CHECK(signature_count(underlying_complete(5)) == 1024);
    CHECK_THROWS_AS(signature_at(k3, 8), std::invalid_argument);
    CHECK_THROWS_AS(signature_count(build_graph(1, {Edge::negative_loop(0)})),
                    std::invalid_argument);

    std::uint64_t visited = 0;
    for (const SignedGraph& g : all_signatures(underlying_complete(4))) {
        CHECK(g.vertex_count == 4);
        ++visited;
    }
    CHECK(visited == 64);
}
