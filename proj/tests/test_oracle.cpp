#include <random>
#include <stdexcept>

#include "doctest.h"
#include "random_graphs.hpp"
#include "sgc/catalog.hpp"
#include "sgc/engine.hpp"
#include "sgc/oracle.hpp"

using namespace sgc;

TEST_CASE("brute-force counts on small graphs") {
    // single vertex: 2k+1 colors, 2k without zero
    SignedGraph point = build_graph(1, {});
    CHECK(count_proper_colorings(point, 3, false) == 7);
    CHECK(count_proper_colorings(point, 3, true) == 6);
    CHECK(count_proper_colorings(point, 0, false) == 1);
    CHECK(count_proper_colorings(point, 0, true) == 0);
    // the empty graph has exactly the empty coloring
    CHECK(count_proper_colorings(build_graph(0, {}), 0, true) == 1);
    // negative loop forbids 0
    CHECK(count_proper_colorings(build_graph(1, {Edge::negative_loop(0)}), 3, false) == 6);
    // positive loop forbids everything
    CHECK(count_proper_colorings(build_graph(1, {Edge::positive_loop(0)}), 3, false) == 0);
    // triangle with one negative edge: 8k^3 at k=1
    CHECK(count_proper_colorings(*catalog_lookup("K3.2"), 1, false) == 8);
}

TEST_CASE("budget refusal") {
    SignedGraph p1 = *catalog_lookup("P1");
    // 7^10 > 10^8
    CHECK_THROWS_AS(count_proper_colorings(p1, 3, false), BudgetExceeded);
    // (2*2+1)^10 with a tiny budget
    CHECK_THROWS_AS(count_proper_colorings(p1, 2, false, BigInt(1000)), BudgetExceeded);
    // the refusal reports the full space size
    try {
        count_proper_colorings(p1, 3, false);
        FAIL("expected refusal");
    } catch (const BudgetExceeded& e) {
        CHECK(e.assignments == boost::multiprecision::pow(BigInt(7), 10));
    }
}

TEST_CASE("counts match the engine on random graphs") {
    std::mt19937 rng(41);
    for (int trial = 0; trial < 60; ++trial) {
        SignedGraph g = testutil::random_graph(rng, 5, 8);
        IntPolynomial c = chromatic_polynomial(g);
        IntPolynomial z = zero_free_polynomial(g);
        for (long long k = 0; k <= 2; ++k) {
            CHECK(count_proper_colorings(g, k, false) == c.eval(BigInt(k)));
            CHECK(count_proper_colorings(g, k, true) == z.eval(BigInt(k)));
        }
    }
}

TEST_CASE("zero-free count equals with-zero count after looping every vertex") {
    std::mt19937 rng(43);
    for (int trial = 0; trial < 40; ++trial) {
        SignedGraph g = testutil::random_graph(rng, 5, 6);
        std::vector<Edge> edges = g.edges;
        for (int v = 0; v < g.vertex_count; ++v) edges.push_back(Edge::negative_loop(v));
        SignedGraph looped = build_graph(g.vertex_count, std::move(edges));
        for (long long k = 0; k <= 2; ++k)
            CHECK(count_proper_colorings(g, k, true) ==
                  count_proper_colorings(looped, k, false));
    }
}

TEST_CASE("interpolation") {
    // (0,1), (1,3), (2,5) -> 2k+1
    IntPolynomial p = interpolate_polynomial({{0, BigInt(1)}, {1, BigInt(3)}, {2, BigInt(5)}});
    CHECK(p == IntPolynomial::from_coeffs({BigInt(1), BigInt(2)}));

    // constant through one point
    CHECK(interpolate_polynomial({{5, BigInt(9)}}) == IntPolynomial(BigInt(9)));

    // duplicate abscissa
    CHECK_THROWS_AS(interpolate_polynomial({{1, BigInt(0)}, {1, BigInt(1)}}),
                    std::invalid_argument);

    // a non-integer coefficient signals a miscount: through (0,0) and (2,1)
    CHECK_THROWS_AS(interpolate_polynomial({{0, BigInt(0)}, {2, BigInt(1)}}), std::domain_error);

    // negative abscissas are fine
    CHECK(interpolate_polynomial({{-1, BigInt(1)}, {0, BigInt(0)}, {1, BigInt(1)}}) ==
          IntPolynomial::from_coeffs({BigInt(0), BigInt(0), BigInt(1)}));
}

TEST_CASE("interpolation reproduces engine polynomials from counts") {
    for (const char* name : {"K3.1", "K3.2", "K4.2"}) {
        SignedGraph g = *catalog_lookup(name);
        std::vector<std::pair<long long, BigInt>> pts;
        for (long long k = 0; k <= g.vertex_count; ++k)
            pts.emplace_back(k, count_proper_colorings(g, k, false));
        CHECK(interpolate_polynomial(pts) == chromatic_polynomial(g));
    }
}

TEST_CASE("cross_validate spot checks and interpolates within budget") {
    SignedGraph k42 = *catalog_lookup("K4.2");
    auto report = cross_validate(k42, 4, false);
    CHECK(report.points.size() == 5);
    for (const auto& p : report.points) {
        REQUIRE(p.oracle_count.has_value());
        CHECK(p.match);
    }
    CHECK(report.interpolation_attempted);
    CHECK(report.interpolation_matches);
    CHECK(report.all_match());

    // edgeless graph on 2 vertices: counts (2k+1)^2
    auto trivial = cross_validate(build_graph(2, {}), 1, false);
    CHECK(trivial.all_match());
    CHECK(trivial.points[1].engine_value == 9);
}

TEST_CASE("cross_validate records refusals without failing") {
    SignedGraph p3 = *catalog_lookup("P3");
    auto report = cross_validate(p3, 2, false);
    for (const auto& p : report.points) {
        REQUIRE(p.oracle_count.has_value());
        CHECK(p.match);
    }
    // interpolation needs counts up to k=10; 21^10 is over budget
    CHECK_FALSE(report.interpolation_attempted);
    CHECK(report.all_match());
}
