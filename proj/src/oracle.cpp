#include "sgc/oracle.hpp"

#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

#include "sgc/engine.hpp"

namespace sgc {

namespace {

using boost::multiprecision::cpp_rational;

BigInt power(BigInt base, int exp) {
    BigInt out(1);
    for (int i = 0; i < exp; ++i) out *= base;
    return out;
}

}  // namespace

BigInt count_proper_colorings(const SignedGraph& g, long long k, bool zero_free,
                              const BigInt& budget) {
    if (k < 0) throw std::invalid_argument("count_proper_colorings: k must be >= 0");
    const int n = g.vertex_count;
    const long long color_count = zero_free ? 2 * k : 2 * k + 1;
    BigInt space = power(BigInt(color_count), n);
    if (space > budget)
        throw BudgetExceeded(space, "count_proper_colorings: " + space.str() +
                                        " assignments exceed budget " + budget.str());

    // Color values in a fixed order; the odometer walks vertex 0 slowest.
    std::vector<long long> palette;
    for (long long c = -k; c <= k; ++c)
        if (c != 0 || !zero_free) palette.push_back(c);

    for (const Edge& e : g.edges)
        if (e.kind == EdgeKind::PositiveLoop) return 0;

    // Per vertex: links to lower-numbered vertices, and whether color 0
    // is forbidden (negative loop or half edge).
    std::vector<std::vector<std::pair<int, int>>> back_links(static_cast<std::size_t>(n));
    std::vector<bool> forbid_zero(static_cast<std::size_t>(n), false);
    for (const Edge& e : g.edges) {
        switch (e.kind) {
            case EdgeKind::PositiveLink:
                back_links[static_cast<std::size_t>(e.v)].emplace_back(e.u, 1);
                break;
            case EdgeKind::NegativeLink:
                back_links[static_cast<std::size_t>(e.v)].emplace_back(e.u, -1);
                break;
            case EdgeKind::NegativeLoop:
            case EdgeKind::HalfEdge:
                forbid_zero[static_cast<std::size_t>(e.u)] = true;
                break;
            case EdgeKind::PositiveLoop:
                break;  // handled above
        }
    }

    if (palette.empty()) return n == 0 ? 1 : 0;

    BigInt count(0);
    std::vector<long long> color(static_cast<std::size_t>(n), 0);
    std::vector<std::size_t> choice(static_cast<std::size_t>(n), 0);
    auto admissible = [&](int v) {
        if (forbid_zero[static_cast<std::size_t>(v)] && color[static_cast<std::size_t>(v)] == 0)
            return false;
        for (auto [w, sgn] : back_links[static_cast<std::size_t>(v)])
            if (color[static_cast<std::size_t>(v)] == sgn * color[static_cast<std::size_t>(w)])
                return false;
        return true;
    };
    int v = 0;
    if (n == 0) return 1;
    while (true) {
        if (choice[static_cast<std::size_t>(v)] == palette.size()) {
            // Exhausted this digit; carry.
            choice[static_cast<std::size_t>(v)] = 0;
            --v;
            if (v < 0) break;
            ++choice[static_cast<std::size_t>(v)];
            continue;
        }
        color[static_cast<std::size_t>(v)] = palette[choice[static_cast<std::size_t>(v)]];
        if (!admissible(v)) {
            ++choice[static_cast<std::size_t>(v)];
            continue;
        }
        if (v == n - 1) {
            ++count;
            ++choice[static_cast<std::size_t>(v)];
        } else {
            ++v;
        }
    }
    return count;
}

IntPolynomial interpolate_polynomial(const std::vector<std::pair<long long, BigInt>>& points) {
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j)
            if (points[i].first == points[j].first)
                throw std::invalid_argument("interpolate_polynomial: duplicate abscissa k=" +
                                            std::to_string(points[i].first));
    if (points.empty()) return IntPolynomial();

    // Lagrange over the rationals: sum_i y_i * prod_{j != i} (x-k_j)/(k_i-k_j).
    std::vector<cpp_rational> acc(points.size(), cpp_rational(0));
    for (std::size_t i = 0; i < points.size(); ++i) {
        std::vector<cpp_rational> basis{cpp_rational(1)};
        cpp_rational denom(1);
        for (std::size_t j = 0; j < points.size(); ++j) {
            if (j == i) continue;
            basis.insert(basis.begin(), cpp_rational(0));  // multiply by x
            for (std::size_t t = 0; t + 1 < basis.size(); ++t)
                basis[t] -= cpp_rational(points[j].first) * basis[t + 1];
            denom *= cpp_rational(points[i].first - points[j].first);
        }
        cpp_rational scale = cpp_rational(points[i].second) / denom;
        for (std::size_t t = 0; t < basis.size(); ++t) acc[t] += basis[t] * scale;
    }
    std::vector<BigInt> coeffs(acc.size());
    for (std::size_t t = 0; t < acc.size(); ++t) {
        if (denominator(acc[t]) != 1)
            throw std::domain_error("interpolate_polynomial: non-integer coefficient of k^" +
                                    std::to_string(t));
        coeffs[t] = numerator(acc[t]);
    }
    return IntPolynomial::from_coeffs(std::move(coeffs));
}

bool CrossValidateReport::all_match() const {
    for (const auto& p : points)
        if (p.oracle_count && !p.match) return false;
    if (interpolation_attempted && !interpolation_matches) return false;
    return true;
}

CrossValidateReport cross_validate(const SignedGraph& g, int k_max, bool zero_free,
                                   const BigInt& budget) {
    if (k_max < 0) throw std::invalid_argument("cross_validate: k_max must be >= 0");
    CrossValidateReport report;
    report.engine_polynomial = zero_free ? zero_free_polynomial(g) : chromatic_polynomial(g);

    const int interp_max = std::max(k_max, g.vertex_count);
    std::vector<std::optional<BigInt>> counts(static_cast<std::size_t>(interp_max) + 1);
    bool all_counted = true;
    for (int k = 0; k <= interp_max; ++k) {
        try {
            counts[static_cast<std::size_t>(k)] = count_proper_colorings(g, k, zero_free, budget);
        } catch (const BudgetExceeded&) {
            all_counted = false;
        }
    }

    for (int k = 0; k <= k_max; ++k) {
        CrossValidatePoint p;
        p.k = k;
        p.engine_value = report.engine_polynomial.eval(BigInt(k));
        p.oracle_count = counts[static_cast<std::size_t>(k)];
        p.match = p.oracle_count && *p.oracle_count == p.engine_value;
        report.points.push_back(std::move(p));
    }

    if (all_counted) {
        std::vector<std::pair<long long, BigInt>> pts;
        for (int k = 0; k <= interp_max; ++k) pts.emplace_back(k, *counts[static_cast<std::size_t>(k)]);
        report.interpolation_attempted = true;
        report.interpolated = interpolate_polynomial(pts);
        report.interpolation_matches = *report.interpolated == report.engine_polynomial;
    }
    return report;
}

}  // namespace sgc
