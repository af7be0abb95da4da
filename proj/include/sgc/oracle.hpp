#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sgc/graph.hpp"
#include "sgc/poly.hpp"

namespace sgc {

// Default cap on the assignment space a brute-force count may visit.
inline constexpr long long kDefaultColoringBudget = 100000000;

struct BudgetExceeded : std::runtime_error {
    BigInt assignments;  // full assignment-space size that was refused
    BudgetExceeded(BigInt n, const std::string& msg)
        : std::runtime_error(msg), assignments(std::move(n)) {}
};

// Exhaustive count of proper colorings with colors {0,+-1,...,+-k}
// (zero_free: {+-1,...,+-k}). Independent of the polynomial engine:
// plain odometer enumeration over vertices in index order with early
// constraint pruning, which never changes the count. Refuses with
// BudgetExceeded when (2k+1)^n respectively (2k)^n exceeds the budget.
BigInt count_proper_colorings(const SignedGraph& g, long long k, bool zero_free,
                              const BigInt& budget = BigInt(kDefaultColoringBudget));

// Exact Lagrange interpolation over the rationals through the given
// (k, value) points. Throws std::invalid_argument on duplicate k values
// and std::domain_error when a resulting coefficient is not an integer
// (a sure sign of a miscount).
IntPolynomial interpolate_polynomial(const std::vector<std::pair<long long, BigInt>>& points);

struct CrossValidatePoint {
    long long k = 0;
    BigInt engine_value;
    std::optional<BigInt> oracle_count;  // empty when refused over budget
    bool match = false;                  // refusals do not count as mismatches
};

struct CrossValidateReport {
    IntPolynomial engine_polynomial;
    std::vector<CrossValidatePoint> points;      // k = 0..k_max spot checks
    bool interpolation_attempted = false;        // false when over budget
    std::optional<IntPolynomial> interpolated;   // present when attempted
    bool interpolation_matches = false;

    bool all_match() const;
};

// Engine vs. brute force at k = 0..k_max. When every count up to
// max(k_max, vertex count) fits the budget, additionally interpolates
// through those points and compares the polynomial itself.
CrossValidateReport cross_validate(const SignedGraph& g, int k_max, bool zero_free,
                                   const BigInt& budget = BigInt(kDefaultColoringBudget));

}  // namespace sgc
