#pragma once

#include <cstdint>
#include <vector>

#include "sgc/engine.hpp"
#include "sgc/graph.hpp"
#include "sgc/poly.hpp"

namespace sgc {

struct CensusEntry {
    IntPolynomial poly;
    std::uint64_t orbit = 0;    // how many signatures share the polynomial
    std::uint64_t witness = 0;  // smallest signature index attaining it
};

// Polynomial census over all 2^m signatures of an all-link underlying
// graph: one entry per distinct polynomial, ordered by witness index.
// Orbit sizes sum to 2^m.
std::vector<CensusEntry> polynomial_census(const SignedGraph& underlying, bool zero_free);

}  // namespace sgc
