#include "sgc/census.hpp"

#include <map>

#include "sgc/catalog.hpp"

namespace sgc {

std::vector<CensusEntry> polynomial_census(const SignedGraph& underlying, bool zero_free) {
    const std::uint64_t total = signature_count(underlying);
    std::vector<CensusEntry> entries;
    std::map<IntPolynomial, std::size_t> seen;
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        SignedGraph g = signature_at(underlying, idx);
        IntPolynomial p = zero_free ? zero_free_polynomial(g) : chromatic_polynomial(g);
        auto [it, inserted] = seen.emplace(std::move(p), entries.size());
        if (inserted)
            entries.push_back(CensusEntry{it->first, 1, idx});
        else
            entries[it->second].orbit++;
    }
    return entries;
}

}  // namespace sgc
