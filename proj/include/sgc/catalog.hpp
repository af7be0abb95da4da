#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sgc/graph.hpp"

namespace sgc {

// Petersen graph on vertices 0..9: 0..4 the outer 5-cycle in circular
// order, 5..9 the inner pentagram (i joined to i+2 mod 5), spokes v to
// v+5. All links positive.
SignedGraph underlying_petersen();

// Complete graph on n >= 1 vertices, all links positive.
SignedGraph underlying_complete(int n);

// The six signed Petersen graphs, one per switching isomorphism class.
// index 1..6; throws std::invalid_argument otherwise.
SignedGraph signed_petersen(int index);

// The signed complete graphs on 3..5 vertices, one per switching
// isomorphism class: order 3 has variants 1..2, order 4 has 1..3,
// order 5 has 1..7. Variant 1 is all-positive.
SignedGraph signed_complete(int order, int variant);

// "P1".."P6", "K3.1", "K3.2", "K4.1".."K4.3", "K5.1".."K5.7".
std::optional<SignedGraph> catalog_lookup(std::string_view name);
std::vector<std::string> catalog_names();

// The signature of the underlying graph whose negative-link set is
// given by the bits of index over the sorted link order (bit i set:
// link i negative). Throws std::invalid_argument when the underlying
// graph has loops or half edges, or the index is out of range.
SignedGraph signature_at(const SignedGraph& underlying, std::uint64_t index);

// Number of signatures, i.e. 2^(link count). Throws when the link
// count exceeds 63.
std::uint64_t signature_count(const SignedGraph& underlying);

// Iterates signature_at(underlying, 0 .. signature_count-1) in order.
class SignatureRange {
public:
    explicit SignatureRange(SignedGraph underlying);

    class iterator {
    public:
        iterator(const SignedGraph* underlying, std::uint64_t index)
            : underlying_(underlying), index_(index) {}
        SignedGraph operator*() const { return signature_at(*underlying_, index_); }
        iterator& operator++() {
            ++index_;
            return *this;
        }
        bool operator!=(const iterator& o) const { return index_ != o.index_; }
        bool operator==(const iterator& o) const { return index_ == o.index_; }
        std::uint64_t index() const { return index_; }

    private:
        const SignedGraph* underlying_;
        std::uint64_t index_;
    };

    iterator begin() const { return iterator(&underlying_, 0); }
    iterator end() const { return iterator(&underlying_, count_); }
    std::uint64_t size() const { return count_; }

private:
    SignedGraph underlying_;
    std::uint64_t count_;
};

SignatureRange all_signatures(const SignedGraph& underlying);

}  // namespace sgc
