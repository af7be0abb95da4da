#pragma once

#include "sgc/graph.hpp"
#include "sgc/poly.hpp"

namespace sgc {

// Exact counting polynomials of a signed graph, colors drawn from
// {0, +-1, ..., +-k} (chromatic) or {+-1, ..., +-k} (zero-free), as
// polynomials in k. Both recurse by deletion-contraction on links:
//
//   reduce -> improper check -> component split -> loops-only closed
//   form, else pivot on a link and subtract the contraction.
//
// A negative pivot link is first made positive by switching at its
// smaller endpoint. The zero-free variant never needs to contract a
// negative loop: x != -x is vacuous without color 0, so loops vanish
// inside the closed form.
IntPolynomial chromatic_polynomial(const SignedGraph& g);
IntPolynomial zero_free_polynomial(const SignedGraph& g);

// Index of the pivot: the first positive link in sorted edge order, or
// the first negative link when there is no positive one. Throws
// std::invalid_argument if the graph has no links.
std::size_t select_pivot_edge(const SignedGraph& g);

// Value of a reduced graph without links. Chromatic: (2k) per
// negative-looped vertex, (2k+1) per plain vertex. Zero-free: (2k)^n.
// Throws std::invalid_argument if the graph still has links.
IntPolynomial loops_only_closed_form(const SignedGraph& g, bool zero_free);

}  // namespace sgc
