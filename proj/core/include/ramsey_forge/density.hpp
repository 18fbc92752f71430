#pragma once

#include <vector>

#include "ramsey_forge/graph.hpp"
#include "ramsey_forge/rational.hpp"

namespace rf {

uint64_t edges_between(const Graph& g, const VertexSet& x, const VertexSet& y);
uint64_t edges_within(const Graph& g, const VertexSet& a);

// d(X,Y) = e(X,Y) / (|X||Y|) for disjoint non-empty X, Y.
Rational density_pair(const Graph& g, const VertexSet& x, const VertexSet& y);

// d(A) = e(A) / C(|A|,2); |A| >= 2 required.
Rational density_set(const Graph& g, const VertexSet& a);

// Multi-set density over pairwise-disjoint parts; one part has density 0
// by convention.
Rational density_multi(const Graph& g, const std::vector<VertexSet>& parts);

// density of A treating sets of size < 2 as density 0 (oracle convention)
Rational density_set_or_zero(const Graph& g, const VertexSet& a);

}  // namespace rf
