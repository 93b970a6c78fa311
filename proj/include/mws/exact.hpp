#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "mws/graph.hpp"

namespace mws {

/// Acceptance gate for the exhaustive general-graph weighted solver. An
/// instance passes if it has at most max_vertices non-isolated vertices OR at
/// most max_edges edges. Bipartite instances are never gated.
struct ExactSolverLimits {
    int max_vertices = 24;
    int max_edges = 64;
};

/// Maximum-cardinality matching. Bipartite inputs go through Hopcroft-Karp,
/// general inputs through Edmonds blossom search. Returns indices into the
/// given edge list.
std::vector<EdgeId> max_cardinality_matching(VertexId n,
                                             const std::vector<std::pair<VertexId, VertexId>>& edges);

std::size_t max_cardinality_value(VertexId n,
                                  const std::vector<std::pair<VertexId, VertexId>>& edges);

/// Weight of a maximum-weight matching. Hungarian assignment for bipartite
/// graphs; exhaustive search with memoized pruning otherwise (gated by
/// limits, throws SizeLimitExceeded).
Rational max_weight_value(const WeightedGraph& g, const ExactSolverLimits& limits = {});

/// Canonical maximum-weight matching: among all maximum-weight matchings,
/// the one whose sorted edge-id sequence is lexicographically smallest.
Matching max_weight_matching(const WeightedGraph& g, const ExactSolverLimits& limits = {});

}  // namespace mws
