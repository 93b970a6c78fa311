#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "mws/exact.hpp"
#include "mws/graph.hpp"

namespace mws {

/// One edge of phi(G): the i-th copy (u^i, v^{w-i+1}) of origin edge e.
struct UnfoldedEdge {
    VertexId u;              // origin endpoint
    std::int32_t u_copy;     // 1-based copy index at u
    VertexId v;
    std::int32_t v_copy;
    EdgeId origin;           // edge id in the origin graph
};

/// Unweighted multigraph phi(G) for a graph with integral weights. Vertex u
/// gets W_u = max incident weight copies; a weight-w edge becomes the w copies
/// (u^i, v^{w-i+1}). Immutable; subgraphs are edge-id subsets.
class UnfoldedGraph {
public:
    static UnfoldedGraph unfold(const WeightedGraph& g);

    const WeightedGraph& origin() const { return *origin_; }
    VertexId num_vertices() const { return total_copies_; }
    EdgeId num_edges() const { return static_cast<EdgeId>(edges_.size()); }
    const std::vector<UnfoldedEdge>& edges() const { return edges_; }
    const UnfoldedEdge& edge(EdgeId e) const { return edges_[static_cast<std::size_t>(e)]; }

    std::int32_t copies(VertexId origin_vertex) const {
        return copy_count_[static_cast<std::size_t>(origin_vertex)];
    }

    /// Dense id of copy (u, i), i in [1, W_u].
    VertexId dense_id(VertexId u, std::int32_t copy) const {
        return copy_offset_[static_cast<std::size_t>(u)] + copy - 1;
    }

    /// Unfolded edge ids of one origin edge, contiguous by construction.
    std::vector<EdgeId> edges_of_origin(EdgeId origin_edge) const;

    /// Endpoint pairs (dense ids) for a subgraph given by unfolded edge ids.
    std::vector<std::pair<VertexId, VertexId>> dense_pairs(const std::vector<EdgeId>& subgraph) const;

    bool origin_is_bipartite() const { return origin_->is_bipartite(); }

private:
    const WeightedGraph* origin_ = nullptr;
    std::vector<std::int32_t> copy_count_;
    std::vector<VertexId> copy_offset_;
    VertexId total_copies_ = 0;
    std::vector<UnfoldedEdge> edges_;
    std::vector<EdgeId> origin_first_;  // first unfolded edge id per origin edge
};

/// Refolding R(H): origin edges with at least one copy in the subgraph.
/// Result is sorted and deduplicated.
std::vector<EdgeId> refold(const UnfoldedGraph& phi, const std::vector<EdgeId>& subgraph);

/// Exact maximum-weight matching of R(subgraph) in the origin graph.
/// Returned edge ids refer to the origin graph.
Matching refolded_max_weight_matching(const UnfoldedGraph& phi, const std::vector<EdgeId>& subgraph,
                                      const ExactSolverLimits& limits = {});

/// Writes phi(g) in edge-list form with copy-suffixed vertex names (u^i).
void write_unfolded(const UnfoldedGraph& phi, const std::string& path);

}  // namespace mws
