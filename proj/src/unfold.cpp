#include "mws/unfold.hpp"

#include <algorithm>
#include <fstream>

#include "mws/error.hpp"

namespace mws {

UnfoldedGraph UnfoldedGraph::unfold(const WeightedGraph& g) {
    if (!g.has_integral_weights())
        throw NonIntegralWeight("unfolding requires integral weights");
    UnfoldedGraph phi;
    phi.origin_ = &g;
    phi.copy_count_.assign(static_cast<std::size_t>(g.num_vertices()), 0);
    for (const Edge& e : g.edges()) {
        auto w = static_cast<std::int32_t>(e.w.num());
        if (w < 1) throw NonIntegralWeight("unfolding requires weights >= 1");
        phi.copy_count_[static_cast<std::size_t>(e.u)] =
            std::max(phi.copy_count_[static_cast<std::size_t>(e.u)], w);
        phi.copy_count_[static_cast<std::size_t>(e.v)] =
            std::max(phi.copy_count_[static_cast<std::size_t>(e.v)], w);
    }
    phi.copy_offset_.resize(static_cast<std::size_t>(g.num_vertices()));
    VertexId total = 0;
    for (VertexId u = 0; u < g.num_vertices(); ++u) {
        phi.copy_offset_[static_cast<std::size_t>(u)] = total;
        total += phi.copy_count_[static_cast<std::size_t>(u)];
    }
    phi.total_copies_ = total;

    std::int64_t expected_edges = 0;
    for (EdgeId id = 0; id < g.num_edges(); ++id) {
        const Edge& e = g.edge(id);
        auto w = static_cast<std::int32_t>(e.w.num());
        phi.origin_first_.push_back(static_cast<EdgeId>(phi.edges_.size()));
        for (std::int32_t i = 1; i <= w; ++i)
            phi.edges_.push_back(UnfoldedEdge{e.u, i, e.v, w - i + 1, id});
        expected_edges += w;
    }
    if (static_cast<std::int64_t>(phi.edges_.size()) != expected_edges)
        throw Error("unfolded edge count mismatch");
    return phi;
}

std::vector<EdgeId> UnfoldedGraph::edges_of_origin(EdgeId origin_edge) const {
    auto w = static_cast<std::int32_t>(origin_->edge(origin_edge).w.num());
    std::vector<EdgeId> out;
    out.reserve(static_cast<std::size_t>(w));
    EdgeId first = origin_first_[static_cast<std::size_t>(origin_edge)];
    for (std::int32_t i = 0; i < w; ++i) out.push_back(first + i);
    return out;
}

std::vector<std::pair<VertexId, VertexId>> UnfoldedGraph::dense_pairs(
    const std::vector<EdgeId>& subgraph) const {
    std::vector<std::pair<VertexId, VertexId>> pairs;
    pairs.reserve(subgraph.size());
    for (EdgeId id : subgraph) {
        const UnfoldedEdge& e = edges_[static_cast<std::size_t>(id)];
        pairs.emplace_back(dense_id(e.u, e.u_copy), dense_id(e.v, e.v_copy));
    }
    return pairs;
}

std::vector<EdgeId> refold(const UnfoldedGraph& phi, const std::vector<EdgeId>& subgraph) {
    std::vector<EdgeId> origins;
    origins.reserve(subgraph.size());
    for (EdgeId id : subgraph) origins.push_back(phi.edge(id).origin);
    std::sort(origins.begin(), origins.end());
    origins.erase(std::unique(origins.begin(), origins.end()), origins.end());
    return origins;
}

Matching refolded_max_weight_matching(const UnfoldedGraph& phi, const std::vector<EdgeId>& subgraph,
                                      const ExactSolverLimits& limits) {
    std::vector<EdgeId> origin_ids = refold(phi, subgraph);
    std::vector<EdgeId> back;
    WeightedGraph sub = phi.origin().subgraph(origin_ids, &back);
    Matching local = max_weight_matching(sub, limits);
    Matching out;
    for (EdgeId e : local.edges) out.edges.push_back(back[static_cast<std::size_t>(e)]);
    return out;
}

void write_unfolded(const UnfoldedGraph& phi, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open " + path + " for writing");
    out << phi.num_vertices() << " " << phi.num_edges();
    if (phi.origin_is_bipartite()) out << " bipartite";
    out << "\n";
    for (const UnfoldedEdge& e : phi.edges())
        out << e.u << "^" << e.u_copy << " " << e.v << "^" << e.v_copy << " 1\n";
    if (!out) throw IoError("write failed: " + path);
}

}  // namespace mws
