#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mws/rational.hpp"

namespace mws {

using VertexId = std::int32_t;
using EdgeId = std::int32_t;

struct Edge {
    VertexId u;
    VertexId v;
    Rational w;
};

/// Simple weighted graph: vertex count plus an edge list with positive
/// weights. Validates on construction: no self-loops, no duplicate pairs,
/// weights > 0, and (when a bipartition is present) every edge crossing it.
class WeightedGraph {
public:
    WeightedGraph() = default;
    WeightedGraph(VertexId n, std::vector<Edge> edges, bool require_bipartite = false);

    VertexId num_vertices() const { return n_; }
    EdgeId num_edges() const { return static_cast<EdgeId>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(EdgeId e) const { return edges_[static_cast<std::size_t>(e)]; }

    bool is_bipartite() const { return bipartition_.has_value(); }
    /// Side (0/1) per vertex when the graph is two-colorable.
    const std::optional<std::vector<std::int8_t>>& bipartition() const { return bipartition_; }

    bool has_integral_weights() const;
    /// max weight / min weight; 1 on graphs with < 2 distinct weights.
    Rational weight_ratio() const;
    Rational min_weight() const;
    Rational max_weight() const;

    /// Subgraph on the same vertex set keeping the given edge ids. Edge ids in
    /// the result refer back to this graph via the returned mapping.
    WeightedGraph subgraph(const std::vector<EdgeId>& keep, std::vector<EdgeId>* origin = nullptr) const;

private:
    VertexId n_ = 0;
    std::vector<Edge> edges_;
    std::optional<std::vector<std::int8_t>> bipartition_;
};

/// Two-coloring of an edge list, or nullopt when an odd cycle exists.
/// Isolated vertices get side 0.
std::optional<std::vector<std::int8_t>> two_color(VertexId n,
                                                  const std::vector<std::pair<VertexId, VertexId>>& edges);

/// Vertex-disjoint edge subset of a host graph, stored as edge ids.
struct Matching {
    std::vector<EdgeId> edges;

    std::size_t size() const { return edges.size(); }
    Rational weight(const WeightedGraph& g) const;
};

/// True iff the edge ids form a vertex-disjoint set in g.
bool is_valid_matching(const WeightedGraph& g, const std::vector<EdgeId>& edges);

/// Edge -> [0,1] assignment with per-vertex load at most 1. Construction
/// rejects any vertex whose incident values sum above 1.
class FractionalMatching {
public:
    FractionalMatching(const WeightedGraph& g, std::vector<Rational> values);

    const std::vector<Rational>& values() const { return values_; }
    const Rational& value(EdgeId e) const { return values_[static_cast<std::size_t>(e)]; }
    Rational weighted_sum(const WeightedGraph& g) const;

private:
    std::vector<Rational> values_;
};

/// Edge-list text format: header "n m [bipartite]", then "u v w" per line.
WeightedGraph ingest(const std::string& path);
WeightedGraph parse_edge_list(std::istream& in);
void write_graph(const WeightedGraph& g, const std::string& path);
void write_edge_list(const WeightedGraph& g, std::ostream& out);

}  // namespace mws
