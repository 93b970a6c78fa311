#include "mws/graph.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <set>
#include <sstream>

#include "mws/error.hpp"

namespace mws {

WeightedGraph::WeightedGraph(VertexId n, std::vector<Edge> edges, bool require_bipartite)
    : n_(n), edges_(std::move(edges)) {
    if (n < 0) throw Error("negative vertex count");
    std::set<std::pair<VertexId, VertexId>> seen;
    for (const Edge& e : edges_) {
        if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n)
            throw Error("edge endpoint out of range");
        if (e.u == e.v) throw Error("self-loop rejected");
        if (!e.w.is_positive()) throw Error("non-positive edge weight");
        auto key = std::minmax(e.u, e.v);
        if (!seen.insert(key).second)
            throw DuplicateEdge("duplicate edge (" + std::to_string(key.first) + "," +
                                std::to_string(key.second) + ")");
    }
    std::vector<std::pair<VertexId, VertexId>> pairs;
    pairs.reserve(edges_.size());
    for (const Edge& e : edges_) pairs.emplace_back(e.u, e.v);
    bipartition_ = two_color(n_, pairs);
    if (require_bipartite && !bipartition_)
        throw Error("bipartite flag set but graph has an odd cycle");
}

bool WeightedGraph::has_integral_weights() const {
    for (const Edge& e : edges_)
        if (!e.w.is_integer()) return false;
    return true;
}

Rational WeightedGraph::min_weight() const {
    Rational m;
    bool first = true;
    for (const Edge& e : edges_) {
        if (first || e.w < m) m = e.w;
        first = false;
    }
    return first ? Rational(1) : m;
}

Rational WeightedGraph::max_weight() const {
    Rational m;
    bool first = true;
    for (const Edge& e : edges_) {
        if (first || e.w > m) m = e.w;
        first = false;
    }
    return first ? Rational(1) : m;
}

Rational WeightedGraph::weight_ratio() const {
    if (edges_.empty()) return Rational(1);
    return max_weight() / min_weight();
}

WeightedGraph WeightedGraph::subgraph(const std::vector<EdgeId>& keep,
                                      std::vector<EdgeId>* origin) const {
    std::vector<Edge> sub;
    sub.reserve(keep.size());
    if (origin) origin->clear();
    for (EdgeId e : keep) {
        sub.push_back(edges_[static_cast<std::size_t>(e)]);
        if (origin) origin->push_back(e);
    }
    return WeightedGraph(n_, std::move(sub));
}

std::optional<std::vector<std::int8_t>> two_color(
    VertexId n, const std::vector<std::pair<VertexId, VertexId>>& edges) {
    std::vector<std::vector<VertexId>> adj(static_cast<std::size_t>(n));
    for (auto [u, v] : edges) {
        adj[static_cast<std::size_t>(u)].push_back(v);
        adj[static_cast<std::size_t>(v)].push_back(u);
    }
    std::vector<std::int8_t> color(static_cast<std::size_t>(n), -1);
    std::deque<VertexId> queue;
    for (VertexId s = 0; s < n; ++s) {
        if (color[static_cast<std::size_t>(s)] != -1) continue;
        color[static_cast<std::size_t>(s)] = 0;
        queue.push_back(s);
        while (!queue.empty()) {
            VertexId u = queue.front();
            queue.pop_front();
            for (VertexId v : adj[static_cast<std::size_t>(u)]) {
                if (color[static_cast<std::size_t>(v)] == -1) {
                    color[static_cast<std::size_t>(v)] =
                        static_cast<std::int8_t>(1 - color[static_cast<std::size_t>(u)]);
                    queue.push_back(v);
                } else if (color[static_cast<std::size_t>(v)] ==
                           color[static_cast<std::size_t>(u)]) {
                    return std::nullopt;
                }
            }
        }
    }
    return color;
}

Rational Matching::weight(const WeightedGraph& g) const {
    Rational total;
    for (EdgeId e : edges) total += g.edge(e).w;
    return total;
}

bool is_valid_matching(const WeightedGraph& g, const std::vector<EdgeId>& edges) {
    std::vector<std::int8_t> used(static_cast<std::size_t>(g.num_vertices()), 0);
    for (EdgeId id : edges) {
        if (id < 0 || id >= g.num_edges()) return false;
        const Edge& e = g.edge(id);
        if (used[static_cast<std::size_t>(e.u)] || used[static_cast<std::size_t>(e.v)]) return false;
        used[static_cast<std::size_t>(e.u)] = used[static_cast<std::size_t>(e.v)] = 1;
    }
    return true;
}

FractionalMatching::FractionalMatching(const WeightedGraph& g, std::vector<Rational> values)
    : values_(std::move(values)) {
    if (static_cast<EdgeId>(values_.size()) != g.num_edges())
        throw Error("fractional matching must assign every edge");
    std::vector<Rational> load(static_cast<std::size_t>(g.num_vertices()));
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        const Rational& x = values_[static_cast<std::size_t>(e)];
        if (x < Rational(0) || x > Rational(1))
            throw Error("fractional value outside [0,1]");
        load[static_cast<std::size_t>(g.edge(e).u)] += x;
        load[static_cast<std::size_t>(g.edge(e).v)] += x;
    }
    for (VertexId u = 0; u < g.num_vertices(); ++u)
        if (load[static_cast<std::size_t>(u)] > Rational(1))
            throw Error("vertex load above 1 at vertex " + std::to_string(u));
}

Rational FractionalMatching::weighted_sum(const WeightedGraph& g) const {
    Rational total;
    for (EdgeId e = 0; e < g.num_edges(); ++e)
        total += g.edge(e).w * values_[static_cast<std::size_t>(e)];
    return total;
}

WeightedGraph parse_edge_list(std::istream& in) {
    std::string line;
    long lineno = 0;
    auto next_content_line = [&](std::string& out) {
        while (std::getline(in, line)) {
            ++lineno;
            std::size_t i = line.find_first_not_of(" \t\r");
            if (i == std::string::npos) continue;
            if (line[i] == '#') continue;
            out = line;
            return true;
        }
        return false;
    };

    std::string header;
    if (!next_content_line(header)) throw ParseError("missing header", lineno);
    std::istringstream hs(header);
    long long n = 0, m = 0;
    std::string flag;
    if (!(hs >> n >> m)) throw ParseError("header must be 'n m [bipartite]'", lineno);
    bool require_bipartite = false;
    if (hs >> flag) {
        if (flag == "bipartite")
            require_bipartite = true;
        else
            throw ParseError("unknown header flag '" + flag + "'", lineno);
    }
    if (n < 0 || m < 0) throw ParseError("negative counts in header", lineno);

    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (long long i = 0; i < m; ++i) {
        std::string row;
        if (!next_content_line(row)) throw ParseError("expected " + std::to_string(m) + " edges", lineno);
        std::istringstream rs(row);
        long long u = 0, v = 0;
        std::string wtok;
        if (!(rs >> u >> v >> wtok)) throw ParseError("edge line must be 'u v w'", lineno);
        Rational w;
        try {
            w = Rational::parse(wtok);
        } catch (const Error& e) {
            throw ParseError(std::string("bad weight token '") + wtok + "': " + e.what(), lineno);
        }
        edges.push_back(Edge{static_cast<VertexId>(u), static_cast<VertexId>(v), w});
    }
    try {
        return WeightedGraph(static_cast<VertexId>(n), std::move(edges), require_bipartite);
    } catch (const DuplicateEdge&) {
        throw;
    } catch (const Error& e) {
        throw ParseError(e.what(), lineno);
    }
}

WeightedGraph ingest(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    return parse_edge_list(in);
}

void write_edge_list(const WeightedGraph& g, std::ostream& out) {
    out << g.num_vertices() << " " << g.num_edges();
    if (g.is_bipartite()) out << " bipartite";
    out << "\n";
    for (const Edge& e : g.edges()) out << e.u << " " << e.v << " " << e.w.to_string() << "\n";
}

void write_graph(const WeightedGraph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open " + path + " for writing");
    write_edge_list(g, out);
    if (!out) throw IoError("write failed: " + path);
}

}  // namespace mws
