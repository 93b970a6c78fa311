#include "mws/exact.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <queue>
#include <unordered_map>

#include "mws/error.hpp"

namespace mws {

namespace {

using PairList = std::vector<std::pair<VertexId, VertexId>>;

// ---------------------------------------------------------------------------
// Hopcroft-Karp on a two-colored edge list.

class HopcroftKarp {
public:
    HopcroftKarp(VertexId n, const PairList& edges, const std::vector<std::int8_t>& side)
        : n_(n), side_(side), adj_(static_cast<std::size_t>(n)) {
        for (std::size_t i = 0; i < edges.size(); ++i) {
            VertexId l = edges[i].first, r = edges[i].second;
            if (side[static_cast<std::size_t>(l)] == 1) std::swap(l, r);
            adj_[static_cast<std::size_t>(l)].push_back(r);
        }
        mate_.assign(static_cast<std::size_t>(n), -1);
    }

    std::vector<VertexId> run() {
        for (;;) {
            if (!bfs()) break;
            for (VertexId u = 0; u < n_; ++u)
                if (side_[static_cast<std::size_t>(u)] == 0 && mate_[static_cast<std::size_t>(u)] == -1)
                    dfs(u);
        }
        return mate_;
    }

private:
    static constexpr int kInf = std::numeric_limits<int>::max();

    bool bfs() {
        std::queue<VertexId> q;
        dist_.assign(static_cast<std::size_t>(n_), kInf);
        for (VertexId u = 0; u < n_; ++u) {
            if (side_[static_cast<std::size_t>(u)] != 0) continue;
            if (mate_[static_cast<std::size_t>(u)] == -1) {
                dist_[static_cast<std::size_t>(u)] = 0;
                q.push(u);
            }
        }
        bool reachable = false;
        while (!q.empty()) {
            VertexId u = q.front();
            q.pop();
            for (VertexId v : adj_[static_cast<std::size_t>(u)]) {
                VertexId w = mate_[static_cast<std::size_t>(v)];
                if (w == -1) {
                    reachable = true;
                } else if (dist_[static_cast<std::size_t>(w)] == kInf) {
                    dist_[static_cast<std::size_t>(w)] = dist_[static_cast<std::size_t>(u)] + 1;
                    q.push(w);
                }
            }
        }
        return reachable;
    }

    bool dfs(VertexId u) {
        for (VertexId v : adj_[static_cast<std::size_t>(u)]) {
            VertexId w = mate_[static_cast<std::size_t>(v)];
            if (w == -1 ||
                (dist_[static_cast<std::size_t>(w)] == dist_[static_cast<std::size_t>(u)] + 1 && dfs(w))) {
                mate_[static_cast<std::size_t>(u)] = v;
                mate_[static_cast<std::size_t>(v)] = u;
                return true;
            }
        }
        dist_[static_cast<std::size_t>(u)] = kInf;
        return false;
    }

    VertexId n_;
    const std::vector<std::int8_t>& side_;
    std::vector<std::vector<VertexId>> adj_;
    std::vector<VertexId> mate_;
    std::vector<int> dist_;
};

// ---------------------------------------------------------------------------
// Edmonds blossom search for general graphs (cardinality only).

class BlossomMatcher {
public:
    BlossomMatcher(VertexId n, const PairList& edges) : n_(n), adj_(static_cast<std::size_t>(n)) {
        for (const auto& [u, v] : edges) {
            adj_[static_cast<std::size_t>(u)].push_back(v);
            adj_[static_cast<std::size_t>(v)].push_back(u);
        }
        mate_.assign(static_cast<std::size_t>(n), -1);
    }

    std::vector<VertexId> run() {
        // Greedy seed keeps the number of augmentation phases small.
        for (VertexId u = 0; u < n_; ++u) {
            if (mate_[idx(u)] != -1) continue;
            for (VertexId v : adj_[idx(u)]) {
                if (mate_[idx(v)] == -1) {
                    mate_[idx(u)] = v;
                    mate_[idx(v)] = u;
                    break;
                }
            }
        }
        for (VertexId u = 0; u < n_; ++u) {
            if (mate_[idx(u)] != -1) continue;
            VertexId tail = find_augmenting_path(u);
            if (tail != -1) augment(tail);
        }
        return mate_;
    }

private:
    static std::size_t idx(VertexId v) { return static_cast<std::size_t>(v); }

    void mark_path(VertexId v, VertexId b, VertexId child) {
        while (base_[idx(v)] != b) {
            in_blossom_[idx(base_[idx(v)])] = 1;
            in_blossom_[idx(base_[idx(mate_[idx(v)])])] = 1;
            parent_[idx(v)] = child;
            child = mate_[idx(v)];
            v = parent_[idx(mate_[idx(v)])];
        }
    }

    VertexId lowest_common_base(VertexId a, VertexId b) {
        std::vector<std::int8_t> seen(static_cast<std::size_t>(n_), 0);
        VertexId v = a;
        for (;;) {
            v = base_[idx(v)];
            seen[idx(v)] = 1;
            if (mate_[idx(v)] == -1) break;
            v = parent_[idx(mate_[idx(v)])];
        }
        v = b;
        for (;;) {
            v = base_[idx(v)];
            if (seen[idx(v)]) return v;
            v = parent_[idx(mate_[idx(v)])];
        }
    }

    VertexId find_augmenting_path(VertexId root) {
        visited_.assign(static_cast<std::size_t>(n_), 0);
        parent_.assign(static_cast<std::size_t>(n_), -1);
        base_.resize(static_cast<std::size_t>(n_));
        std::iota(base_.begin(), base_.end(), 0);
        visited_[idx(root)] = 1;
        std::queue<VertexId> q;
        q.push(root);
        while (!q.empty()) {
            VertexId v = q.front();
            q.pop();
            for (VertexId to : adj_[idx(v)]) {
                if (base_[idx(v)] == base_[idx(to)] || mate_[idx(v)] == to) continue;
                if (to == root || (mate_[idx(to)] != -1 && parent_[idx(mate_[idx(to)])] != -1)) {
                    VertexId b = lowest_common_base(v, to);
                    in_blossom_.assign(static_cast<std::size_t>(n_), 0);
                    mark_path(v, b, to);
                    mark_path(to, b, v);
                    for (VertexId i = 0; i < n_; ++i) {
                        if (!in_blossom_[idx(base_[idx(i)])]) continue;
                        base_[idx(i)] = b;
                        if (!visited_[idx(i)]) {
                            visited_[idx(i)] = 1;
                            q.push(i);
                        }
                    }
                } else if (parent_[idx(to)] == -1) {
                    parent_[idx(to)] = v;
                    if (mate_[idx(to)] == -1) return to;
                    visited_[idx(mate_[idx(to)])] = 1;
                    q.push(mate_[idx(to)]);
                }
            }
        }
        return -1;
    }

    void augment(VertexId tail) {
        VertexId v = tail;
        while (v != -1) {
            VertexId pv = parent_[idx(v)];
            VertexId next = mate_[idx(pv)];
            mate_[idx(v)] = pv;
            mate_[idx(pv)] = v;
            v = next;
        }
    }

    VertexId n_;
    std::vector<std::vector<VertexId>> adj_;
    std::vector<VertexId> mate_;
    std::vector<VertexId> parent_, base_;
    std::vector<std::int8_t> visited_, in_blossom_;
};

std::vector<EdgeId> mate_to_edge_ids(const PairList& edges, const std::vector<VertexId>& mate) {
    std::vector<std::int8_t> emitted(mate.size(), 0);
    std::vector<EdgeId> out;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        auto [u, v] = edges[i];
        if (mate[static_cast<std::size_t>(u)] == v && !emitted[static_cast<std::size_t>(u)] &&
            !emitted[static_cast<std::size_t>(v)]) {
            emitted[static_cast<std::size_t>(u)] = emitted[static_cast<std::size_t>(v)] = 1;
            out.push_back(static_cast<EdgeId>(i));
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Weighted solvers. Weights are rescaled once to a common denominator and all
// arithmetic below runs on int64.

struct ScaledGraph {
    VertexId n = 0;
    std::vector<std::int64_t> w;  // per edge, weight * scale
    std::int64_t scale = 1;
    PairList pairs;

    static ScaledGraph from(const WeightedGraph& g) {
        ScaledGraph s;
        s.n = g.num_vertices();
        std::int64_t l = 1;
        for (const Edge& e : g.edges()) l = std::lcm(l, e.w.den());
        s.scale = l;
        for (const Edge& e : g.edges()) {
            __int128 scaled = static_cast<__int128>(e.w.num()) * (l / e.w.den());
            if (scaled > std::numeric_limits<std::int64_t>::max() / 4)
                throw Error("weight magnitude too large for exact solver");
            s.w.push_back(static_cast<std::int64_t>(scaled));
            s.pairs.emplace_back(e.u, e.v);
        }
        return s;
    }
};

// Max-weight assignment value on the bipartite subgraph induced by the
// available vertices. Potentials method on a padded square matrix; missing
// cells behave as weight 0, which models leaving vertices unmatched.
std::int64_t hungarian_value(const ScaledGraph& g, const std::vector<std::int8_t>& side,
                             const std::vector<std::int8_t>& avail) {
    std::vector<VertexId> left, right;
    std::vector<int> slot(static_cast<std::size_t>(g.n), -1);
    for (VertexId v = 0; v < g.n; ++v) {
        if (!avail[static_cast<std::size_t>(v)]) continue;
        if (side[static_cast<std::size_t>(v)] == 0)
            left.push_back(v);
        else
            right.push_back(v);
    }
    int nl = static_cast<int>(left.size()), nr = static_cast<int>(right.size());
    int dim = std::max(nl, nr);
    if (dim == 0) return 0;
    std::vector<int> lslot(static_cast<std::size_t>(g.n), -1);
    for (int i = 0; i < nl; ++i) lslot[static_cast<std::size_t>(left[static_cast<std::size_t>(i)])] = i;
    for (int i = 0; i < nr; ++i) slot[static_cast<std::size_t>(right[static_cast<std::size_t>(i)])] = i;

    std::vector<std::vector<std::int64_t>> gain(static_cast<std::size_t>(dim),
                                                std::vector<std::int64_t>(static_cast<std::size_t>(dim), 0));
    std::int64_t wmax = 0;
    for (std::size_t e = 0; e < g.pairs.size(); ++e) {
        auto [u, v] = g.pairs[e];
        if (!avail[static_cast<std::size_t>(u)] || !avail[static_cast<std::size_t>(v)]) continue;
        if (side[static_cast<std::size_t>(u)] == 1) std::swap(u, v);
        int li = lslot[static_cast<std::size_t>(u)];
        int ri = slot[static_cast<std::size_t>(v)];
        gain[static_cast<std::size_t>(li)][static_cast<std::size_t>(ri)] =
            std::max(gain[static_cast<std::size_t>(li)][static_cast<std::size_t>(ri)], g.w[e]);
        wmax = std::max(wmax, g.w[e]);
    }

    // Minimize cost = wmax - gain over perfect assignments of the square
    // matrix (classic O(dim^3) potential algorithm, 1-based scratch arrays).
    const std::int64_t inf = std::numeric_limits<std::int64_t>::max() / 4;
    std::vector<std::int64_t> u(static_cast<std::size_t>(dim) + 1, 0), v(static_cast<std::size_t>(dim) + 1, 0);
    std::vector<int> way(static_cast<std::size_t>(dim) + 1, 0), p(static_cast<std::size_t>(dim) + 1, 0);
    for (int i = 1; i <= dim; ++i) {
        p[0] = i;
        int j0 = 0;
        std::vector<std::int64_t> minv(static_cast<std::size_t>(dim) + 1, inf);
        std::vector<std::int8_t> used(static_cast<std::size_t>(dim) + 1, 0);
        do {
            used[static_cast<std::size_t>(j0)] = 1;
            int i0 = p[static_cast<std::size_t>(j0)], j1 = -1;
            std::int64_t delta = inf;
            for (int j = 1; j <= dim; ++j) {
                if (used[static_cast<std::size_t>(j)]) continue;
                std::int64_t cost =
                    wmax - gain[static_cast<std::size_t>(i0 - 1)][static_cast<std::size_t>(j - 1)];
                std::int64_t cur = cost - u[static_cast<std::size_t>(i0)] - v[static_cast<std::size_t>(j)];
                if (cur < minv[static_cast<std::size_t>(j)]) {
                    minv[static_cast<std::size_t>(j)] = cur;
                    way[static_cast<std::size_t>(j)] = j0;
                }
                if (minv[static_cast<std::size_t>(j)] < delta) {
                    delta = minv[static_cast<std::size_t>(j)];
                    j1 = j;
                }
            }
            for (int j = 0; j <= dim; ++j) {
                if (used[static_cast<std::size_t>(j)]) {
                    u[static_cast<std::size_t>(p[static_cast<std::size_t>(j)])] += delta;
                    v[static_cast<std::size_t>(j)] -= delta;
                } else {
                    minv[static_cast<std::size_t>(j)] -= delta;
                }
            }
            j0 = j1;
        } while (p[static_cast<std::size_t>(j0)] != 0);
        do {
            int j1 = way[static_cast<std::size_t>(j0)];
            p[static_cast<std::size_t>(j0)] = p[static_cast<std::size_t>(j1)];
            j0 = j1;
        } while (j0 != 0);
    }
    std::int64_t total = 0;
    for (int j = 1; j <= dim; ++j) {
        int i = p[static_cast<std::size_t>(j)];
        total += gain[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
    }
    return total;
}

// General graphs: connected components, tree DP for acyclic components,
// memoized branch-and-bound over an availability mask otherwise.

struct Component {
    std::vector<VertexId> verts;                    // global ids
    std::vector<std::array<std::int64_t, 3>> edges;  // local u, local v, weight
};

std::vector<Component> split_components(const ScaledGraph& g, const std::vector<std::int8_t>& avail) {
    std::vector<int> comp(static_cast<std::size_t>(g.n), -1);
    std::vector<std::vector<std::pair<VertexId, std::size_t>>> adj(static_cast<std::size_t>(g.n));
    for (std::size_t e = 0; e < g.pairs.size(); ++e) {
        auto [u, v] = g.pairs[e];
        if (!avail[static_cast<std::size_t>(u)] || !avail[static_cast<std::size_t>(v)]) continue;
        adj[static_cast<std::size_t>(u)].emplace_back(v, e);
        adj[static_cast<std::size_t>(v)].emplace_back(u, e);
    }
    std::vector<Component> comps;
    std::vector<VertexId> stack;
    for (VertexId s = 0; s < g.n; ++s) {
        if (comp[static_cast<std::size_t>(s)] != -1 || adj[static_cast<std::size_t>(s)].empty()) continue;
        int c = static_cast<int>(comps.size());
        comps.emplace_back();
        stack.push_back(s);
        comp[static_cast<std::size_t>(s)] = c;
        while (!stack.empty()) {
            VertexId v = stack.back();
            stack.pop_back();
            comps[static_cast<std::size_t>(c)].verts.push_back(v);
            for (auto [to, e] : adj[static_cast<std::size_t>(v)]) {
                if (comp[static_cast<std::size_t>(to)] == -1) {
                    comp[static_cast<std::size_t>(to)] = c;
                    stack.push_back(to);
                }
            }
        }
    }
    if (comps.empty()) return comps;
    std::vector<std::unordered_map<VertexId, int>> local(comps.size());
    for (auto& c : comps) {
        std::sort(c.verts.begin(), c.verts.end());
    }
    for (std::size_t ci = 0; ci < comps.size(); ++ci)
        for (std::size_t i = 0; i < comps[ci].verts.size(); ++i)
            local[ci][comps[ci].verts[i]] = static_cast<int>(i);
    for (std::size_t e = 0; e < g.pairs.size(); ++e) {
        auto [u, v] = g.pairs[e];
        if (!avail[static_cast<std::size_t>(u)] || !avail[static_cast<std::size_t>(v)]) continue;
        int c = comp[static_cast<std::size_t>(u)];
        comps[static_cast<std::size_t>(c)].edges.push_back(
            {local[static_cast<std::size_t>(c)][u], local[static_cast<std::size_t>(c)][v], g.w[e]});
    }
    return comps;
}

std::int64_t tree_component_value(const Component& c) {
    std::size_t n = c.verts.size();
    std::vector<std::vector<std::pair<int, std::int64_t>>> adj(n);
    for (const auto& e : c.edges) {
        adj[static_cast<std::size_t>(e[0])].emplace_back(static_cast<int>(e[1]), e[2]);
        adj[static_cast<std::size_t>(e[1])].emplace_back(static_cast<int>(e[0]), e[2]);
    }
    // dp0 = best in subtree with root unmatched, dp1 = best with root free to
    // match a child. Iterative post-order.
    std::vector<std::int64_t> unmatched(n, 0), best(n, 0);
    std::vector<int> parent(n, -1), order;
    order.reserve(n);
    std::vector<int> stack{0};
    std::vector<std::int8_t> seen(n, 0);
    seen[0] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        order.push_back(v);
        for (auto [to, w] : adj[static_cast<std::size_t>(v)]) {
            if (seen[static_cast<std::size_t>(to)]) continue;
            seen[static_cast<std::size_t>(to)] = 1;
            parent[static_cast<std::size_t>(to)] = v;
            stack.push_back(to);
        }
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        int v = *it;
        std::int64_t sum_best = 0;
        for (auto [to, w] : adj[static_cast<std::size_t>(v)])
            if (to != parent[static_cast<std::size_t>(v)]) sum_best += best[static_cast<std::size_t>(to)];
        unmatched[static_cast<std::size_t>(v)] = sum_best;
        std::int64_t matched = sum_best;
        for (auto [to, w] : adj[static_cast<std::size_t>(v)]) {
            if (to == parent[static_cast<std::size_t>(v)]) continue;
            std::int64_t cand = sum_best - best[static_cast<std::size_t>(to)] +
                                unmatched[static_cast<std::size_t>(to)] + w;
            matched = std::max(matched, cand);
        }
        best[static_cast<std::size_t>(v)] = std::max(sum_best, matched);
    }
    return best[0];
}

class MaskSolver {
public:
    explicit MaskSolver(const Component& c) : n_(c.verts.size()), adj_(n_) {
        for (const auto& e : c.edges) {
            adj_[static_cast<std::size_t>(e[0])].emplace_back(static_cast<int>(e[1]), e[2]);
            adj_[static_cast<std::size_t>(e[1])].emplace_back(static_cast<int>(e[0]), e[2]);
        }
        for (auto& a : adj_) std::sort(a.begin(), a.end());
    }

    std::int64_t solve() {
        if (n_ > 64) throw SizeLimitExceeded("component too large for mask solver");
        std::uint64_t full = n_ == 64 ? ~0ULL : ((1ULL << n_) - 1);
        return value(full);
    }

private:
    std::int64_t value(std::uint64_t mask) {
        if (mask == 0) return 0;
        auto it = memo_.find(mask);
        if (it != memo_.end()) return it->second;
        if (memo_.size() > (1u << 26))
            throw SizeLimitExceeded("mask solver state count exceeded");
        int v = std::countr_zero(mask);
        std::uint64_t rest = mask & (mask - 1);
        std::int64_t best = value(rest);
        for (auto [to, w] : adj_[static_cast<std::size_t>(v)]) {
            if (!(mask >> to & 1)) continue;
            best = std::max(best, w + value(rest & ~(1ULL << to)));
        }
        memo_.emplace(mask, best);
        return best;
    }

    std::size_t n_;
    std::vector<std::vector<std::pair<int, std::int64_t>>> adj_;
    std::unordered_map<std::uint64_t, std::int64_t> memo_;
};

std::int64_t general_value(const ScaledGraph& g, const std::vector<std::int8_t>& avail) {
    std::int64_t total = 0;
    for (const Component& c : split_components(g, avail)) {
        if (c.edges.size() == c.verts.size() - 1)
            total += tree_component_value(c);
        else
            total += MaskSolver(c).solve();
    }
    return total;
}

void check_limits(const WeightedGraph& g, const ExactSolverLimits& limits) {
    if (g.is_bipartite()) return;
    std::vector<std::int8_t> touched(static_cast<std::size_t>(g.num_vertices()), 0);
    for (const Edge& e : g.edges())
        touched[static_cast<std::size_t>(e.u)] = touched[static_cast<std::size_t>(e.v)] = 1;
    long active = std::count(touched.begin(), touched.end(), std::int8_t{1});
    if (active <= limits.max_vertices) return;
    if (g.num_edges() <= limits.max_edges) return;
    throw SizeLimitExceeded("non-bipartite instance with " + std::to_string(active) + " vertices / " +
                            std::to_string(g.num_edges()) + " edges exceeds exact-solver limits");
}

std::int64_t scaled_value(const ScaledGraph& sg, const WeightedGraph& g,
                          const std::vector<std::int8_t>& avail) {
    if (g.is_bipartite()) return hungarian_value(sg, *g.bipartition(), avail);
    return general_value(sg, avail);
}

}  // namespace

std::vector<EdgeId> max_cardinality_matching(VertexId n, const PairList& edges) {
    auto side = two_color(n, edges);
    std::vector<VertexId> mate;
    if (side) {
        mate = HopcroftKarp(n, edges, *side).run();
    } else {
        mate = BlossomMatcher(n, edges).run();
    }
    return mate_to_edge_ids(edges, mate);
}

std::size_t max_cardinality_value(VertexId n, const PairList& edges) {
    return max_cardinality_matching(n, edges).size();
}

Rational max_weight_value(const WeightedGraph& g, const ExactSolverLimits& limits) {
    if (g.num_edges() == 0) return Rational(0);
    check_limits(g, limits);
    ScaledGraph sg = ScaledGraph::from(g);
    std::vector<std::int8_t> avail(static_cast<std::size_t>(g.num_vertices()), 1);
    return Rational(scaled_value(sg, g, avail)) / Rational(sg.scale);
}

Matching max_weight_matching(const WeightedGraph& g, const ExactSolverLimits& limits) {
    Matching m;
    if (g.num_edges() == 0) return m;
    check_limits(g, limits);
    ScaledGraph sg = ScaledGraph::from(g);
    std::vector<std::int8_t> avail(static_cast<std::size_t>(g.num_vertices()), 1);
    std::int64_t target = scaled_value(sg, g, avail);

    // Lexicographic refinement: force each edge in (by increasing id) whenever
    // some maximum-weight matching extends the forced set through it.
    std::int64_t forced_weight = 0;
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        const Edge& ed = g.edge(e);
        if (!avail[static_cast<std::size_t>(ed.u)] || !avail[static_cast<std::size_t>(ed.v)]) continue;
        avail[static_cast<std::size_t>(ed.u)] = avail[static_cast<std::size_t>(ed.v)] = 0;
        std::int64_t with_e = forced_weight + sg.w[static_cast<std::size_t>(e)] + scaled_value(sg, g, avail);
        if (with_e == target) {
            forced_weight += sg.w[static_cast<std::size_t>(e)];
            m.edges.push_back(e);
        } else {
            avail[static_cast<std::size_t>(ed.u)] = avail[static_cast<std::size_t>(ed.v)] = 1;
        }
    }
    return m;
}

}  // namespace mws
