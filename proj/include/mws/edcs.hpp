#pragma once

#include <cstdint>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "mws/graph.hpp"
#include "mws/rational.hpp"

namespace mws {

/// Degree-bound parameter. 128 bits: the theory formulas produce values far
/// beyond int64 (comm-model beta is ~lambda^-4), and threshold comparisons
/// must stay exact.
using BetaInt = __int128;

std::string beta_to_string(BetaInt beta);
double beta_to_double(BetaInt beta);

/// deg_sum < beta * (1 - lambda), evaluated exactly in integer arithmetic.
bool degree_sum_underfull(std::int64_t deg_sum, BetaInt beta, const Rational& lambda);

/// Mutable subgraph H with per-vertex degree counters. After every public
/// mutation every H-edge satisfies deg(u) + deg(v) <= beta.
class DegreeBoundedSubgraph {
public:
    DegreeBoundedSubgraph(VertexId n, BetaInt beta, Rational lambda);

    VertexId num_vertices() const { return n_; }
    BetaInt beta() const { return beta_; }
    const Rational& lambda() const { return lambda_; }

    std::int64_t degree(VertexId v) const { return deg_[static_cast<std::size_t>(v)]; }
    std::size_t size() const { return alive_count_; }
    std::int64_t modifications() const { return modifications_; }
    bool contains(EdgeId e) const { return id_set_.count(e) > 0; }

    bool is_underfull_pair(VertexId u, VertexId v) const {
        return degree_sum_underfull(degree(u) + degree(v), beta_, lambda_);
    }

    /// Adds (u,v) when underfull, then restores the degree bound. Returns
    /// whether the edge went in. Throws DuplicateEdge if e is already in H.
    bool insert_if_underfull(EdgeId e, VertexId u, VertexId v);

    /// Deletes edges with deg(u) + deg(v) > beta until none remain, highest
    /// degree sum first, ties broken by smallest edge id.
    std::size_t remove_overfull_edges();

    /// Edge ids currently in H, sorted.
    std::vector<EdgeId> edge_ids() const;

    /// Empty when all bookkeeping invariants hold: degree bound on every
    /// member, counters equal true degrees, |H| <= n*beta/2.
    std::vector<std::string> check_invariants() const;

private:
    struct Member {
        EdgeId id;
        VertexId u, v;
        bool alive;
    };

    std::size_t pick_violation(const std::vector<std::size_t>& candidates) const;
    void kill(std::size_t index);
    std::size_t cascade_remove(VertexId u, VertexId v);

    VertexId n_;
    BetaInt beta_;
    Rational lambda_;
    std::vector<std::int64_t> deg_;
    std::vector<Member> members_;               // append-only, alive flags
    std::vector<std::vector<std::size_t>> adj_;  // vertex -> member indices, may hold dead entries
    std::unordered_set<EdgeId> id_set_;
    std::size_t alive_count_ = 0;
    std::int64_t modifications_ = 0;
};

struct EdcsReport {
    std::vector<EdgeId> p1_violations;  // H-edges with deg sum > beta
    std::vector<EdgeId> p2_violations;  // non-H edges with deg sum < beta(1-lambda)

    bool clean() const { return p1_violations.empty() && p2_violations.empty(); }
};

/// Checks both EDCS properties of H inside the host graph. in_h[e] marks
/// membership per host edge. lambda may be zero here (plain EDCS definition).
EdcsReport certify_edcs(VertexId n, const std::vector<std::pair<VertexId, VertexId>>& edges,
                        const std::vector<std::int8_t>& in_h, BetaInt beta, const Rational& lambda);

/// OpenMP variant; same result as certify_edcs.
EdcsReport certify_edcs_parallel(VertexId n, const std::vector<std::pair<VertexId, VertexId>>& edges,
                                 const std::vector<std::int8_t>& in_h, BetaInt beta,
                                 const Rational& lambda);

}  // namespace mws
