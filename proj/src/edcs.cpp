#include "mws/edcs.hpp"

#include <algorithm>

#include "mws/error.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace mws {

std::string beta_to_string(BetaInt beta) {
    if (beta == 0) return "0";
    bool neg = beta < 0;
    if (neg) beta = -beta;
    std::string s;
    while (beta > 0) {
        s.insert(s.begin(), static_cast<char>('0' + int(beta % 10)));
        beta /= 10;
    }
    return neg ? "-" + s : s;
}

double beta_to_double(BetaInt beta) { return static_cast<double>(beta); }

bool degree_sum_underfull(std::int64_t deg_sum, BetaInt beta, const Rational& lambda) {
    // deg_sum < beta * (q - p) / q  with lambda = p/q.
    BetaInt lhs = BetaInt(deg_sum) * lambda.den();
    BetaInt rhs = beta * (lambda.den() - lambda.num());
    return lhs < rhs;
}

DegreeBoundedSubgraph::DegreeBoundedSubgraph(VertexId n, BetaInt beta, Rational lambda)
    : n_(n),
      beta_(beta),
      lambda_(lambda),
      deg_(static_cast<std::size_t>(n), 0),
      adj_(static_cast<std::size_t>(n)) {
    if (beta < 2) throw Error("beta must be an integer >= 2");
    if (!(lambda > Rational(0) && lambda < Rational(1)))
        throw Error("lambda must lie in (0,1)");
}

std::size_t DegreeBoundedSubgraph::pick_violation(const std::vector<std::size_t>& candidates) const {
    std::size_t best = members_.size();
    std::int64_t best_sum = 0;
    for (std::size_t i : candidates) {
        const Member& m = members_[i];
        if (!m.alive) continue;
        std::int64_t s = deg_[static_cast<std::size_t>(m.u)] + deg_[static_cast<std::size_t>(m.v)];
        if (BetaInt(s) <= beta_) continue;
        if (best == members_.size() || s > best_sum || (s == best_sum && m.id < members_[best].id)) {
            best = i;
            best_sum = s;
        }
    }
    return best;
}

void DegreeBoundedSubgraph::kill(std::size_t index) {
    Member& m = members_[index];
    m.alive = false;
    --deg_[static_cast<std::size_t>(m.u)];
    --deg_[static_cast<std::size_t>(m.v)];
    id_set_.erase(m.id);
    --alive_count_;
    ++modifications_;
}

// Removals only consider edges at u or v: an insertion raises exactly those
// two degrees, and every deletion lowers degrees, so no violation can appear
// elsewhere.
std::size_t DegreeBoundedSubgraph::cascade_remove(VertexId u, VertexId v) {
    std::size_t removed = 0;
    for (;;) {
        std::vector<std::size_t> candidates;
        for (VertexId x : {u, v}) {
            auto& lst = adj_[static_cast<std::size_t>(x)];
            lst.erase(std::remove_if(lst.begin(), lst.end(),
                                     [&](std::size_t i) { return !members_[i].alive; }),
                      lst.end());
            candidates.insert(candidates.end(), lst.begin(), lst.end());
        }
        std::size_t best = pick_violation(candidates);
        if (best == members_.size()) break;
        kill(best);
        ++removed;
    }
    return removed;
}

bool DegreeBoundedSubgraph::insert_if_underfull(EdgeId e, VertexId u, VertexId v) {
    if (id_set_.count(e)) throw DuplicateEdge("edge " + std::to_string(e) + " already in H");
    if (!is_underfull_pair(u, v)) return false;
    members_.push_back(Member{e, u, v, true});
    adj_[static_cast<std::size_t>(u)].push_back(members_.size() - 1);
    adj_[static_cast<std::size_t>(v)].push_back(members_.size() - 1);
    id_set_.insert(e);
    ++alive_count_;
    ++deg_[static_cast<std::size_t>(u)];
    ++deg_[static_cast<std::size_t>(v)];
    ++modifications_;
    cascade_remove(u, v);
    return true;
}

std::size_t DegreeBoundedSubgraph::remove_overfull_edges() {
    std::size_t removed = 0;
    std::vector<std::size_t> all;
    for (;;) {
        all.clear();
        for (std::size_t i = 0; i < members_.size(); ++i)
            if (members_[i].alive) all.push_back(i);
        std::size_t best = pick_violation(all);
        if (best == members_.size()) break;
        kill(best);
        ++removed;
    }
    return removed;
}

std::vector<EdgeId> DegreeBoundedSubgraph::edge_ids() const {
    std::vector<EdgeId> ids;
    ids.reserve(alive_count_);
    for (const Member& m : members_)
        if (m.alive) ids.push_back(m.id);
    std::sort(ids.begin(), ids.end());
    return ids;
}

std::vector<std::string> DegreeBoundedSubgraph::check_invariants() const {
    std::vector<std::string> out;
    std::vector<std::int64_t> truth(static_cast<std::size_t>(n_), 0);
    std::size_t alive = 0;
    for (const Member& m : members_) {
        if (!m.alive) continue;
        ++alive;
        ++truth[static_cast<std::size_t>(m.u)];
        ++truth[static_cast<std::size_t>(m.v)];
    }
    if (alive != alive_count_) out.push_back("alive count mismatch");
    for (VertexId v = 0; v < n_; ++v)
        if (truth[static_cast<std::size_t>(v)] != deg_[static_cast<std::size_t>(v)])
            out.push_back("degree counter mismatch at vertex " + std::to_string(v));
    for (const Member& m : members_) {
        if (!m.alive) continue;
        std::int64_t s = deg_[static_cast<std::size_t>(m.u)] + deg_[static_cast<std::size_t>(m.v)];
        if (BetaInt(s) > beta_)
            out.push_back("edge " + std::to_string(m.id) + " violates the degree bound");
    }
    // |H| <= n*beta/2: every endpoint carries degree at most beta.
    if (BetaInt(2) * BetaInt(alive_count_) > BetaInt(n_) * beta_)
        out.push_back("H larger than n*beta/2");
    return out;
}

namespace {

std::vector<std::int64_t> degrees_of(VertexId n,
                                     const std::vector<std::pair<VertexId, VertexId>>& edges,
                                     const std::vector<std::int8_t>& in_h) {
    std::vector<std::int64_t> deg(static_cast<std::size_t>(n), 0);
    for (std::size_t e = 0; e < edges.size(); ++e) {
        if (!in_h[e]) continue;
        ++deg[static_cast<std::size_t>(edges[e].first)];
        ++deg[static_cast<std::size_t>(edges[e].second)];
    }
    return deg;
}

}  // namespace

EdcsReport certify_edcs(VertexId n, const std::vector<std::pair<VertexId, VertexId>>& edges,
                        const std::vector<std::int8_t>& in_h, BetaInt beta, const Rational& lambda) {
    if (in_h.size() != edges.size()) throw Error("in_h size mismatch");
    if (!(lambda >= Rational(0) && lambda < Rational(1)))
        throw Error("lambda must lie in [0,1)");
    std::vector<std::int64_t> deg = degrees_of(n, edges, in_h);
    EdcsReport report;
    for (std::size_t e = 0; e < edges.size(); ++e) {
        std::int64_t s = deg[static_cast<std::size_t>(edges[e].first)] +
                         deg[static_cast<std::size_t>(edges[e].second)];
        if (in_h[e]) {
            if (BetaInt(s) > beta) report.p1_violations.push_back(static_cast<EdgeId>(e));
        } else {
            if (degree_sum_underfull(s, beta, lambda))
                report.p2_violations.push_back(static_cast<EdgeId>(e));
        }
    }
    return report;
}

EdcsReport certify_edcs_parallel(VertexId n, const std::vector<std::pair<VertexId, VertexId>>& edges,
                                 const std::vector<std::int8_t>& in_h, BetaInt beta,
                                 const Rational& lambda) {
    if (in_h.size() != edges.size()) throw Error("in_h size mismatch");
    if (!(lambda >= Rational(0) && lambda < Rational(1)))
        throw Error("lambda must lie in [0,1)");
    std::vector<std::int64_t> deg = degrees_of(n, edges, in_h);
    std::vector<std::int8_t> p1(edges.size(), 0), p2(edges.size(), 0);
    const auto m = static_cast<std::int64_t>(edges.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (std::int64_t e = 0; e < m; ++e) {
        const auto idx = static_cast<std::size_t>(e);
        std::int64_t s = deg[static_cast<std::size_t>(edges[idx].first)] +
                         deg[static_cast<std::size_t>(edges[idx].second)];
        if (in_h[idx]) {
            if (BetaInt(s) > beta) p1[idx] = 1;
        } else {
            if (degree_sum_underfull(s, beta, lambda)) p2[idx] = 1;
        }
    }
    EdcsReport report;
    for (std::size_t e = 0; e < edges.size(); ++e) {
        if (p1[e]) report.p1_violations.push_back(static_cast<EdgeId>(e));
        if (p2[e]) report.p2_violations.push_back(static_cast<EdgeId>(e));
    }
    return report;
}

}  // namespace mws
