#include "mws/stream.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <unordered_set>

#include "mws/error.hpp"

namespace mws {

namespace {

constexpr BetaInt kBetaCap = (std::numeric_limits<BetaInt>::max)() / 1024;

BetaInt mul_saturating(BetaInt a, BetaInt b) {
    if (a == 0 || b == 0) return 0;
    if (a > kBetaCap / b) return kBetaCap;
    return a * b;
}

}  // namespace

void AlgorithmConfig::validate() const {
    if (!(lambda > Rational(0) && lambda < Rational(1)))
        throw Error("config: lambda must lie in (0,1)");
    if (beta < 2) throw Error("config: beta must be an integer >= 2");
    if (alpha < 1) throw Error("config: alpha must be an integer >= 1");
    if (b < 1) throw Error("config: batch bound must be >= 1");
    if (n < 0 || q < 0) throw Error("config: negative dimensions");
}

BetaInt ceil_scaled_log(const Rational& lambda, int power, std::int64_t scale,
                        const Rational& log_arg) {
    // scale * (q/p)^power * ln(log_arg), lambda = p/q.
    BetaInt qp = 1, pp = 1;
    for (int i = 0; i < power; ++i) {
        qp = mul_saturating(qp, lambda.den());
        pp = mul_saturating(pp, lambda.num());
    }
    BetaInt scaled = mul_saturating(qp, scale);
    long double ln = std::log(static_cast<long double>(log_arg.num()) /
                              static_cast<long double>(log_arg.den()));
    long double value = static_cast<long double>(scaled) * ln / static_cast<long double>(pp);
    if (value >= static_cast<long double>(kBetaCap)) return kBetaCap;
    auto ceiled = static_cast<BetaInt>(std::ceil(value));
    return ceiled < 2 ? 2 : ceiled;
}

AlgorithmConfig parameters_from_epsilon(const Rational& eps, std::int64_t b, std::int64_t n,
                                        std::int64_t q) {
    if (!(eps > Rational(0) && eps < Rational(1, 2)))
        throw Error("epsilon must lie in (0, 1/2)");
    if (b < 1 || n < 1 || q < 0) throw Error("parameters need b, n >= 1 and q >= 0");
    AlgorithmConfig cfg;
    cfg.eps = eps;
    cfg.lambda = eps / Rational(512);
    cfg.beta = ceil_scaled_log(cfg.lambda, 2, 144, Rational(2 * b) / cfg.lambda);
    cfg.b = b;
    cfg.n = n;
    cfg.q = q;
    // alpha = max(1, floor(eps q / (b (n beta^2 + 1)))), saturating: a huge
    // beta simply clamps alpha to one batch per epoch.
    BetaInt denom = mul_saturating(
        BetaInt(b) * eps.den(),
        mul_saturating(BetaInt(n), mul_saturating(cfg.beta, cfg.beta)) + 1);
    BetaInt numer = BetaInt(eps.num()) * q;
    BetaInt alpha = denom == 0 ? 1 : numer / denom;
    cfg.alpha = alpha < 1 ? 1 : static_cast<std::int64_t>(alpha);
    long double g = 7.0L * std::log(static_cast<long double>(n)) *
                    static_cast<long double>(q) / static_cast<long double>(cfg.alpha);
    cfg.gamma = static_cast<std::int64_t>(std::ceil(g));
    cfg.manual_overrides = false;
    cfg.validate();
    return cfg;
}

BatchStream BatchStream::shuffled(std::vector<std::vector<EdgeId>> batches, std::int64_t b,
                                  std::uint64_t seed) {
    BatchStream s;
    s.batches = std::move(batches);
    s.b = b;
    s.order = Rng::permutation(s.batches.size(), Rng(seed));
    s.order_seed = seed;
    return s;
}

BatchStream BatchStream::sequential(std::vector<std::vector<EdgeId>> batches, std::int64_t b) {
    BatchStream s;
    s.batches = std::move(batches);
    s.b = b;
    s.order.resize(s.batches.size());
    for (std::size_t i = 0; i < s.order.size(); ++i) s.order[i] = static_cast<std::uint32_t>(i);
    return s;
}

void BatchStream::validate(EdgeId host_edges) const {
    if (order.size() != batches.size()) throw Error("stream order length mismatch");
    std::vector<std::int8_t> seen(static_cast<std::size_t>(host_edges), 0);
    for (const auto& batch : batches) {
        if (batch.empty()) throw Error("empty batch");
        if (static_cast<std::int64_t>(batch.size()) > b) throw Error("batch exceeds bound b");
        for (EdgeId e : batch) {
            if (e < 0 || e >= host_edges) throw Error("batch references unknown edge");
            if (seen[static_cast<std::size_t>(e)]) throw Error("edge repeated across batches");
            seen[static_cast<std::size_t>(e)] = 1;
        }
    }
}

BatchBernsteinRunner::BatchBernsteinRunner(VertexId n, const AlgorithmConfig& cfg)
    : cfg_(cfg), h_(n, cfg.beta, cfg.lambda) {
    cfg_.validate();
    trace_.alpha_used = cfg_.alpha;
}

void BatchBernsteinRunner::feed(const std::vector<EdgeId>& ids,
                                const std::vector<std::pair<VertexId, VertexId>>& pairs) {
    BatchEvent ev{batch_index_, 0, 0, 0};
    ++batch_index_;
    if (!phase2_) {
        ++trace_.phase1_batches;
        std::int64_t mods_before = h_.modifications();
        for (std::size_t i = 0; i < ids.size(); ++i) {
            auto [u, v] = pairs[i];
            if (h_.insert_if_underfull(ids[i], u, v)) {
                found_underfull_ = true;
                ++ev.inserted;
            }
        }
        ev.removed = static_cast<std::int32_t>(h_.modifications() - mods_before - ev.inserted);
        if (++epoch_pos_ == cfg_.alpha) {
            ++trace_.epochs;
            epoch_pos_ = 0;
            if (!found_underfull_)
                phase2_ = true;
            else
                found_underfull_ = false;
        }
    } else {
        for (std::size_t i = 0; i < ids.size(); ++i) {
            auto [u, v] = pairs[i];
            if (h_.is_underfull_pair(u, v)) {
                u_.push_back(ids[i]);
                ++ev.collected;
            }
        }
    }
    trace_.peak_stored = std::max(trace_.peak_stored, stored_edges());
    trace_.events.push_back(ev);
}

RunResult BatchBernsteinRunner::finish() const {
    RunResult r;
    r.h_edges = h_.edge_ids();
    r.u_edges = u_;
    std::sort(r.u_edges.begin(), r.u_edges.end());
    r.trace = trace_;
    r.trace.early_exhaustion = !phase2_;
    r.trace.modifications = h_.modifications();
    r.trace.h_size = static_cast<std::int64_t>(r.h_edges.size());
    r.trace.u_size = static_cast<std::int64_t>(r.u_edges.size());
    return r;
}

RunResult run_batch_bernstein(VertexId n,
                              const std::vector<std::pair<VertexId, VertexId>>& host_pairs,
                              const BatchStream& stream, const AlgorithmConfig& cfg) {
    stream.validate(static_cast<EdgeId>(host_pairs.size()));
    BatchBernsteinRunner runner(n, cfg);
    std::vector<std::pair<VertexId, VertexId>> pairs;
    for (std::uint32_t bi : stream.order) {
        const auto& ids = stream.batches[bi];
        pairs.clear();
        for (EdgeId e : ids) pairs.push_back(host_pairs[static_cast<std::size_t>(e)]);
        runner.feed(ids, pairs);
    }
    return runner.finish();
}

WeightedRunResult weighted_stream_adapter(const UnfoldedGraph& phi,
                                          const std::vector<EdgeId>& arrival_order,
                                          const AlgorithmConfig& cfg) {
    const WeightedGraph& g = phi.origin();
    if (!g.has_integral_weights())
        throw NonIntegralWeight("weighted stream adapter needs integral weights");
    if (Rational(cfg.b) < g.max_weight())
        throw Error("config batch bound b is below the maximum weight W");
    if (static_cast<EdgeId>(arrival_order.size()) != g.num_edges())
        throw Error("arrival order must cover every edge exactly once");

    WeightedRunResult out;
    out.weighted_order = arrival_order;
    BatchBernsteinRunner runner(phi.num_vertices(), cfg);
    for (EdgeId origin_edge : arrival_order) {
        std::vector<EdgeId> ids = phi.edges_of_origin(origin_edge);
        std::vector<std::pair<VertexId, VertexId>> pairs;
        pairs.reserve(ids.size());
        for (EdgeId id : ids) {
            const UnfoldedEdge& e = phi.edge(id);
            pairs.emplace_back(phi.dense_id(e.u, e.u_copy), phi.dense_id(e.v, e.v_copy));
        }
        runner.feed(ids, pairs);
    }
    out.run = runner.finish();
    return out;
}

Matching finalize_weighted(const UnfoldedGraph& phi, const std::vector<EdgeId>& h_edges,
                           const std::vector<EdgeId>& u_edges, const ExactSolverLimits& limits) {
    std::vector<EdgeId> all = h_edges;
    all.insert(all.end(), u_edges.begin(), u_edges.end());
    return refolded_max_weight_matching(phi, all, limits);
}

FallbackResult small_graph_fallback(const WeightedGraph& g, const UnfoldedGraph& phi,
                                    const std::vector<EdgeId>& arrival_order,
                                    std::int64_t threshold, const AlgorithmConfig& cfg,
                                    const ExactSolverLimits& limits) {
    FallbackResult out;
    if (g.num_edges() <= threshold) {
        out.stored_all = true;
        out.stored_edges = g.num_edges();
        out.matching = max_weight_matching(g, limits);
        return out;
    }
    out.run = weighted_stream_adapter(phi, arrival_order, cfg);
    out.stored_edges = static_cast<std::int64_t>(out.run->run.h_edges.size() +
                                                 out.run->run.u_edges.size());
    out.matching = finalize_weighted(phi, out.run->run.h_edges, out.run->run.u_edges, limits);
    return out;
}

std::vector<EdgeId> late_edges(const BatchStream& stream, const RunTrace& trace) {
    std::vector<EdgeId> out;
    for (std::size_t pos = static_cast<std::size_t>(trace.phase1_batches); pos < stream.order.size();
         ++pos)
        for (EdgeId e : stream.batches[stream.order[pos]]) out.push_back(e);
    std::sort(out.begin(), out.end());
    return out;
}

InvariantReport check_run_invariants(VertexId n,
                                     const std::vector<std::pair<VertexId, VertexId>>& host_pairs,
                                     const BatchStream& stream, const AlgorithmConfig& cfg,
                                     const RunResult& result) {
    InvariantReport rep;
    const RunTrace& t = result.trace;

    BetaInt budget = mul_saturating(
        mul_saturating(BetaInt(n), mul_saturating(cfg.beta, cfg.beta)) + 1, BetaInt(t.alpha_used));
    if (BetaInt(t.phase1_batches) > budget)
        rep.violations.push_back("phase-1 batches exceed (n beta^2 + 1) * alpha");

    BetaInt mod_budget = mul_saturating(BetaInt(n), mul_saturating(cfg.beta, cfg.beta));
    if (BetaInt(t.modifications) > mod_budget)
        rep.violations.push_back("modification count exceeds n beta^2");

    if (mul_saturating(BetaInt(result.h_edges.size()), 1) > mul_saturating(BetaInt(n), cfg.beta))
        rep.violations.push_back("|H| exceeds n beta");

    // Degree bound of H, recomputed from scratch.
    std::vector<std::int64_t> deg(static_cast<std::size_t>(n), 0);
    for (EdgeId e : result.h_edges) {
        ++deg[static_cast<std::size_t>(host_pairs[static_cast<std::size_t>(e)].first)];
        ++deg[static_cast<std::size_t>(host_pairs[static_cast<std::size_t>(e)].second)];
    }
    for (EdgeId e : result.h_edges) {
        auto [u, v] = host_pairs[static_cast<std::size_t>(e)];
        if (BetaInt(deg[static_cast<std::size_t>(u)] + deg[static_cast<std::size_t>(v)]) > cfg.beta) {
            rep.violations.push_back("H edge " + std::to_string(e) + " breaks the degree bound");
            break;
        }
    }

    // U replay: exactly the underfull late arrivals, judged against final H.
    std::unordered_set<EdgeId> h_set(result.h_edges.begin(), result.h_edges.end());
    std::vector<EdgeId> expected;
    for (EdgeId e : late_edges(stream, t)) {
        if (h_set.count(e)) {
            rep.violations.push_back("H contains a late arrival");
            continue;
        }
        auto [u, v] = host_pairs[static_cast<std::size_t>(e)];
        std::int64_t s = deg[static_cast<std::size_t>(u)] + deg[static_cast<std::size_t>(v)];
        if (degree_sum_underfull(s, cfg.beta, cfg.lambda)) expected.push_back(e);
    }
    std::sort(expected.begin(), expected.end());
    if (expected != result.u_edges) rep.violations.push_back("U does not replay-match the underfull rule");

    // Event-log consistency.
    std::int64_t inserted = 0, removed = 0, collected = 0;
    for (const BatchEvent& ev : t.events) {
        inserted += ev.inserted;
        removed += ev.removed;
        collected += ev.collected;
    }
    if (inserted + removed != t.modifications)
        rep.violations.push_back("event log inconsistent with modification counter");
    if (inserted - removed != t.h_size) rep.violations.push_back("event log inconsistent with |H|");
    if (collected != t.u_size) rep.violations.push_back("event log inconsistent with |U|");
    return rep;
}

}  // namespace mws
