#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mws/edcs.hpp"
#include "mws/exact.hpp"
#include "mws/graph.hpp"
#include "mws/rng.hpp"
#include "mws/unfold.hpp"

namespace mws {

/// Run parameters. Theory mode derives everything from epsilon via
/// parameters_from_epsilon; any field may be overridden afterwards
/// (manual_overrides records that).
struct AlgorithmConfig {
    Rational eps;
    Rational lambda;
    BetaInt beta = 2;
    std::int64_t alpha = 1;       // epoch length in batches
    std::int64_t gamma = 0;       // space-analysis quantity; logged, gates nothing
    std::int64_t b = 1;           // batch size bound
    std::int64_t n = 0;           // vertex count of the (possibly unfolded) host
    std::int64_t q = 0;           // batch count
    bool manual_overrides = false;

    void validate() const;
};

/// lambda = eps/512, beta = ceil(144 lambda^-2 ln(2b/lambda)),
/// alpha = max(1, floor(eps q / (b (n beta^2 + 1)))), gamma = ceil(7 ln(n) q / alpha).
AlgorithmConfig parameters_from_epsilon(const Rational& eps, std::int64_t b, std::int64_t n,
                                        std::int64_t q);

/// ceil(scale * lambda^-power * ln(log_arg)). Natural log; best-effort
/// rounding at magnitudes beyond exact long-double integers.
BetaInt ceil_scaled_log(const Rational& lambda, int power, std::int64_t scale,
                        const Rational& log_arg);

/// Ordered sequence of disjoint edge batches. The arrival order is a seeded
/// uniform permutation of the adversary-supplied batch set.
struct BatchStream {
    std::vector<std::vector<EdgeId>> batches;
    std::int64_t b = 1;
    std::vector<std::uint32_t> order;
    std::uint64_t order_seed = 0;

    std::int64_t q() const { return static_cast<std::int64_t>(batches.size()); }

    static BatchStream shuffled(std::vector<std::vector<EdgeId>> batches, std::int64_t b,
                                std::uint64_t seed);
    /// Keeps the given order; used where the caller already randomized.
    static BatchStream sequential(std::vector<std::vector<EdgeId>> batches, std::int64_t b);

    void validate(EdgeId host_edges) const;
};

struct BatchEvent {
    std::int64_t position;   // index in arrival order
    std::int32_t inserted;
    std::int32_t removed;
    std::int32_t collected;  // edges picked into U (Phase 2)
};

struct RunTrace {
    std::int64_t phase1_batches = 0;
    std::int64_t epochs = 0;
    std::int64_t modifications = 0;
    std::int64_t h_size = 0;
    std::int64_t u_size = 0;
    std::int64_t alpha_used = 1;
    bool early_exhaustion = false;  // stream ended before an underfull-free epoch
    std::int64_t peak_stored = 0;   // max |H| + |U| seen after any batch
    std::vector<BatchEvent> events;
};

struct RunResult {
    std::vector<EdgeId> h_edges;  // sorted
    std::vector<EdgeId> u_edges;  // sorted
    RunTrace trace;
};

/// Incremental two-phase runner. Phase 1 inserts underfull edges epoch by
/// epoch and freezes H after the first epoch without an insertion; Phase 2
/// collects underfull arrivals into U. Feeding continues across parties in
/// the communication protocols, so the full state lives here.
class BatchBernsteinRunner {
public:
    BatchBernsteinRunner(VertexId n, const AlgorithmConfig& cfg);

    void feed(const std::vector<EdgeId>& ids,
              const std::vector<std::pair<VertexId, VertexId>>& pairs);
    RunResult finish() const;

    bool in_phase2() const { return phase2_; }
    std::int64_t batches_fed() const { return batch_index_; }
    std::int64_t stored_edges() const {
        return static_cast<std::int64_t>(h_.size() + u_.size());
    }
    /// Serialized size in words: one word per endpoint of every stored edge
    /// plus the scalar counters.
    std::int64_t state_words() const { return 2 * stored_edges() + 6; }
    const DegreeBoundedSubgraph& subgraph() const { return h_; }

private:
    AlgorithmConfig cfg_;
    DegreeBoundedSubgraph h_;
    std::vector<EdgeId> u_;
    RunTrace trace_;
    bool phase2_ = false;
    bool found_underfull_ = false;
    std::int64_t epoch_pos_ = 0;
    std::int64_t batch_index_ = 0;
};

/// Algorithm run over a prepared stream. host_pairs[e] are the endpoints of
/// edge id e.
RunResult run_batch_bernstein(VertexId n,
                              const std::vector<std::pair<VertexId, VertexId>>& host_pairs,
                              const BatchStream& stream, const AlgorithmConfig& cfg);

/// Weighted reduction: arriving weighted edge e becomes the batch phi(e) of
/// its unfolded copies. Result ids are unfolded edge ids of `phi`.
struct WeightedRunResult {
    RunResult run;
    std::vector<EdgeId> weighted_order;  // origin edge ids in arrival order
};

WeightedRunResult weighted_stream_adapter(const UnfoldedGraph& phi,
                                          const std::vector<EdgeId>& arrival_order,
                                          const AlgorithmConfig& cfg);

/// Exact maximum-weight matching of R(H u U); origin edge ids.
Matching finalize_weighted(const UnfoldedGraph& phi, const std::vector<EdgeId>& h_edges,
                           const std::vector<EdgeId>& u_edges,
                           const ExactSolverLimits& limits = {});

/// Stores the whole stream and answers exactly while at most `threshold`
/// edges arrive (inclusive); defers to the streaming pipeline otherwise.
struct FallbackResult {
    bool stored_all = false;
    Matching matching;                       // origin edge ids
    std::int64_t stored_edges = 0;
    std::optional<WeightedRunResult> run;    // present when deferred
};

FallbackResult small_graph_fallback(const WeightedGraph& g, const UnfoldedGraph& phi,
                                    const std::vector<EdgeId>& arrival_order,
                                    std::int64_t threshold, const AlgorithmConfig& cfg,
                                    const ExactSolverLimits& limits = {});

/// Edge ids arriving strictly after the last Phase-1 batch.
std::vector<EdgeId> late_edges(const BatchStream& stream, const RunTrace& trace);

/// Hard per-run invariants: Phase-1 length, degree bound and |H| <= n beta,
/// modification budget n beta^2, and U replay against the underfull rule.
struct InvariantReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

InvariantReport check_run_invariants(VertexId n,
                                     const std::vector<std::pair<VertexId, VertexId>>& host_pairs,
                                     const BatchStream& stream, const AlgorithmConfig& cfg,
                                     const RunResult& result);

}  // namespace mws
