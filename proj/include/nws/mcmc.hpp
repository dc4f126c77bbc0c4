#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include "nws/checkers.hpp"
#include "nws/graph.hpp"
#include "nws/potential.hpp"
#include "nws/rng.hpp"
#include "nws/scc.hpp"
#include "nws/weights.hpp"

namespace nws {

template <WeightType W>
struct ChainState {
    const Graph* graph = nullptr;
    WeightDomain<W> domain;
    WeightAssignment<W> weights;
    Potential<W> potential; // empty when the checker keeps none
    std::uint64_t step_index = 0;
    Pcg64 rng;
};

struct StepStats {
    bool accepted = false;
    std::uint64_t insertions = 0;
    std::uint64_t settled = 0;
};

struct CheckpointRow {
    std::uint64_t steps = 0;
    std::uint64_t accepted = 0;
    double acceptance_rate = 0.0;
    double mean_weight = 0.0;
    double fraction_negative = 0.0;
    double mean_insertions_accepted = 0.0; // cumulative mean over accepted steps
    double mean_insertions_rejected = 0.0; // cumulative mean over rejected steps
    double ns_per_step = 0.0;              // measured over the last checkpoint interval
};

struct RunStats {
    std::vector<CheckpointRow> rows;

    const CheckpointRow& final_row() const { return rows.back(); }
};

// One proposal: a uniform edge id paired with a uniform domain weight. A
// proposal equal to the current weight is the chain's self-loop and counts
// as accepted. Exactly two RNG draws per step, so proposal streams replay
// identically for every checker.
template <WeightType W, typename Checker>
StepStats mcmc_step(ChainState<W>& state, Checker& checker) {
    const auto e = static_cast<EdgeId>(state.rng.next_below(state.graph->edge_count()));
    const W c = state.domain.sample(state.rng);
    const Proposal<W> proposal{e, c};

    Verdict verdict;
    if constexpr (requires { checker.check(state.weights, state.potential, proposal); }) {
        verdict = checker.check(state.weights, state.potential, proposal);
    } else {
        verdict = checker.check(state.weights, proposal);
    }
    if (verdict.accepted) {
        state.weights[e] = c;
    }
    ++state.step_index;
    return {verdict.accepted, verdict.insertions, verdict.settled};
}

struct RunConfig {
    std::uint64_t steps = 0; // 0 means the documented default of 100 * m
    CheckerKind checker = CheckerKind::BiDijkstra;
    InitStrategy init = InitStrategy::UniformNonNegative;
    std::uint64_t seed = 0;
    bool warn_not_strongly_connected = true;
    std::vector<std::uint64_t> checkpoints; // empty: powers of two plus the final step
};

template <WeightType W>
struct RunResult {
    WeightAssignment<W> weights;
    RunStats stats;
};

inline std::vector<std::uint64_t> default_checkpoints(std::uint64_t steps) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t c = 1; c < steps && c != 0; c *= 2) {
        out.push_back(c);
    }
    if (steps > 0) {
        out.push_back(steps);
    }
    return out;
}

namespace detail {

template <WeightType W, typename Checker>
RunResult<W> run_chain_impl(const Graph& g, const WeightDomain<W>& domain, const RunConfig& cfg,
                            Checker checker, bool with_potential,
                            const std::function<void(const ChainState<W>&, const StepStats&)>& on_step) {
    ChainState<W> state{&g, domain, {}, {}, 0, Pcg64(cfg.seed)};
    state.weights = initial_weights(g, domain, cfg.init, state.rng);
    if (with_potential) {
        state.potential.assign(g.node_count(), W{0});
    }

    const std::uint64_t steps = cfg.steps != 0 ? cfg.steps : 100ull * g.edge_count();
    std::vector<std::uint64_t> checkpoints =
        cfg.checkpoints.empty() ? default_checkpoints(steps) : cfg.checkpoints;
    std::sort(checkpoints.begin(), checkpoints.end());
    checkpoints.erase(std::unique(checkpoints.begin(), checkpoints.end()), checkpoints.end());

    RunResult<W> result;
    std::uint64_t accepted = 0;
    std::uint64_t insertions_accepted = 0;
    std::uint64_t insertions_rejected = 0;
    std::size_t next_checkpoint = 0;
    auto interval_start = std::chrono::steady_clock::now();
    std::uint64_t interval_steps = 0;

    for (std::uint64_t t = 1; t <= steps; ++t) {
        const StepStats step = mcmc_step(state, checker);
        if (step.accepted) {
            ++accepted;
            insertions_accepted += step.insertions;
        } else {
            insertions_rejected += step.insertions;
        }
        if (on_step) {
            on_step(state, step);
        }
        ++interval_steps;

        if (next_checkpoint < checkpoints.size() && t == checkpoints[next_checkpoint]) {
            const auto now = std::chrono::steady_clock::now();
            CheckpointRow row;
            row.steps = t;
            row.accepted = accepted;
            row.acceptance_rate = static_cast<double>(accepted) / static_cast<double>(t);
            double sum = 0.0;
            std::uint64_t negative = 0;
            for (const W weight : state.weights) {
                sum += static_cast<double>(weight);
                negative += weight < W{0};
            }
            row.mean_weight = sum / static_cast<double>(state.weights.size());
            row.fraction_negative =
                static_cast<double>(negative) / static_cast<double>(state.weights.size());
            row.mean_insertions_accepted =
                accepted == 0 ? 0.0
                              : static_cast<double>(insertions_accepted) / static_cast<double>(accepted);
            row.mean_insertions_rejected =
                t == accepted ? 0.0
                              : static_cast<double>(insertions_rejected) / static_cast<double>(t - accepted);
            row.ns_per_step =
                static_cast<double>(
                    std::chrono::duration_cast<std::chrono::nanoseconds>(now - interval_start).count()) /
                static_cast<double>(interval_steps);
            result.stats.rows.push_back(row);
            ++next_checkpoint;
            interval_start = now;
            interval_steps = 0;
        }
    }

    result.weights = std::move(state.weights);
    return result;
}

} // namespace detail

// Algorithm driver: starts from the configured consistent assignment with an
// all-zero potential (valid because every start strategy is non-negative)
// and runs `steps` proposals through the chosen checker. Fully reproducible
// from the seed.
template <WeightType W>
RunResult<W> run_chain(const Graph& g, const WeightDomain<W>& domain, const RunConfig& cfg,
                       const std::function<void(const ChainState<W>&, const StepStats&)>& on_step = {}) {
    if (domain.hi < W{0}) {
        throw std::invalid_argument("sampling requires a domain with max(W) >= 0");
    }
    if (cfg.warn_not_strongly_connected &&
        strongly_connected_components(g).count > 1) {
        std::cerr << "warning: graph is not strongly connected; consider extracting the "
                     "largest SCC\n";
    }
    switch (cfg.checker) {
    case CheckerKind::BellmanFord:
        return detail::run_chain_impl<W>(g, domain, cfg, BellmanFordChecker<W>(g), false, on_step);
    case CheckerKind::Dijkstra:
        return detail::run_chain_impl<W>(g, domain, cfg, DijkstraChecker<W>(g), true, on_step);
    case CheckerKind::BiDijkstra:
        return detail::run_chain_impl<W>(g, domain, cfg, BiDijkstraChecker<W>(g), true, on_step);
    }
    throw std::logic_error("unknown checker kind");
}

inline unsigned thread_count_from_env() {
    if (const char* env = std::getenv("NWS_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v > 0) {
            return static_cast<unsigned>(v);
        }
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

// Independent chains over one shared graph, one per seed. Scheduling cannot
// influence results: every chain owns its RNG, weights, potential, and
// scratch buffers.
template <WeightType W>
std::vector<RunResult<W>> run_ensemble(const Graph& g, const WeightDomain<W>& domain,
                                       const RunConfig& base_cfg,
                                       const std::vector<std::uint64_t>& seeds,
                                       unsigned parallelism = 0) {
    if (parallelism == 0) {
        parallelism = thread_count_from_env();
    }
    std::vector<RunResult<W>> results(seeds.size());
    std::atomic<std::size_t> next{0};
    const auto worker = [&] {
        while (true) {
            const std::size_t i = next.fetch_add(1);
            if (i >= seeds.size()) {
                return;
            }
            RunConfig cfg = base_cfg;
            cfg.seed = seeds[i];
            cfg.warn_not_strongly_connected = false;
            results[i] = run_chain<W>(g, domain, cfg);
        }
    };
    const unsigned workers = std::min<unsigned>(parallelism, static_cast<unsigned>(seeds.size()));
    if (workers <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned i = 0; i < workers; ++i) {
            pool.emplace_back(worker);
        }
        for (auto& t : pool) {
            t.join();
        }
    }
    return results;
}

} // namespace nws
