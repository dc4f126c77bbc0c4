#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <unordered_set>
#include <vector>

#include "nws/checkers.hpp"
#include "nws/graph.hpp"
#include "nws/mcmc.hpp"
#include "nws/rng.hpp"
#include "nws/weights.hpp"

namespace nws {

// A weight vector on the n-cycle is consistent iff its entries sum to >= 0,
// which makes the cycle graph the one topology where exact ground truth is
// cheap. These routines back the uniformity experiments.

// |S_{C_n, W}|: number of weight vectors with non-negative sum, computed by
// a convolution DP over partial sums rather than literal enumeration.
inline std::uint64_t enumerate_consistent_cycle(unsigned n, const WeightDomain<std::int64_t>& domain) {
    if (n == 0) {
        throw std::invalid_argument("cycle length must be positive");
    }
    const std::uint64_t base = domain.size();
    if (static_cast<double>(n) * std::log2(static_cast<double>(base)) > 62.0) {
        throw std::overflow_error("state space exceeds 64-bit counts");
    }

    const std::int64_t lo = domain.lo;
    const std::int64_t hi = domain.hi;
    const std::size_t span = static_cast<std::size_t>(n) * static_cast<std::size_t>(hi - lo) + 1;
    std::vector<std::uint64_t> count(span, 0);
    std::vector<std::uint64_t> next(span, 0);
    count[0] = 1; // sum offset by -k*lo after k edges
    for (unsigned k = 0; k < n; ++k) {
        std::fill(next.begin(), next.end(), 0);
        const std::size_t reach = static_cast<std::size_t>(k) * static_cast<std::size_t>(hi - lo);
        for (std::size_t s = 0; s <= reach; ++s) {
            if (count[s] == 0) {
                continue;
            }
            for (std::int64_t w = 0; w <= hi - lo; ++w) {
                next[s + static_cast<std::size_t>(w)] += count[s];
            }
        }
        count.swap(next);
    }

    std::uint64_t consistent = 0;
    const std::int64_t shift = -static_cast<std::int64_t>(n) * lo; // index of sum == 0
    for (std::size_t s = 0; s < span; ++s) {
        if (static_cast<std::int64_t>(s) >= shift) {
            consistent += count[s];
        }
    }
    return consistent;
}

// Rejection sampler: redraw i.i.d. uniform vectors until the sum is
// non-negative. Exactly uniform over the consistent set.
inline WeightAssignment<std::int64_t> exact_cycle_sampler(unsigned n,
                                                          const WeightDomain<std::int64_t>& domain,
                                                          Pcg64& rng,
                                                          std::uint64_t* attempts = nullptr) {
    if (static_cast<double>(n) * domain.hi < 0.0) {
        throw std::invalid_argument("domain admits no consistent cycle weights");
    }
    WeightAssignment<std::int64_t> w(n);
    std::uint64_t tries = 0;
    while (true) {
        ++tries;
        std::int64_t sum = 0;
        for (unsigned i = 0; i < n; ++i) {
            w[i] = domain.sample(rng);
            sum += w[i];
        }
        if (sum >= 0) {
            if (attempts != nullptr) {
                *attempts = tries;
            }
            return w;
        }
    }
}

// Mixed-radix key of a weight vector; injective for in-domain vectors.
inline std::uint64_t encode_cycle_state(const WeightAssignment<std::int64_t>& w,
                                        const WeightDomain<std::int64_t>& domain) {
    const std::uint64_t base = domain.size();
    std::uint64_t key = 0;
    for (const std::int64_t value : w) {
        key = key * base + static_cast<std::uint64_t>(value - domain.lo);
    }
    return key;
}

inline WeightAssignment<std::int64_t> decode_cycle_state(std::uint64_t key, unsigned n,
                                                         const WeightDomain<std::int64_t>& domain) {
    const std::uint64_t base = domain.size();
    WeightAssignment<std::int64_t> w(n);
    for (unsigned i = n; i-- > 0;) {
        w[i] = domain.lo + static_cast<std::int64_t>(key % base);
        key /= base;
    }
    return w;
}

enum class CoverageSampler { Mcmc, Exact };

struct CoverageReport {
    unsigned n = 0;
    std::int64_t domain_lo = 0;
    std::int64_t domain_hi = 0;
    std::uint64_t tau = 0;        // MCMC steps per restart (0 in exact mode)
    std::uint64_t state_count = 0;
    std::uint64_t target_count = 0; // ceil(0.99 * state_count)
    std::uint64_t samples_drawn = 0;
    std::uint64_t distinct_seen = 0;
    bool reached = false;
    std::uint64_t samples_at_target = 0;
};

// Runs-until-coverage protocol: independent samples are drawn (each MCMC
// sample restarts the chain from the all-zero state and advances tau steps)
// until 99% of the consistent states have been observed, or the sample
// budget of abort_multiplier * |S| runs out.
inline CoverageReport coverage_experiment(unsigned n, const WeightDomain<std::int64_t>& domain,
                                          std::uint64_t tau, Pcg64& rng,
                                          double abort_multiplier = 10.0,
                                          CoverageSampler sampler = CoverageSampler::Mcmc) {
    if (!domain.contains(0)) {
        throw std::invalid_argument("coverage restarts need 0 in the weight domain");
    }
    CoverageReport report;
    report.n = n;
    report.domain_lo = domain.lo;
    report.domain_hi = domain.hi;
    report.tau = sampler == CoverageSampler::Mcmc ? tau : 0;
    report.state_count = enumerate_consistent_cycle(n, domain);
    report.target_count = (99 * report.state_count + 99) / 100;
    const auto budget =
        static_cast<std::uint64_t>(abort_multiplier * static_cast<double>(report.state_count));

    const Graph g = gen_cycle(n);
    ChainState<std::int64_t> chain{&g, domain, {}, {}, 0, rng};
    BellmanFordChecker<std::int64_t> checker(g);

    std::unordered_set<std::uint64_t> seen;
    seen.reserve(report.state_count);
    WeightAssignment<std::int64_t> sample;
    while (report.samples_drawn < budget) {
        if (sampler == CoverageSampler::Exact) {
            sample = exact_cycle_sampler(n, domain, rng);
        } else {
            chain.weights.assign(g.edge_count(), 0);
            for (std::uint64_t t = 0; t < tau; ++t) {
                mcmc_step(chain, checker);
            }
            sample = chain.weights;
        }
        ++report.samples_drawn;
        seen.insert(encode_cycle_state(sample, domain));
        if (seen.size() >= report.target_count) {
            report.reached = true;
            report.samples_at_target = report.samples_drawn;
            break;
        }
    }
    report.distinct_seen = seen.size();
    if (sampler == CoverageSampler::Mcmc) {
        rng = chain.rng; // hand the advanced stream back to the caller
    }
    return report;
}

struct HistogramCheckpoint {
    std::uint64_t steps = 0;
    std::vector<std::uint64_t> bin_count;
};

template <WeightType W>
struct HistogramResult {
    W lo;
    W hi;
    unsigned bins = 0;
    std::vector<HistogramCheckpoint> checkpoints;
};

template <WeightType W>
unsigned histogram_bin(const WeightDomain<W>& domain, unsigned bins, W value) {
    if constexpr (std::is_same_v<W, std::int64_t>) {
        return static_cast<unsigned>(value - domain.lo);
    } else {
        if (domain.hi == domain.lo) {
            return 0;
        }
        const double t = (value - domain.lo) / (domain.hi - domain.lo);
        return std::min(bins - 1, static_cast<unsigned>(t * bins));
    }
}

// Edge-weight distribution of one chain on the n-cycle, snapshotted at the
// given step counts. Integer domains get one bin per value.
template <WeightType W>
HistogramResult<W> weight_histogram(unsigned n, const WeightDomain<W>& domain,
                                    std::vector<std::uint64_t> checkpoints, InitStrategy init,
                                    Pcg64& rng, CheckerKind checker_kind = CheckerKind::BiDijkstra) {
    std::sort(checkpoints.begin(), checkpoints.end());
    checkpoints.erase(std::unique(checkpoints.begin(), checkpoints.end()), checkpoints.end());

    HistogramResult<W> result;
    result.lo = domain.lo;
    result.hi = domain.hi;
    if constexpr (std::is_same_v<W, std::int64_t>) {
        result.bins = static_cast<unsigned>(domain.size());
    } else {
        result.bins = 100;
    }

    const Graph g = gen_cycle(n);
    ChainState<W> chain{&g, domain, {}, {}, 0, rng};
    chain.weights = initial_weights(g, domain, init, chain.rng);

    const auto snapshot = [&](std::uint64_t steps) {
        HistogramCheckpoint cp;
        cp.steps = steps;
        cp.bin_count.assign(result.bins, 0);
        for (const W w : chain.weights) {
            ++cp.bin_count[histogram_bin(domain, result.bins, w)];
        }
        result.checkpoints.push_back(std::move(cp));
    };

    const auto run_to = [&](auto& checker) {
        std::uint64_t t = 0;
        for (const std::uint64_t stop : checkpoints) {
            for (; t < stop; ++t) {
                mcmc_step(chain, checker);
            }
            snapshot(stop);
        }
    };

    switch (checker_kind) {
    case CheckerKind::BellmanFord: {
        BellmanFordChecker<W> checker(g);
        run_to(checker);
        break;
    }
    case CheckerKind::Dijkstra: {
        chain.potential.assign(g.node_count(), W{0});
        DijkstraChecker<W> checker(g);
        run_to(checker);
        break;
    }
    case CheckerKind::BiDijkstra: {
        chain.potential.assign(g.node_count(), W{0});
        BiDijkstraChecker<W> checker(g);
        run_to(checker);
        break;
    }
    }
    rng = chain.rng;
    return result;
}

} // namespace nws
