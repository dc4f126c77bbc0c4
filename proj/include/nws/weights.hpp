#pragma once

#include <cstdint>
#include <stdexcept>
#include <type_traits>
#include <vector>

#include "nws/graph.hpp"
#include "nws/rng.hpp"

namespace nws {

// Weight element type: exact 64-bit integers for everything that needs exact
// arithmetic (enumeration, oracles, acceptance tests), doubles for the large
// floating-point experiments. Comparisons stay exact in both modes.
template <typename W>
concept WeightType = std::is_same_v<W, std::int64_t> || std::is_same_v<W, double>;

// Closed interval [lo, hi]; discrete set {lo, ..., hi} in integer mode.
template <WeightType W>
struct WeightDomain {
    W lo;
    W hi;

    WeightDomain(W lo_, W hi_) : lo(lo_), hi(hi_) {
        if (lo > hi) {
            throw std::invalid_argument("weight domain requires lo <= hi");
        }
    }

    bool contains(W w) const { return lo <= w && w <= hi; }

    std::uint64_t size() const
        requires std::is_same_v<W, std::int64_t>
    {
        return static_cast<std::uint64_t>(hi - lo) + 1;
    }

    W sample(Pcg64& rng) const {
        if constexpr (std::is_same_v<W, std::int64_t>) {
            return lo + static_cast<std::int64_t>(rng.next_below(size()));
        } else {
            return lo + rng.next_unit() * (hi - lo);
        }
    }
};

template <WeightType W>
using WeightAssignment = std::vector<W>; // one weight per EdgeId

template <WeightType W>
W sample_weight(const WeightDomain<W>& domain, Pcg64& rng) {
    return domain.sample(rng);
}

enum class InitStrategy { Maximum, Zero, UniformNonNegative };

// All three strategies yield non-negative weights, hence a consistent start.
template <WeightType W>
WeightAssignment<W> initial_weights(const Graph& g, const WeightDomain<W>& domain,
                                    InitStrategy strategy, Pcg64& rng) {
    const EdgeId m = g.edge_count();
    WeightAssignment<W> w(m);
    switch (strategy) {
    case InitStrategy::Maximum:
        for (EdgeId e = 0; e < m; ++e) {
            w[e] = domain.hi;
        }
        break;
    case InitStrategy::Zero:
        if (!domain.contains(W{0})) {
            throw std::invalid_argument("zero start requires 0 in the weight domain");
        }
        for (EdgeId e = 0; e < m; ++e) {
            w[e] = W{0};
        }
        break;
    case InitStrategy::UniformNonNegative: {
        if (domain.hi < W{0}) {
            throw std::invalid_argument("non-negative start requires max(domain) >= 0");
        }
        const WeightDomain<W> nonneg(std::max(W{0}, domain.lo), domain.hi);
        for (EdgeId e = 0; e < m; ++e) {
            w[e] = nonneg.sample(rng);
        }
        break;
    }
    }
    return w;
}

// Ground-truth consistency: Bellman-Ford from a virtual super-source with
// 0-weight edges to every node (equivalently, all distances start at 0).
// A relaxation succeeding in round n certifies a negative cycle. This is the
// oracle every fast checker is tested against; it never looks at potentials.
template <WeightType W>
bool is_consistent_oracle(const Graph& g, const WeightAssignment<W>& w) {
    const NodeId n = g.node_count();
    std::vector<W> dist(n, W{0});
    for (NodeId round = 0; round < n; ++round) {
        bool changed = false;
        for (EdgeId e = 0; e < g.edge_count(); ++e) {
            const auto [u, v] = g.edge(e);
            if (dist[u] + w[e] < dist[v]) {
                dist[v] = dist[u] + w[e];
                changed = true;
            }
        }
        if (!changed) {
            return true;
        }
    }
    return false;
}

} // namespace nws
