#pragma once

#include <limits>
#include <vector>

#include "nws/checkers.hpp"
#include "nws/graph.hpp"
#include "nws/potential.hpp"
#include "nws/weights.hpp"

namespace nws {

template <WeightType W>
constexpr W unreachable_distance() {
    if constexpr (std::is_same_v<W, double>) {
        return std::numeric_limits<double>::infinity();
    } else {
        return std::numeric_limits<std::int64_t>::max();
    }
}

enum class SsspStatus { Distances, NegativeCycleFound };

template <WeightType W>
struct SsspResult {
    SsspStatus status = SsspStatus::Distances;
    std::vector<W> distance; // unreachable_distance() for unreachable nodes
    std::uint64_t insertions = 0;
};

// SSSP for general weights: zero out the negative edges, then per target
// node restore all of its incoming negative weights in one pruned Dijkstra
// round that either certifies a negative cycle or repairs the potential;
// finish with a plain Dijkstra on the reduced weights and translate the
// distances back. Work scales with the number of nodes that have incoming
// negative edges.
template <WeightType W>
SsspResult<W> sssp_general(const Graph& g, const WeightAssignment<W>& w, NodeId source) {
    const NodeId n = g.node_count();
    SsspResult<W> result;

    WeightAssignment<W> work = w;
    std::vector<std::vector<EdgeId>> negative_in(n);
    bool any_negative = false;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (w[e] < W{0}) {
            work[e] = W{0};
            negative_in[g.edge(e).target].push_back(e);
            any_negative = true;
        }
    }

    Potential<W> phi(n, W{0});
    detail::SearchSide<W> side(n);
    std::vector<W> reject_below(n, W{0});
    std::vector<std::uint64_t> reject_stamp(n, 0);
    std::uint64_t round = 0;

    if (any_negative) {
        for (NodeId v = 0; v < n; ++v) {
            if (negative_in[v].empty()) {
                continue;
            }
            ++round;
            W radius = W{0};
            for (const EdgeId e : negative_in[v]) {
                const NodeId u = g.edge(e).source;
                const W broken_by = -(w[e] + phi[v] - phi[u]);
                if (broken_by > W{0}) {
                    reject_below[u] = broken_by;
                    reject_stamp[u] = round;
                    radius = std::max(radius, broken_by);
                }
            }
            if (radius > W{0}) {
                side.reset();
                side.label(v, W{0});
                side.push(W{0}, v);
                ++result.insertions;
                while (side.refresh_top()) {
                    const auto [d, x] = side.pop();
                    side.settle(x, d);
                    if (reject_stamp[x] == round && d < reject_below[x]) {
                        result.status = SsspStatus::NegativeCycleFound;
                        return result;
                    }
                    for (EdgeId id = g.out_begin(x); id != g.out_end(x); ++id) {
                        const NodeId z = g.edge(id).target;
                        if (side.is_settled(z)) {
                            continue;
                        }
                        const W nd = d + (work[id] + phi[z] - phi[x]);
                        if (nd < radius && (!side.labeled(z) || nd < side.dist[z])) {
                            side.label(z, nd);
                            side.push(nd, z);
                            ++result.insertions;
                        }
                    }
                }
                for (const auto& [x, d] : side.settled) {
                    phi[x] += std::max(W{0}, radius - d);
                }
            }
            for (const EdgeId e : negative_in[v]) {
                work[e] = w[e];
            }
        }
    }

    // Final run from the requested source on the now fully restored weights.
    result.distance.assign(n, unreachable_distance<W>());
    side.reset();
    side.label(source, W{0});
    side.push(W{0}, source);
    ++result.insertions;
    while (side.refresh_top()) {
        const auto [d, x] = side.pop();
        side.settle(x, d);
        result.distance[x] = d + phi[source] - phi[x];
        for (EdgeId id = g.out_begin(x); id != g.out_end(x); ++id) {
            const NodeId z = g.edge(id).target;
            if (side.is_settled(z)) {
                continue;
            }
            const W nd = d + (work[id] + phi[z] - phi[x]);
            if (!side.labeled(z) || nd < side.dist[z]) {
                side.label(z, nd);
                side.push(nd, z);
                ++result.insertions;
            }
        }
    }
    return result;
}

// SPFA distances for a consistent instance; the independent reference the
// general algorithm is checked against. Runs forever on a negative cycle
// reachable from the source, so callers must establish consistency first.
template <WeightType W>
std::vector<W> spfa_distances(const Graph& g, const WeightAssignment<W>& w, NodeId source) {
    const NodeId n = g.node_count();
    std::vector<W> dist(n, unreachable_distance<W>());
    std::vector<bool> queued(n, false);
    std::vector<NodeId> queue;
    std::size_t head = 0;
    dist[source] = W{0};
    queue.push_back(source);
    queued[source] = true;
    while (head < queue.size()) {
        const NodeId x = queue[head++];
        queued[x] = false;
        for (EdgeId id = g.out_begin(x); id != g.out_end(x); ++id) {
            const NodeId y = g.edge(id).target;
            const W nd = dist[x] + w[id];
            if (dist[y] == unreachable_distance<W>() || nd < dist[y]) {
                dist[y] = nd;
                if (!queued[y]) {
                    queue.push_back(y);
                    queued[y] = true;
                }
            }
        }
    }
    return dist;
}

} // namespace nws
