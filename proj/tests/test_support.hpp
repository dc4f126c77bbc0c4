// Shared brute-force oracles for the test suites. Everything here is kept
// independent of the library's search/repair code paths: plain BFS matrices,
// literal cycle enumeration, odometer iteration over weight vectors.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "nws/graph.hpp"
#include "nws/potential.hpp"
#include "nws/rng.hpp"
#include "nws/weights.hpp"

namespace nws::testing {

// Reachability matrix by BFS from every node.
inline std::vector<std::vector<bool>> reachability_matrix(const Graph& g) {
    const NodeId n = g.node_count();
    std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
    for (NodeId s = 0; s < n; ++s) {
        std::vector<NodeId> queue{s};
        reach[s][s] = true;
        while (!queue.empty()) {
            const NodeId x = queue.back();
            queue.pop_back();
            for (EdgeId id = g.out_begin(x); id != g.out_end(x); ++id) {
                const NodeId y = g.edge(id).target;
                if (!reach[s][y]) {
                    reach[s][y] = true;
                    queue.push_back(y);
                }
            }
        }
    }
    return reach;
}

inline bool mutually_reachable(const std::vector<std::vector<bool>>& reach, NodeId u, NodeId v) {
    return reach[u][v] && reach[v][u];
}

inline bool is_strongly_connected(const Graph& g) {
    const auto reach = reachability_matrix(g);
    for (NodeId u = 0; u < g.node_count(); ++u) {
        if (!reach[0][u] || !reach[u][0]) {
            return false;
        }
    }
    return true;
}

// All simple directed cycles as edge-id sequences; only usable on tiny
// graphs. Each cycle is rooted at its minimal node, so every cycle appears
// exactly once.
inline std::vector<std::vector<EdgeId>> enumerate_simple_cycles(const Graph& g) {
    std::vector<std::vector<EdgeId>> cycles;
    const NodeId n = g.node_count();
    std::vector<bool> on_path(n, false);
    std::vector<EdgeId> path;

    struct Dfs {
        const Graph& g;
        std::vector<std::vector<EdgeId>>& cycles;
        std::vector<bool>& on_path;
        std::vector<EdgeId>& path;
        NodeId root;

        void run(NodeId x) {
            for (EdgeId id = g.out_begin(x); id != g.out_end(x); ++id) {
                const NodeId y = g.edge(id).target;
                if (y == root) {
                    path.push_back(id);
                    cycles.push_back(path);
                    path.pop_back();
                } else if (y > root && !on_path[y]) {
                    on_path[y] = true;
                    path.push_back(id);
                    run(y);
                    path.pop_back();
                    on_path[y] = false;
                }
            }
        }
    };

    for (NodeId root = 0; root < n; ++root) {
        Dfs dfs{g, cycles, on_path, path, root};
        on_path[root] = true;
        dfs.run(root);
        on_path[root] = false;
    }
    return cycles;
}

// Ground truth by definition: no simple cycle with negative total weight.
template <WeightType W>
bool consistent_by_cycle_enumeration(const Graph& g, const WeightAssignment<W>& w,
                                     const std::vector<std::vector<EdgeId>>& cycles) {
    for (const auto& cycle : cycles) {
        W total{0};
        for (const EdgeId id : cycle) {
            total += w[id];
        }
        if (total < W{0}) {
            return false;
        }
    }
    return true;
}

// Odometer over all in-domain integer weight vectors; returns false after
// the last one.
inline bool next_assignment(WeightAssignment<std::int64_t>& w, std::int64_t lo, std::int64_t hi) {
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] < hi) {
            ++w[i];
            return true;
        }
        w[i] = lo;
    }
    return false;
}

// Feasible potential from scratch: Bellman-Ford from a virtual super-source,
// phi(x) = -dist(x). Requires a consistent instance.
template <WeightType W>
Potential<W> feasible_potential_by_bellman_ford(const Graph& g, const WeightAssignment<W>& w) {
    const NodeId n = g.node_count();
    std::vector<W> dist(n, W{0});
    for (NodeId round = 0; round <= n; ++round) {
        bool changed = false;
        for (EdgeId e = 0; e < g.edge_count(); ++e) {
            const auto [u, v] = g.edge(e);
            if (dist[u] + w[e] < dist[v]) {
                dist[v] = dist[u] + w[e];
                changed = true;
            }
        }
        if (!changed) {
            break;
        }
    }
    Potential<W> phi(n);
    for (NodeId x = 0; x < n; ++x) {
        phi[x] = -dist[x];
    }
    return phi;
}

// Exact distances from `source` on the reduced weights, by textbook
// Dijkstra with an O(n^2) scan; the reference for the pruned searches.
template <WeightType W>
std::vector<W> reference_reduced_distances(const Graph& g, const WeightAssignment<W>& w,
                                           const Potential<W>& phi, NodeId source, bool forward) {
    const NodeId n = g.node_count();
    const W inf = std::numeric_limits<W>::max();
    std::vector<W> dist(n, inf);
    std::vector<bool> done(n, false);
    dist[source] = W{0};
    for (NodeId round = 0; round < n; ++round) {
        NodeId best = n;
        for (NodeId x = 0; x < n; ++x) {
            if (!done[x] && dist[x] != inf && (best == n || dist[x] < dist[best])) {
                best = x;
            }
        }
        if (best == n) {
            break;
        }
        done[best] = true;
        if (forward) {
            for (EdgeId id = g.out_begin(best); id != g.out_end(best); ++id) {
                const NodeId y = g.edge(id).target;
                const W nd = dist[best] + (w[id] + phi[y] - phi[best]);
                if (nd < dist[y]) {
                    dist[y] = nd;
                }
            }
        } else {
            for (const EdgeId id : g.in_edge_ids(best)) {
                const NodeId y = g.edge(id).source;
                const W nd = dist[best] + (w[id] + phi[best] - phi[y]);
                if (nd < dist[y]) {
                    dist[y] = nd;
                }
            }
        }
    }
    return dist;
}

// Settled cone below a radius, built from the reference distances.
template <WeightType W>
DistanceCone<W> reference_cone(const Graph& g, const WeightAssignment<W>& w, const Potential<W>& phi,
                               NodeId source, bool forward, W radius) {
    DistanceCone<W> cone;
    cone.source = source;
    const auto dist = reference_reduced_distances(g, w, phi, source, forward);
    for (NodeId x = 0; x < g.node_count(); ++x) {
        if (dist[x] != std::numeric_limits<W>::max() && dist[x] < radius) {
            cone.settled.emplace_back(x, dist[x]);
        }
    }
    return cone;
}

// Random digraph on n nodes with m distinct non-loop edges.
inline Graph random_digraph(NodeId n, EdgeId m, Pcg64& rng) {
    std::vector<Edge> edges;
    while (edges.size() < m) {
        const auto u = static_cast<NodeId>(rng.next_below(n));
        const auto v = static_cast<NodeId>(rng.next_below(n));
        if (u == v) {
            continue;
        }
        const Edge e{u, v};
        if (std::find(edges.begin(), edges.end(), e) == edges.end()) {
            edges.push_back(e);
        }
    }
    return Graph::from_edges(std::move(edges), n);
}

// Random strongly connected digraph by rejection.
inline Graph random_scc_digraph(NodeId n, EdgeId m, Pcg64& rng) {
    while (true) {
        const Graph g = random_digraph(n, m, rng);
        if (is_strongly_connected(g)) {
            return g;
        }
    }
}

// Upper chi-square quantile via the Wilson-Hilferty cube approximation.
inline double chi_square_quantile(double degrees_of_freedom, double z_upper) {
    const double t = 2.0 / (9.0 * degrees_of_freedom);
    const double c = 1.0 - t + z_upper * std::sqrt(t);
    return degrees_of_freedom * c * c * c;
}

// A worked 5-cycle repair instance (0 -> 1 -> 2 -> 3 -> 4 -> 0): decreasing
// the weight of edge (1,2) to -2 breaks it by 2 under the given potential.
// The expected repaired potentials were derived by hand from the update
// rules: the forward-only repair raises the whole cycle, the split repair
// lowers node 1 by one and raises node 2 by one.
struct WorkedFiveCycle {
    Graph graph = Graph::from_edges({{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
    WeightAssignment<std::int64_t> weights{1, 0, 1, 1, -1};
    Potential<std::int64_t> phi{1, 1, 1, 0, 0};
    EdgeId update_edge = 1; // (1, 2)
    std::int64_t new_weight = -2;
    std::int64_t expected_break = 2;
    Potential<std::int64_t> forward_repaired{2, 1, 3, 2, 1};
    Potential<std::int64_t> split_repaired{1, 0, 2, 1, 0};
};

} // namespace nws::testing
