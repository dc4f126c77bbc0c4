#pragma once

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include "nws/graph.hpp"
#include "nws/weights.hpp"

namespace nws {

template <WeightType W>
using Potential = std::vector<W>; // one value per node

// Reduced weight of edge (u,v): w(u,v) + phi(v) - phi(u). Cycle totals are
// unchanged by any phi (telescope), so a feasible phi certifies consistency.
template <WeightType W>
W potential_weight(const Graph& g, const WeightAssignment<W>& w, const Potential<W>& phi, EdgeId e) {
    const auto [u, v] = g.edge(e);
    return w[e] + phi[v] - phi[u];
}

template <WeightType W>
bool is_feasible(const Graph& g, const WeightAssignment<W>& w, const Potential<W>& phi) {
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (potential_weight(g, w, phi, e) < W{0}) {
            return false;
        }
    }
    return true;
}

// How far the gradient phi(v) - phi(u) must grow to keep the edge
// non-negative under its proposed weight; positive means the edge breaks.
template <WeightType W>
W break_amount(const Graph& g, const Potential<W>& phi, EdgeId e, W new_weight) {
    const auto [u, v] = g.edge(e);
    return -(new_weight + phi[v] - phi[u]);
}

// Settled nodes of a pruned search with their exact reduced-weight distances;
// every node with distance below the radius is present.
template <WeightType W>
struct DistanceCone {
    NodeId source = 0;
    std::vector<std::pair<NodeId, W>> settled;
};

// In-place repair primitives. `amount` is the gradient increase assigned to
// this side of the update; nodes at distance >= amount keep their potential.
template <WeightType W>
void apply_forward_repair(Potential<W>& phi, W amount, const DistanceCone<W>& cone) {
    for (const auto& [x, d] : cone.settled) {
        phi[x] += std::max(W{0}, amount - d);
    }
}

template <WeightType W>
void apply_backward_repair(Potential<W>& phi, W amount, const DistanceCone<W>& cone) {
    for (const auto& [x, d] : cone.settled) {
        phi[x] -= std::max(W{0}, amount - d);
    }
}

// Whole-potential variants mirroring the update lemmas: given distances from
// v (forward) or to u (backward) under the current reduced weights, produce
// the repaired potential for a weight decrease on e = (u,v). The cone must
// have been pruned at the break amount and must not reach u (forward) / v
// (backward) below it; that would certify a negative cycle.
template <WeightType W>
Potential<W> repair_forward(const Graph& g, const WeightAssignment<W>& w, Potential<W> phi,
                            EdgeId e, W new_weight, const DistanceCone<W>& cone) {
    const W b = break_amount(g, phi, e, new_weight);
    if (b <= W{0}) {
        return phi;
    }
    const NodeId u = g.edge(e).source;
    for (const auto& [x, d] : cone.settled) {
        if (x == u && d < b) {
            throw std::logic_error("repair_forward: update would create a negative cycle");
        }
    }
    apply_forward_repair(phi, b, cone);
    return phi;
}

template <WeightType W>
Potential<W> repair_backward(const Graph& g, const WeightAssignment<W>& w, Potential<W> phi,
                             EdgeId e, W new_weight, const DistanceCone<W>& cone) {
    const W b = break_amount(g, phi, e, new_weight);
    if (b <= W{0}) {
        return phi;
    }
    const NodeId v = g.edge(e).target;
    for (const auto& [x, d] : cone.settled) {
        if (x == v && d < b) {
            throw std::logic_error("repair_backward: update would create a negative cycle");
        }
    }
    apply_backward_repair(phi, b, cone);
    return phi;
}

} // namespace nws
