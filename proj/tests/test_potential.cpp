#include <doctest.h>

#include "nws/potential.hpp"
#include "nws/weights.hpp"
#include "test_support.hpp"

using namespace nws;

TEST_CASE("zero potential leaves weights unchanged") {
    Pcg64 rng(3);
    const Graph g = testing::random_digraph(6, 12, rng);
    WeightAssignment<std::int64_t> w(g.edge_count());
    for (auto& x : w) {
        x = -3 + static_cast<std::int64_t>(rng.next_below(7));
    }
    const Potential<std::int64_t> phi(g.node_count(), 0);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        CHECK(potential_weight(g, w, phi, e) == w[e]);
    }
}

TEST_CASE("a decreased edge breaks by the reduced-weight deficit") {
    const Graph g = Graph::from_edges({{0, 1}, {1, 0}});
    const WeightAssignment<std::int64_t> w{-2, 5};
    const Potential<std::int64_t> phi{1, 1}; // phi(u) = phi(v) = 1
    CHECK(potential_weight(g, w, phi, 0) == -2);
    CHECK(break_amount(g, phi, EdgeId{0}, std::int64_t{-2}) == 2);
}

TEST_CASE("cycle totals are invariant under any potential") {
    Pcg64 rng(7);
    for (int round = 0; round < 30; ++round) {
        const auto n = static_cast<NodeId>(3 + rng.next_below(8));
        const Graph g = gen_cycle(n);
        WeightAssignment<std::int64_t> w(n);
        Potential<std::int64_t> phi(n);
        for (auto& x : w) {
            x = -10 + static_cast<std::int64_t>(rng.next_below(21));
        }
        for (auto& p : phi) {
            p = -20 + static_cast<std::int64_t>(rng.next_below(41));
        }
        std::int64_t raw = 0;
        std::int64_t reduced = 0;
        for (EdgeId e = 0; e < g.edge_count(); ++e) {
            raw += w[e];
            reduced += potential_weight(g, w, phi, e);
        }
        CHECK(raw == reduced);
    }
}

TEST_CASE("feasibility checks") {
    const Graph g = gen_cycle(3);
    CHECK(is_feasible<std::int64_t>(g, {1, 0, 2}, {0, 0, 0}));
    // reduced weights (1, 0, -1)
    CHECK(!is_feasible<std::int64_t>(g, {1, -1, 0}, {0, 0, 1}));
}

TEST_CASE("feasibility implies consistency") {
    Pcg64 rng(13);
    int found = 0;
    while (found < 40) {
        const Graph g = testing::random_digraph(7, 14, rng);
        WeightAssignment<std::int64_t> w(g.edge_count());
        for (auto& x : w) {
            x = -2 + static_cast<std::int64_t>(rng.next_below(6));
        }
        if (!is_consistent_oracle(g, w)) {
            continue;
        }
        const auto phi = testing::feasible_potential_by_bellman_ford(g, w);
        REQUIRE(is_feasible(g, w, phi));
        CHECK(is_consistent_oracle(g, w));
        ++found;
    }
}

TEST_CASE("repairs are identity when nothing breaks") {
    const testing::WorkedFiveCycle fix;
    const DistanceCone<std::int64_t> empty_cone;
    // raising the weight cannot break the edge
    const auto phi2 = repair_forward(fix.graph, fix.weights, fix.phi, fix.update_edge,
                                     std::int64_t{3}, empty_cone);
    CHECK(phi2 == fix.phi);
    const auto phi3 = repair_backward(fix.graph, fix.weights, fix.phi, fix.update_edge,
                                      std::int64_t{3}, empty_cone);
    CHECK(phi3 == fix.phi);
}

TEST_CASE("forward repair reproduces the worked five-cycle potentials") {
    const testing::WorkedFiveCycle fix;
    const std::int64_t b =
        break_amount(fix.graph, fix.phi, fix.update_edge, fix.new_weight);
    REQUIRE(b == fix.expected_break);

    const NodeId v = fix.graph.edge(fix.update_edge).target;
    const auto cone = testing::reference_cone(fix.graph, fix.weights, fix.phi, v, true, b);
    const auto phi2 =
        repair_forward(fix.graph, fix.weights, fix.phi, fix.update_edge, fix.new_weight, cone);
    CHECK(phi2 == fix.forward_repaired);

    WeightAssignment<std::int64_t> updated = fix.weights;
    updated[fix.update_edge] = fix.new_weight;
    CHECK(is_feasible(fix.graph, updated, phi2));
}

TEST_CASE("split repair reproduces the worked five-cycle potentials") {
    const testing::WorkedFiveCycle fix;
    const auto [u, v] = fix.graph.edge(fix.update_edge);
    const std::int64_t delta_v = 1;
    const std::int64_t delta_u = 1;

    Potential<std::int64_t> phi = fix.phi;
    apply_forward_repair(phi, delta_v,
                         testing::reference_cone(fix.graph, fix.weights, fix.phi, v, true, delta_v));
    apply_backward_repair(phi, delta_u,
                          testing::reference_cone(fix.graph, fix.weights, fix.phi, u, false, delta_u));
    CHECK(phi == fix.split_repaired);

    WeightAssignment<std::int64_t> updated = fix.weights;
    updated[fix.update_edge] = fix.new_weight;
    CHECK(is_feasible(fix.graph, updated, phi));
    CHECK(potential_weight(fix.graph, updated, phi, fix.update_edge) >= 0);
}

TEST_CASE("repair keeps feasibility on random consistent instances") {
    Pcg64 rng(29);
    int done = 0;
    while (done < 60) {
        const auto n = static_cast<NodeId>(6 + rng.next_below(15));
        const Graph g = testing::random_digraph(n, 2 * n, rng);
        WeightAssignment<std::int64_t> w(g.edge_count());
        for (auto& x : w) {
            x = -4 + static_cast<std::int64_t>(rng.next_below(12));
        }
        if (!is_consistent_oracle(g, w)) {
            continue;
        }
        const auto phi = testing::feasible_potential_by_bellman_ford(g, w);
        REQUIRE(is_feasible(g, w, phi));

        const auto e = static_cast<EdgeId>(rng.next_below(g.edge_count()));
        const std::int64_t c = w[e] - 1 - static_cast<std::int64_t>(rng.next_below(4));
        WeightAssignment<std::int64_t> updated = w;
        updated[e] = c;
        if (!is_consistent_oracle(g, updated)) {
            continue;
        }
        const auto [u, v] = g.edge(e);
        const std::int64_t b = break_amount(g, phi, e, c);

        // forward-only repair
        {
            const auto cone = testing::reference_cone(g, w, phi, v, true, b);
            const auto phi2 = repair_forward(g, w, phi, e, c, cone);
            CHECK(is_feasible(g, updated, phi2));
            for (NodeId x = 0; x < g.node_count(); ++x) {
                CHECK(phi2[x] >= phi[x]);
            }
        }
        // backward-only repair
        {
            const auto cone = testing::reference_cone(g, w, phi, u, false, b);
            const auto phi2 = repair_backward(g, w, phi, e, c, cone);
            CHECK(is_feasible(g, updated, phi2));
            for (NodeId x = 0; x < g.node_count(); ++x) {
                CHECK(phi2[x] <= phi[x]);
            }
        }
        // split repair, every admissible split
        if (b > 0) {
            for (std::int64_t delta_v = 0; delta_v <= b; ++delta_v) {
                const std::int64_t delta_u = b - delta_v;
                Potential<std::int64_t> phi2 = phi;
                apply_forward_repair(phi2, delta_v, testing::reference_cone(g, w, phi, v, true, delta_v));
                apply_backward_repair(phi2, delta_u,
                                      testing::reference_cone(g, w, phi, u, false, delta_u));
                CHECK(potential_weight(g, updated, phi2, e) >= 0);
            }
        }
        ++done;
    }
}

TEST_CASE("repair rejects cones that certify a negative cycle") {
    const Graph g = gen_cycle(3);
    const WeightAssignment<std::int64_t> w{0, 0, 0};
    const Potential<std::int64_t> phi{0, 0, 0};
    // proposing -1 on edge (0,1) creates a -1 cycle; the cone from node 1
    // reaches node 0 at distance 0 < 1
    const auto cone = testing::reference_cone(g, w, phi, NodeId{1}, true, std::int64_t{1});
    CHECK_THROWS_AS(repair_forward(g, w, phi, EdgeId{0}, std::int64_t{-1}, cone), std::logic_error);
}
