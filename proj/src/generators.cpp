#include "nws/generators.hpp"

#include <cmath>
#include <stdexcept>

namespace nws {

Graph gen_gnp(NodeId n, double avg_deg, Pcg64& rng) {
    if (n < 2 || avg_deg <= 0.0 || avg_deg >= static_cast<double>(n)) {
        throw std::invalid_argument("gen_gnp requires n >= 2 and 0 < avg_deg < n");
    }
    const double p = avg_deg / static_cast<double>(n);
    const double log_q = std::log1p(-p);
    const std::uint64_t pair_count = static_cast<std::uint64_t>(n) * (n - 1);

    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(avg_deg * n * 1.1) + 16);

    std::uint64_t k = 0;
    while (true) {
        double u = rng.next_unit();
        if (u <= 0.0) {
            u = 0x1.0p-53;
        }
        const double skip = std::floor(std::log(u) / log_q);
        if (skip >= static_cast<double>(pair_count - k)) {
            break;
        }
        k += static_cast<std::uint64_t>(skip);
        const auto src = static_cast<NodeId>(k / (n - 1));
        const auto rem = static_cast<NodeId>(k % (n - 1));
        const NodeId dst = rem < src ? rem : rem + 1;
        edges.push_back({src, dst});
        if (++k >= pair_count) {
            break;
        }
    }
    if (edges.empty()) {
        throw std::runtime_error("gen_gnp produced no edges; increase avg_deg");
    }
    return Graph::from_edges(std::move(edges), n);
}

Graph gen_dsf(NodeId n, double beta, double delta_in, double delta_out, Pcg64& rng) {
    if (n < 2 || beta <= 0.0 || beta >= 1.0 || delta_in < 0.0 || delta_out < 0.0) {
        throw std::invalid_argument("gen_dsf requires n >= 2 and 0 < beta < 1");
    }
    const double alpha = (1.0 - beta) / 2.0;

    // Multi-edges and self-loops are kept during growth (the model produces
    // them) and stripped by Graph::from_edges afterwards.
    std::vector<Edge> edges;
    edges.push_back({0, 1});
    edges.push_back({1, 0});
    NodeId nodes = 2;

    // Pr[pick w] ~ indeg(w) + delta_in: with mass m of edge targets plus
    // mass n*delta_in spread uniformly; mirrored for out-degrees.
    const auto sample_by_in = [&]() -> NodeId {
        const double mass = static_cast<double>(edges.size()) + delta_in * nodes;
        const double x = rng.next_unit() * mass;
        if (x < static_cast<double>(edges.size())) {
            return edges[static_cast<std::size_t>(x)].target;
        }
        const double y = (x - static_cast<double>(edges.size())) / delta_in;
        return std::min(nodes - 1, static_cast<NodeId>(y));
    };
    const auto sample_by_out = [&]() -> NodeId {
        const double mass = static_cast<double>(edges.size()) + delta_out * nodes;
        const double x = rng.next_unit() * mass;
        if (x < static_cast<double>(edges.size())) {
            return edges[static_cast<std::size_t>(x)].source;
        }
        const double y = (x - static_cast<double>(edges.size())) / delta_out;
        return std::min(nodes - 1, static_cast<NodeId>(y));
    };

    while (nodes < n) {
        const double r = rng.next_unit();
        if (r < alpha) {
            const NodeId w = sample_by_in();
            edges.push_back({nodes, w});
            ++nodes;
        } else if (r < alpha + beta) {
            const NodeId u = sample_by_out();
            const NodeId w = sample_by_in();
            edges.push_back({u, w});
        } else {
            const NodeId u = sample_by_out();
            edges.push_back({u, nodes});
            ++nodes;
        }
    }
    return Graph::from_edges(std::move(edges), n);
}

} // namespace nws
