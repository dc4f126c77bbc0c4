#include "nws/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace nws {

Graph Graph::from_edges(std::vector<Edge> edges, NodeId node_count) {
    if (edges.empty()) {
        throw std::invalid_argument("empty graph");
    }

    std::erase_if(edges, [](const Edge& e) { return e.source == e.target; });
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    if (edges.empty()) {
        throw std::invalid_argument("empty graph");
    }

    NodeId max_id = 0;
    for (const Edge& e : edges) {
        max_id = std::max({max_id, e.source, e.target});
    }
    if (node_count == 0) {
        node_count = max_id + 1;
    } else if (max_id >= node_count) {
        throw std::invalid_argument("edge endpoint exceeds node count");
    }

    Graph g;
    g.n_ = node_count;
    g.edges_ = std::move(edges);

    const auto m = static_cast<EdgeId>(g.edges_.size());
    g.offsets_.assign(node_count + 1, 0);
    for (const Edge& e : g.edges_) {
        ++g.offsets_[e.source + 1];
    }
    for (NodeId i = 0; i < node_count; ++i) {
        g.offsets_[i + 1] += g.offsets_[i];
    }

    g.rev_offsets_.assign(node_count + 1, 0);
    for (const Edge& e : g.edges_) {
        ++g.rev_offsets_[e.target + 1];
    }
    for (NodeId i = 0; i < node_count; ++i) {
        g.rev_offsets_[i + 1] += g.rev_offsets_[i];
    }
    g.rev_ids_.resize(m);
    std::vector<EdgeId> cursor(g.rev_offsets_.begin(), g.rev_offsets_.end() - 1);
    for (EdgeId id = 0; id < m; ++id) {
        g.rev_ids_[cursor[g.edges_[id].target]++] = id;
    }
    return g;
}

Graph gen_cycle(NodeId n) {
    if (n < 2) {
        throw std::invalid_argument("cycle needs at least 2 nodes");
    }
    std::vector<Edge> edges;
    edges.reserve(n);
    for (NodeId i = 0; i < n; ++i) {
        edges.push_back({i, (i + 1) % n});
    }
    return Graph::from_edges(std::move(edges), n);
}

Graph gen_doubly_linked_path(NodeId k) {
    if (k < 1) {
        throw std::invalid_argument("path needs at least 1 segment");
    }
    std::vector<Edge> edges;
    edges.reserve(2 * k);
    for (NodeId i = 0; i < k; ++i) {
        edges.push_back({i, i + 1});
        edges.push_back({i + 1, i});
    }
    return Graph::from_edges(std::move(edges), k + 1);
}

} // namespace nws
