#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace nws {

using NodeId = std::uint32_t;
using EdgeId = std::uint32_t;

struct Edge {
    NodeId source = 0;
    NodeId target = 0;

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Immutable directed graph in CSR form. The flat edge array stores the full
// (source, target) pair per edge so a uniform random edge is one array read;
// a reverse index over edge ids serves backward searches. Self-loops and
// duplicate edges are dropped at construction, edges within a source bucket
// are ordered by target.
class Graph {
public:
    // node_count == 0 derives n as max node id + 1.
    static Graph from_edges(std::vector<Edge> edges, NodeId node_count = 0);

    NodeId node_count() const { return n_; }
    EdgeId edge_count() const { return static_cast<EdgeId>(edges_.size()); }

    const Edge& edge(EdgeId e) const { return edges_[e]; }
    std::span<const Edge> edges() const { return edges_; }

    // Out-edges of u are the contiguous edge ids [out_begin(u), out_end(u)).
    EdgeId out_begin(NodeId u) const { return offsets_[u]; }
    EdgeId out_end(NodeId u) const { return offsets_[u + 1]; }
    std::span<const EdgeId> offsets() const { return offsets_; }

    // Ids of edges whose target is v.
    std::span<const EdgeId> in_edge_ids(NodeId v) const {
        return {rev_ids_.data() + rev_offsets_[v], rev_ids_.data() + rev_offsets_[v + 1]};
    }

private:
    NodeId n_ = 0;
    std::vector<Edge> edges_;
    std::vector<EdgeId> offsets_;     // length n+1
    std::vector<EdgeId> rev_offsets_; // length n+1
    std::vector<EdgeId> rev_ids_;     // length m, edge ids grouped by target
};

Graph gen_cycle(NodeId n);
Graph gen_doubly_linked_path(NodeId k);

} // namespace nws
