#pragma once

#include <vector>

#include "nws/graph.hpp"

namespace nws {

struct SccPartition {
    std::vector<NodeId> component; // component id per node, ids in [0, count)
    NodeId count = 0;

    bool same_component(NodeId u, NodeId v) const { return component[u] == component[v]; }
};

SccPartition strongly_connected_components(const Graph& g);

struct InducedSubgraph {
    Graph graph;
    std::vector<NodeId> original_node; // original id per remapped node
};

// Induced subgraph of the largest SCC with node ids remapped to [0, size).
// Requires the largest component to contain at least one edge.
InducedSubgraph largest_scc_subgraph(const Graph& g);

} // namespace nws
