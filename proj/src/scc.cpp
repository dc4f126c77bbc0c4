#include "nws/scc.hpp"

#include <algorithm>
#include <stdexcept>

namespace nws {

namespace {

constexpr NodeId kUnvisited = ~NodeId{0};

} // namespace

// Iterative Tarjan; recursion depth on road-sized graphs would overflow the
// call stack, so the DFS state lives in an explicit frame stack.
SccPartition strongly_connected_components(const Graph& g) {
    const NodeId n = g.node_count();
    SccPartition out;
    out.component.assign(n, kUnvisited);

    std::vector<NodeId> index(n, kUnvisited);
    std::vector<NodeId> lowlink(n, 0);
    std::vector<bool> on_stack(n, false);
    std::vector<NodeId> stack;
    stack.reserve(n);

    struct Frame {
        NodeId node;
        EdgeId next_edge;
    };
    std::vector<Frame> frames;

    NodeId next_index = 0;
    for (NodeId root = 0; root < n; ++root) {
        if (index[root] != kUnvisited) {
            continue;
        }
        frames.push_back({root, g.out_begin(root)});
        index[root] = lowlink[root] = next_index++;
        stack.push_back(root);
        on_stack[root] = true;

        while (!frames.empty()) {
            Frame& f = frames.back();
            const NodeId v = f.node;
            if (f.next_edge != g.out_end(v)) {
                const NodeId w = g.edge(f.next_edge++).target;
                if (index[w] == kUnvisited) {
                    index[w] = lowlink[w] = next_index++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    frames.push_back({w, g.out_begin(w)});
                } else if (on_stack[w]) {
                    lowlink[v] = std::min(lowlink[v], index[w]);
                }
                continue;
            }
            if (lowlink[v] == index[v]) {
                NodeId w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = false;
                    out.component[w] = out.count;
                } while (w != v);
                ++out.count;
            }
            frames.pop_back();
            if (!frames.empty()) {
                const NodeId parent = frames.back().node;
                lowlink[parent] = std::min(lowlink[parent], lowlink[v]);
            }
        }
    }
    return out;
}

InducedSubgraph largest_scc_subgraph(const Graph& g) {
    const SccPartition parts = strongly_connected_components(g);
    std::vector<NodeId> size(parts.count, 0);
    for (NodeId v = 0; v < g.node_count(); ++v) {
        ++size[parts.component[v]];
    }
    const NodeId largest =
        static_cast<NodeId>(std::max_element(size.begin(), size.end()) - size.begin());

    InducedSubgraph out;
    std::vector<NodeId> remap(g.node_count(), kUnvisited);
    for (NodeId v = 0; v < g.node_count(); ++v) {
        if (parts.component[v] == largest) {
            remap[v] = static_cast<NodeId>(out.original_node.size());
            out.original_node.push_back(v);
        }
    }

    std::vector<Edge> edges;
    for (const Edge& e : g.edges()) {
        if (remap[e.source] != kUnvisited && remap[e.target] != kUnvisited) {
            edges.push_back({remap[e.source], remap[e.target]});
        }
    }
    if (edges.empty()) {
        throw std::runtime_error("largest SCC has no edges");
    }
    out.graph = Graph::from_edges(std::move(edges), static_cast<NodeId>(out.original_node.size()));
    return out;
}

} // namespace nws
