#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nws/graph.hpp"

namespace nws {

struct LoadedGraph {
    Graph graph;
    std::vector<std::uint64_t> original_id; // external id per compacted node
};

// Text edge list: one "u v" pair per line, '#' lines are comments. External
// ids are compacted to [0, n) in ascending numeric order; the mapping is
// returned alongside the graph. Malformed input reports the line number.
LoadedGraph load_edge_list(const std::string& path);

void save_edge_list(const Graph& g, const std::string& path);

} // namespace nws
