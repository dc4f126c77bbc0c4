#pragma once

#include "nws/graph.hpp"
#include "nws/rng.hpp"

namespace nws {

// Gilbert G(n, p) digraph with p = avg_deg / n, sampled with geometric jumps
// over the n*(n-1) ordered pairs so the runtime is proportional to the
// number of emitted edges. Requires 0 < avg_deg < n.
Graph gen_gnp(NodeId n, double avg_deg, Pcg64& rng);

// Directed scale-free preferential attachment (Bollobas et al. model) with
// alpha = gamma = (1 - beta) / 2; grows until n nodes exist, then drops
// multi-edges and self-loops. Requires 0 < beta < 1.
Graph gen_dsf(NodeId n, double beta, double delta_in, double delta_out, Pcg64& rng);

} // namespace nws
