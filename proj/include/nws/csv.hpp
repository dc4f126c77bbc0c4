#pragma once

#include <iomanip>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "nws/graph.hpp"
#include "nws/mcmc.hpp"
#include "nws/weights.hpp"

namespace nws {

using ParamList = std::vector<std::pair<std::string, std::string>>;

// "# key=value" preamble; together with the seed it pins down a re-run.
inline void write_param_header(std::ostream& out, const ParamList& params) {
    for (const auto& [key, value] : params) {
        out << "# " << key << '=' << value << '\n';
    }
}

inline std::string format_weight(std::int64_t w) { return std::to_string(w); }

inline std::string format_weight(double w) {
    std::ostringstream os;
    os << std::setprecision(std::numeric_limits<double>::max_digits10) << w;
    return os.str();
}

template <WeightType W>
void write_weights_csv(std::ostream& out, const Graph& g, const WeightAssignment<W>& w,
                       const ParamList& params = {}) {
    write_param_header(out, params);
    out << "edge_index,source,target,weight\n";
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const auto& edge = g.edge(e);
        out << e << ',' << edge.source << ',' << edge.target << ',' << format_weight(w[e]) << '\n';
    }
}

inline void write_stats_csv(std::ostream& out, const RunStats& stats, const ParamList& params = {}) {
    write_param_header(out, params);
    out << "steps,accepted,acc_rate,mean_weight,frac_negative,mean_ins_accepted,"
           "mean_ins_rejected,ns_per_step\n";
    for (const CheckpointRow& row : stats.rows) {
        out << row.steps << ',' << row.accepted << ',' << format_weight(row.acceptance_rate) << ','
            << format_weight(row.mean_weight) << ',' << format_weight(row.fraction_negative) << ','
            << format_weight(row.mean_insertions_accepted) << ','
            << format_weight(row.mean_insertions_rejected) << ','
            << format_weight(row.ns_per_step) << '\n';
    }
}

} // namespace nws
