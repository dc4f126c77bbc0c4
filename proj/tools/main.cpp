// nws: sample negative edge weights without negative cycles, generate the
// graphs the experiments run on, and solve SSSP under general weights.

#include <charconv>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "nws/csv.hpp"
#include "nws/cycle_experiments.hpp"
#include "nws/edge_list_io.hpp"
#include "nws/generators.hpp"
#include "nws/graph.hpp"
#include "nws/mcmc.hpp"
#include "nws/scc.hpp"
#include "nws/sssp.hpp"
#include "nws/weights.hpp"

namespace {

using namespace nws;

struct GenSpec {
    std::string model;
    std::map<std::string, std::string> args;
    bool extract_scc = false;
    std::string text;
};

GenSpec parse_gen_spec(const std::string& text) {
    GenSpec spec;
    spec.text = text;
    const auto colon = text.find(':');
    if (colon == std::string::npos) {
        throw CLI::ValidationError("--spec", "expected '<model>:k=v,...', got '" + text + "'");
    }
    spec.model = text.substr(0, colon);
    std::stringstream rest(text.substr(colon + 1));
    std::string token;
    while (std::getline(rest, token, ',')) {
        if (token == "scc") {
            spec.extract_scc = true;
            continue;
        }
        const auto eq = token.find('=');
        if (eq == std::string::npos) {
            throw CLI::ValidationError("--spec", "malformed parameter '" + token + "'");
        }
        spec.args[token.substr(0, eq)] = token.substr(eq + 1);
    }
    return spec;
}

double spec_arg(const GenSpec& spec, const std::string& key,
                std::optional<double> fallback = std::nullopt) {
    const auto it = spec.args.find(key);
    if (it == spec.args.end()) {
        if (fallback) {
            return *fallback;
        }
        throw CLI::ValidationError("--spec", spec.model + " needs parameter '" + key + "'");
    }
    return std::stod(it->second);
}

Graph generate_graph(const GenSpec& spec, std::uint64_t seed) {
    Pcg64 rng(seed);
    Graph g = [&] {
        if (spec.model == "gnp") {
            return gen_gnp(static_cast<NodeId>(spec_arg(spec, "n")), spec_arg(spec, "deg"), rng);
        }
        if (spec.model == "dsf") {
            return gen_dsf(static_cast<NodeId>(spec_arg(spec, "n")), spec_arg(spec, "beta"),
                           spec_arg(spec, "din", 1.0), spec_arg(spec, "dout", 1.0), rng);
        }
        if (spec.model == "cycle") {
            return gen_cycle(static_cast<NodeId>(spec_arg(spec, "n")));
        }
        if (spec.model == "dpath") {
            return gen_doubly_linked_path(static_cast<NodeId>(spec_arg(spec, "k")));
        }
        throw CLI::ValidationError("--spec", "unknown model '" + spec.model + "'");
    }();
    if (spec.extract_scc) {
        g = largest_scc_subgraph(g).graph;
    }
    return g;
}

template <WeightType W>
WeightDomain<W> parse_domain(const std::string& text) {
    const auto colon = text.find(':', 1); // skip a leading minus sign
    if (colon == std::string::npos) {
        throw CLI::ValidationError("--domain", "expected 'a:b', got '" + text + "'");
    }
    try {
        if constexpr (std::is_same_v<W, std::int64_t>) {
            return WeightDomain<W>(std::stoll(text.substr(0, colon)),
                                   std::stoll(text.substr(colon + 1)));
        } else {
            return WeightDomain<W>(std::stod(text.substr(0, colon)),
                                   std::stod(text.substr(colon + 1)));
        }
    } catch (const std::invalid_argument&) {
        throw CLI::ValidationError("--domain", "cannot parse '" + text + "'");
    }
}

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot write '" + path + "'");
    }
    return out;
}

CheckerKind parse_checker(const std::string& name) {
    if (name == "bf") {
        return CheckerKind::BellmanFord;
    }
    if (name == "dijkstra") {
        return CheckerKind::Dijkstra;
    }
    if (name == "bidijkstra") {
        return CheckerKind::BiDijkstra;
    }
    throw CLI::ValidationError("--checker", "unknown checker '" + name + "'");
}

InitStrategy parse_init(const std::string& name) {
    if (name == "zero") {
        return InitStrategy::Zero;
    }
    if (name == "max") {
        return InitStrategy::Maximum;
    }
    if (name == "uniform") {
        return InitStrategy::UniformNonNegative;
    }
    throw CLI::ValidationError("--init", "unknown init strategy '" + name + "'");
}

int cmd_generate(const std::string& spec_text, std::uint64_t seed, const std::string& out_path) {
    const GenSpec spec = parse_gen_spec(spec_text);
    const Graph g = generate_graph(spec, seed);
    save_edge_list(g, out_path);
    std::cout << "n=" << g.node_count() << " m=" << g.edge_count()
              << " scc_count=" << strongly_connected_components(g).count << '\n';
    return 0;
}

struct SampleArgs {
    std::string graph_path;
    std::string gen_spec;
    std::uint64_t gen_seed = 1;
    std::string domain = "-100:100";
    std::string mode = "real";
    std::uint64_t steps = 0; // 0: 100 * m
    std::string checker = "bidijkstra";
    std::string init = "uniform";
    std::uint64_t seed = 0;
    std::string weights_out;
    std::string stats_out;
};

template <WeightType W>
int run_sample(const SampleArgs& args, const Graph& g, const std::string& graph_desc) {
    const WeightDomain<W> domain = parse_domain<W>(args.domain);
    RunConfig cfg;
    cfg.steps = args.steps;
    cfg.checker = parse_checker(args.checker);
    cfg.init = parse_init(args.init);
    cfg.seed = args.seed;

    const RunResult<W> result = run_chain<W>(g, domain, cfg);

    const ParamList params{
        {"tool", "nws sample"},
        {"graph", graph_desc},
        {"n", std::to_string(g.node_count())},
        {"m", std::to_string(g.edge_count())},
        {"domain", args.domain},
        {"mode", args.mode},
        {"steps", std::to_string(cfg.steps != 0 ? cfg.steps : 100ull * g.edge_count())},
        {"checker", args.checker},
        {"init", args.init},
        {"seed", std::to_string(args.seed)},
        {"rng", "pcg64"},
    };
    {
        auto out = open_output(args.weights_out);
        write_weights_csv(out, g, result.weights, params);
    }
    {
        auto out = open_output(args.stats_out);
        write_stats_csv(out, result.stats, params);
    }
    return 0;
}

int cmd_sample(const SampleArgs& args) {
    Graph g = [&] {
        if (!args.graph_path.empty()) {
            return load_edge_list(args.graph_path).graph;
        }
        return generate_graph(parse_gen_spec(args.gen_spec), args.gen_seed);
    }();
    const std::string desc = !args.graph_path.empty()
                                 ? args.graph_path
                                 : args.gen_spec + " gen_seed=" + std::to_string(args.gen_seed);
    if (args.mode == "int") {
        return run_sample<std::int64_t>(args, g, desc);
    }
    if (args.mode == "real") {
        return run_sample<double>(args, g, desc);
    }
    throw CLI::ValidationError("--mode", "unknown mode '" + args.mode + "'");
}

int cmd_coverage(unsigned n, const std::string& domain_text, const std::vector<std::uint64_t>& taus,
                 unsigned reps, std::uint64_t seed, bool baseline, const std::string& out_path) {
    const auto domain = parse_domain<std::int64_t>(domain_text);
    std::ostream* out = &std::cout;
    std::ofstream file;
    if (!out_path.empty()) {
        file = open_output(out_path);
        out = &file;
    }
    write_param_header(*out, {{"tool", "nws coverage"},
                              {"n", std::to_string(n)},
                              {"domain", domain_text},
                              {"reps", std::to_string(reps)},
                              {"seed", std::to_string(seed)},
                              {"sampler", baseline ? "exact" : "mcmc"},
                              {"rng", "pcg64"}});
    *out << "n,tau,rep,state_count,target_count,samples_drawn,distinct_seen,reached,"
            "samples_at_target\n";
    Pcg64 rng(seed);
    const auto sampler = baseline ? CoverageSampler::Exact : CoverageSampler::Mcmc;
    const std::vector<std::uint64_t> tau_list = baseline ? std::vector<std::uint64_t>{0} : taus;
    for (const std::uint64_t tau : tau_list) {
        for (unsigned rep = 0; rep < reps; ++rep) {
            const CoverageReport r = coverage_experiment(n, domain, tau, rng, 10.0, sampler);
            *out << r.n << ',' << r.tau << ',' << rep << ',' << r.state_count << ','
                 << r.target_count << ',' << r.samples_drawn << ',' << r.distinct_seen << ','
                 << (r.reached ? 1 : 0) << ',' << r.samples_at_target << '\n';
        }
    }
    return 0;
}

int cmd_hist(unsigned n, const std::string& domain_text, const std::vector<std::uint64_t>& checkpoints,
             const std::string& init, std::uint64_t seed, unsigned reps, const std::string& out_path) {
    const auto domain = parse_domain<std::int64_t>(domain_text);
    const InitStrategy init_strategy = parse_init(init);

    std::vector<HistogramResult<std::int64_t>> runs(reps);
    std::atomic<unsigned> next{0};
    const auto worker = [&] {
        while (true) {
            const unsigned i = next.fetch_add(1);
            if (i >= reps) {
                return;
            }
            Pcg64 rng(seed + i);
            runs[i] = weight_histogram<std::int64_t>(n, domain, checkpoints, init_strategy, rng);
        }
    };
    const unsigned workers = std::min(thread_count_from_env(), reps);
    if (workers <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned i = 0; i < workers; ++i) {
            pool.emplace_back(worker);
        }
        for (auto& t : pool) {
            t.join();
        }
    }

    HistogramResult<std::int64_t> total = runs.front();
    for (unsigned i = 1; i < reps; ++i) {
        for (std::size_t cp = 0; cp < total.checkpoints.size(); ++cp) {
            for (std::size_t b = 0; b < total.checkpoints[cp].bin_count.size(); ++b) {
                total.checkpoints[cp].bin_count[b] += runs[i].checkpoints[cp].bin_count[b];
            }
        }
    }

    std::ostream* out = &std::cout;
    std::ofstream file;
    if (!out_path.empty()) {
        file = open_output(out_path);
        out = &file;
    }
    write_param_header(*out, {{"tool", "nws hist"},
                              {"n", std::to_string(n)},
                              {"domain", domain_text},
                              {"init", init},
                              {"seed", std::to_string(seed)},
                              {"reps", std::to_string(reps)},
                              {"rng", "pcg64"}});
    *out << "steps,weight,count\n";
    for (const HistogramCheckpoint& cp : total.checkpoints) {
        for (std::size_t b = 0; b < cp.bin_count.size(); ++b) {
            *out << cp.steps << ',' << (total.lo + static_cast<std::int64_t>(b)) << ','
                 << cp.bin_count[b] << '\n';
        }
    }
    return 0;
}

// Weights CSV as written by `nws sample`: comment lines, a header row, then
// "edge_index,source,target,weight". Integer mode is used iff every weight
// token parses as an integer.
struct ParsedWeights {
    bool integral = true;
    std::vector<std::int64_t> ints;
    std::vector<double> reals;
};

ParsedWeights load_weights_csv(const std::string& path, const Graph& g) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open '" + path + "'");
    }
    std::vector<std::string> tokens(g.edge_count());
    std::vector<bool> seen(g.edge_count(), false);
    std::string line;
    std::size_t line_no = 0;
    bool header_skipped = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line.front() == '#') {
            continue;
        }
        if (!header_skipped) {
            header_skipped = true;
            continue;
        }
        std::stringstream row(line);
        std::string index_str, source_str, target_str, weight_str;
        if (!std::getline(row, index_str, ',') || !std::getline(row, source_str, ',') ||
            !std::getline(row, target_str, ',') || !std::getline(row, weight_str)) {
            throw std::runtime_error("malformed weights row at line " + std::to_string(line_no));
        }
        const auto index = static_cast<std::size_t>(std::stoull(index_str));
        if (index >= g.edge_count()) {
            throw std::runtime_error("edge index out of range at line " + std::to_string(line_no));
        }
        const auto& edge = g.edge(static_cast<EdgeId>(index));
        if (std::stoull(source_str) != edge.source || std::stoull(target_str) != edge.target) {
            throw std::runtime_error("weights row does not match graph at line " +
                                     std::to_string(line_no));
        }
        tokens[index] = weight_str;
        seen[index] = true;
    }
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (!seen[e]) {
            throw std::runtime_error("missing weight for edge " + std::to_string(e));
        }
    }

    ParsedWeights out;
    for (const std::string& token : tokens) {
        std::int64_t v = 0;
        const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
        if (ec != std::errc{} || ptr != token.data() + token.size()) {
            out.integral = false;
            break;
        }
    }
    for (const std::string& token : tokens) {
        if (out.integral) {
            out.ints.push_back(std::stoll(token));
        } else {
            out.reals.push_back(std::stod(token));
        }
    }
    return out;
}

template <WeightType W>
void print_sssp(std::ostream& out, const Graph& g, const WeightAssignment<W>& w, NodeId source) {
    const SsspResult<W> result = sssp_general(g, w, source);
    if (result.status == SsspStatus::NegativeCycleFound) {
        out << "NEGATIVE_CYCLE\n";
        return;
    }
    out << "node,distance\n";
    for (NodeId v = 0; v < g.node_count(); ++v) {
        out << v << ',';
        if (result.distance[v] == unreachable_distance<W>()) {
            out << "inf";
        } else {
            out << format_weight(result.distance[v]);
        }
        out << '\n';
    }
}

int cmd_sssp(const std::string& graph_path, const std::string& weights_path, NodeId source,
             const std::string& out_path) {
    const Graph g = load_edge_list(graph_path).graph;
    if (source >= g.node_count()) {
        throw std::runtime_error("source node out of range");
    }
    const ParsedWeights w = load_weights_csv(weights_path, g);

    std::ostream* out = &std::cout;
    std::ofstream file;
    if (!out_path.empty()) {
        file = open_output(out_path);
        out = &file;
    }
    if (w.integral) {
        print_sssp<std::int64_t>(*out, g, w.ints, source);
    } else {
        print_sssp<double>(*out, g, w.reals, source);
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Uniform sampling of negative edge weights without negative cycles"};
    app.require_subcommand(1);

    std::string spec_text, out_path;
    std::uint64_t gen_cmd_seed = 1;
    auto* generate = app.add_subcommand("generate", "Write a generated graph as an edge list");
    generate->add_option("--spec", spec_text,
                         "gnp:n=<int>,deg=<real> | dsf:n=<int>,beta=<real> | cycle:n=<int> | "
                         "dpath:k=<int>; append ',scc' to keep the largest SCC")
        ->required();
    generate->add_option("--seed", gen_cmd_seed, "generator seed");
    generate->add_option("--out", out_path, "output edge list path")->required();

    SampleArgs sample_args;
    auto* sample = app.add_subcommand("sample", "Run the MCMC weight sampler");
    auto* graph_opt = sample->add_option("--graph", sample_args.graph_path, "edge list to load");
    sample->add_option("--gen", sample_args.gen_spec, "generator spec instead of --graph")
        ->excludes(graph_opt);
    sample->add_option("--gen-seed", sample_args.gen_seed, "seed for --gen (default 1)");
    sample->add_option("--domain", sample_args.domain, "weight domain a:b (default -100:100)");
    sample->add_option("--mode", sample_args.mode, "int | real (default real)");
    sample->add_option("--steps", sample_args.steps, "MCMC steps (default 100*m)");
    sample->add_option("--checker", sample_args.checker,
                       "bf | dijkstra | bidijkstra (default bidijkstra)");
    sample->add_option("--init", sample_args.init, "zero | max | uniform (default uniform)");
    sample->add_option("--seed", sample_args.seed, "chain seed");
    sample->add_option("--weights-out", sample_args.weights_out, "final weights CSV")->required();
    sample->add_option("--stats-out", sample_args.stats_out, "checkpoint stats CSV")->required();

    unsigned cov_n = 8;
    std::string cov_domain = "-1:1";
    std::vector<std::uint64_t> cov_taus;
    unsigned cov_reps = 20;
    std::uint64_t cov_seed = 0;
    bool cov_baseline = false;
    std::string cov_out;
    auto* coverage = app.add_subcommand("coverage", "Runs-until-coverage experiment on the n-cycle");
    coverage->add_option("--n", cov_n, "cycle length")->required();
    coverage->add_option("--domain", cov_domain, "integer weight domain a:b (default -1:1)");
    coverage->add_option("--tau", cov_taus, "comma-separated MCMC steps per sample")
        ->delimiter(',');
    coverage->add_option("--reps", cov_reps, "repetitions per tau (default 20)");
    coverage->add_option("--seed", cov_seed, "seed");
    coverage->add_flag("--baseline", cov_baseline, "use the exact sampler instead of the MCMC");
    coverage->add_option("--out", cov_out, "output CSV (default stdout)");

    unsigned hist_n = 10000;
    std::string hist_domain = "-100:100";
    std::vector<std::uint64_t> hist_checkpoints;
    std::string hist_init = "max";
    std::uint64_t hist_seed = 0;
    unsigned hist_reps = 1;
    std::string hist_out;
    auto* hist = app.add_subcommand("hist", "Edge-weight histogram on the n-cycle over time");
    hist->add_option("--n", hist_n, "cycle length")->required();
    hist->add_option("--domain", hist_domain, "integer weight domain a:b (default -100:100)");
    hist->add_option("--checkpoints", hist_checkpoints, "comma-separated step counts")
        ->required()
        ->delimiter(',');
    hist->add_option("--init", hist_init, "zero | max | uniform (default max)");
    hist->add_option("--seed", hist_seed, "seed");
    hist->add_option("--reps", hist_reps, "independent chains aggregated (default 1)");
    hist->add_option("--out", hist_out, "output CSV (default stdout)");

    std::string sssp_graph, sssp_weights, sssp_out;
    NodeId sssp_source = 0;
    auto* sssp = app.add_subcommand("sssp", "Shortest paths under general weights");
    sssp->add_option("--graph", sssp_graph, "edge list path")->required();
    sssp->add_option("--weights", sssp_weights, "weights CSV path")->required();
    sssp->add_option("--source", sssp_source, "source node id")->required();
    sssp->add_option("--out", sssp_out, "output CSV (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*generate) {
            return cmd_generate(spec_text, gen_cmd_seed, out_path);
        }
        if (*sample) {
            if (sample_args.graph_path.empty() && sample_args.gen_spec.empty()) {
                std::cerr << "error: one of --graph or --gen is required\n";
                return 1;
            }
            return cmd_sample(sample_args);
        }
        if (*coverage) {
            if (!cov_baseline && cov_taus.empty()) {
                std::cerr << "error: --tau is required unless --baseline is set\n";
                return 1;
            }
            return cmd_coverage(cov_n, cov_domain, cov_taus, cov_reps, cov_seed, cov_baseline,
                                cov_out);
        }
        if (*hist) {
            return cmd_hist(hist_n, hist_domain, hist_checkpoints, hist_init, hist_seed, hist_reps,
                            hist_out);
        }
        if (*sssp) {
            return cmd_sssp(sssp_graph, sssp_weights, sssp_source, sssp_out);
        }
    } catch (const CLI::Error& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
