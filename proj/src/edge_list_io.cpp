#include "nws/edge_list_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <stdexcept>

namespace nws {

namespace {

std::uint64_t parse_node_token(std::string_view token, std::size_t line_no) {
    std::uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
        throw std::runtime_error("parse error at line " + std::to_string(line_no) +
                                 ": expected integer, got '" + std::string(token) + "'");
    }
    return value;
}

} // namespace

LoadedGraph load_edge_list(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open '" + path + "'");
    }

    std::vector<std::pair<std::uint64_t, std::uint64_t>> raw;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string_view view(line);
        while (!view.empty() && (view.back() == '\r' || view.back() == ' ' || view.back() == '\t')) {
            view.remove_suffix(1);
        }
        while (!view.empty() && (view.front() == ' ' || view.front() == '\t')) {
            view.remove_prefix(1);
        }
        if (view.empty() || view.front() == '#') {
            continue;
        }
        const auto sep = view.find_first_of(" \t");
        if (sep == std::string_view::npos) {
            throw std::runtime_error("malformed line " + std::to_string(line_no) +
                                     ": expected 'u v'");
        }
        auto rest = view.substr(sep);
        const auto start = rest.find_first_not_of(" \t");
        rest = rest.substr(start);
        if (rest.find_first_of(" \t") != std::string_view::npos) {
            throw std::runtime_error("malformed line " + std::to_string(line_no) +
                                     ": trailing tokens");
        }
        raw.emplace_back(parse_node_token(view.substr(0, sep), line_no),
                         parse_node_token(rest, line_no));
    }
    if (raw.empty()) {
        throw std::runtime_error("empty graph");
    }

    LoadedGraph out;
    out.original_id.reserve(2 * raw.size());
    for (const auto& [u, v] : raw) {
        out.original_id.push_back(u);
        out.original_id.push_back(v);
    }
    std::sort(out.original_id.begin(), out.original_id.end());
    out.original_id.erase(std::unique(out.original_id.begin(), out.original_id.end()),
                          out.original_id.end());

    const auto compact = [&](std::uint64_t id) {
        return static_cast<NodeId>(std::lower_bound(out.original_id.begin(), out.original_id.end(), id) -
                                   out.original_id.begin());
    };
    std::vector<Edge> edges;
    edges.reserve(raw.size());
    for (const auto& [u, v] : raw) {
        edges.push_back({compact(u), compact(v)});
    }
    out.graph = Graph::from_edges(std::move(edges), static_cast<NodeId>(out.original_id.size()));
    return out;
}

void save_edge_list(const Graph& g, const std::string& path) {
    std::ofstream outf(path);
    if (!outf) {
        throw std::runtime_error("cannot write '" + path + "'");
    }
    for (const Edge& e : g.edges()) {
        outf << e.source << ' ' << e.target << '\n';
    }
    if (!outf) {
        throw std::runtime_error("write failed for '" + path + "'");
    }
}

} // namespace nws
