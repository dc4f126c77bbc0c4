#pragma once

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <functional>
#include <limits>
#include <vector>

#include "nws/graph.hpp"
#include "nws/potential.hpp"
#include "nws/weights.hpp"

namespace nws {

// One MCMC move: replace the weight of `edge` by `new_weight`.
template <WeightType W>
struct Proposal {
    EdgeId edge;
    W new_weight;
};

struct Verdict {
    bool accepted = false;
    std::uint64_t insertions = 0; // queue pushes, the work proxy
    std::uint64_t settled = 0;    // nodes settled / dequeued
};

namespace detail {

// Scratch state of one Dijkstra search, reusable across steps: stamps make
// clearing O(1), the heap is a min-heap on (key, node) so equal keys settle
// in node-id order and insertion counts are reproducible. Stale heap entries
// from lazy decrease-key are skipped on pop.
template <WeightType W>
struct SearchSide {
    std::vector<W> dist;
    std::vector<std::uint64_t> label_stamp;
    std::vector<std::uint64_t> settle_stamp;
    std::uint64_t generation = 0;
    std::vector<std::pair<W, NodeId>> heap;
    std::vector<std::pair<NodeId, W>> settled;

    explicit SearchSide(NodeId n) : dist(n), label_stamp(n, 0), settle_stamp(n, 0) {}

    void reset() {
        ++generation;
        heap.clear();
        settled.clear();
    }

    bool labeled(NodeId x) const { return label_stamp[x] == generation; }
    bool is_settled(NodeId x) const { return settle_stamp[x] == generation; }

    void label(NodeId x, W d) {
        dist[x] = d;
        label_stamp[x] = generation;
    }

    void push(W key, NodeId x) {
        heap.emplace_back(key, x);
        std::push_heap(heap.begin(), heap.end(), std::greater<>{});
    }

    std::pair<W, NodeId> pop() {
        std::pop_heap(heap.begin(), heap.end(), std::greater<>{});
        const auto top = heap.back();
        heap.pop_back();
        return top;
    }

    // Drops stale tops; false when the queue ran empty.
    bool refresh_top() {
        while (!heap.empty()) {
            const auto [key, x] = heap.front();
            if (!is_settled(x) && key <= dist[x]) {
                return true;
            }
            pop();
        }
        return false;
    }

    void settle(NodeId x, W d) {
        dist[x] = d;
        label_stamp[x] = generation;
        settle_stamp[x] = generation;
        settled.emplace_back(x, d);
    }
};

} // namespace detail

// Consistency test by SPFA (deque Bellman-Ford with in-queue flags) from v
// on the raw weights: the update w(u,v) <- c survives iff no v->u path is
// shorter than -c. Weight increases are accepted without any search.
template <WeightType W>
class BellmanFordChecker {
public:
    explicit BellmanFordChecker(const Graph& g)
        : g_(g), dist_(g.node_count()), label_stamp_(g.node_count(), 0),
          queued_stamp_(g.node_count(), 0) {}

    Verdict check(const WeightAssignment<W>& w, const Proposal<W>& p) {
        Verdict out;
        const auto [u, v] = g_.edge(p.edge);
        if (p.new_weight >= w[p.edge]) {
            out.accepted = true;
            return out;
        }
        const W limit = -p.new_weight; // reject once dist(u) < limit

        ++generation_;
        queue_.clear();
        head_ = 0;
        label(v, W{0});
        enqueue(v);
        ++out.insertions;

        while (head_ < queue_.size()) {
            const NodeId x = queue_[head_++];
            queued_stamp_[x] = 0;
            ++out.settled;
            const W dx = dist_[x];
            for (EdgeId id = g_.out_begin(x); id != g_.out_end(x); ++id) {
                const NodeId y = g_.edge(id).target;
                const W nd = dx + w[id];
                if (!labeled(y) || nd < dist_[y]) {
                    label(y, nd);
                    if (y == u && nd < limit) {
                        return out;
                    }
                    if (queued_stamp_[y] != generation_) {
                        enqueue(y);
                        ++out.insertions;
                    }
                }
            }
        }
        out.accepted = true;
        return out;
    }

private:
    bool labeled(NodeId x) const { return label_stamp_[x] == generation_; }

    void label(NodeId x, W d) {
        dist_[x] = d;
        label_stamp_[x] = generation_;
    }

    void enqueue(NodeId x) {
        queue_.push_back(x);
        queued_stamp_[x] = generation_;
    }

    const Graph& g_;
    std::vector<W> dist_;
    std::vector<std::uint64_t> label_stamp_;
    std::vector<std::uint64_t> queued_stamp_;
    std::uint64_t generation_ = 0;
    std::vector<NodeId> queue_;
    std::size_t head_ = 0;
};

// Consistency test by a pruned Dijkstra from v on the reduced weights.
// Labels at or above the break amount are never inserted; reaching u below
// it rejects; a drained queue accepts and repairs phi along the settled
// cone. Chains of zero-reduced-weight edges are settled by a depth-first
// scan instead of passing through the queue.
//
// phi must be feasible for (g, w); it is modified only on accept.
template <WeightType W>
class DijkstraChecker {
public:
    explicit DijkstraChecker(const Graph& g) : g_(g), side_(g.node_count()) {}

    Verdict check(const WeightAssignment<W>& w, Potential<W>& phi, const Proposal<W>& p) {
        Verdict out;
        const auto [u, v] = g_.edge(p.edge);
        const W b = break_amount(g_, phi, p.edge, p.new_weight);
        if (b <= W{0}) {
            out.accepted = true;
            return out;
        }

        side_.reset();
        side_.label(v, W{0});
        side_.push(W{0}, v);
        ++out.insertions;

        while (side_.refresh_top()) {
            const auto [d, x] = side_.pop();
            side_.settle(x, d);
            ++out.settled;
            if (x == u) {
                return out; // d < b by pruning: negative cycle
            }
            dfs_stack_.clear();
            dfs_stack_.push_back(x);
            while (!dfs_stack_.empty()) {
                const NodeId y = dfs_stack_.back();
                dfs_stack_.pop_back();
                for (EdgeId id = g_.out_begin(y); id != g_.out_end(y); ++id) {
                    const NodeId z = g_.edge(id).target;
                    if (side_.is_settled(z)) {
                        continue;
                    }
                    const W wz = w[id] + phi[z] - phi[y];
                    if (wz == W{0}) {
                        side_.settle(z, d);
                        ++out.settled;
                        if (z == u) {
                            return out;
                        }
                        dfs_stack_.push_back(z);
                    } else {
                        const W nd = d + wz;
                        if (nd < b && (!side_.labeled(z) || nd < side_.dist[z])) {
                            side_.label(z, nd);
                            side_.push(nd, z);
                            ++out.insertions;
                        }
                    }
                }
            }
        }

        out.accepted = true;
        for (const auto& [x, d] : side_.settled) {
            phi[x] += std::max(W{0}, b - d);
        }
        return out;
    }

private:
    const Graph& g_;
    detail::SearchSide<W> side_;
    std::vector<NodeId> dfs_stack_;
};

// Consistency test by alternating a forward search from v with a backward
// search from u, both on the reduced weights and pruned at the break
// amount. A node whose forward and backward labels sum below the break
// amount certifies a negative cycle; once the frontier keys rule such a
// node out (or a queue drains), the update is accepted and the gradient
// increase is split over both endpoints: the forward cone is raised by the
// forward radius share, the backward cone lowered by the rest.
template <WeightType W>
class BiDijkstraChecker {
public:
    explicit BiDijkstraChecker(const Graph& g)
        : g_(g), forward_(g.node_count()), backward_(g.node_count()) {}

    Verdict check(const WeightAssignment<W>& w, Potential<W>& phi, const Proposal<W>& p) {
        Verdict out;
        const auto [u, v] = g_.edge(p.edge);
        const W b = break_amount(g_, phi, p.edge, p.new_weight);
        if (b <= W{0}) {
            out.accepted = true;
            return out;
        }

        forward_.reset();
        backward_.reset();
        forward_.label(v, W{0});
        forward_.push(W{0}, v);
        backward_.label(u, W{0});
        backward_.push(W{0}, u);
        out.insertions += 2;

        W best = kInf; // least known forward+backward label sum
        bool forward_turn = true;
        while (true) {
            if (best < b) {
                return out;
            }
            const bool forward_alive = forward_.refresh_top();
            const bool backward_alive = backward_.refresh_top();
            if (!forward_alive || !backward_alive) {
                break; // drained side proves every remaining v->u path >= b
            }
            if (forward_.heap.front().first + backward_.heap.front().first >= b) {
                break;
            }
            if (forward_turn) {
                settle_one(forward_, backward_, w, phi, b, best, out, /*forward=*/true);
            } else {
                settle_one(backward_, forward_, w, phi, b, best, out, /*forward=*/false);
            }
            forward_turn = !forward_turn;
        }

        out.accepted = true;
        const W radius_fwd =
            forward_.heap.empty() ? kInf : forward_.heap.front().first;
        const W delta_v = std::min(radius_fwd, b);
        const W delta_u = b - delta_v;
        for (const auto& [x, d] : forward_.settled) {
            phi[x] += std::max(W{0}, delta_v - d);
        }
        for (const auto& [x, d] : backward_.settled) {
            phi[x] -= std::max(W{0}, delta_u - d);
        }
        return out;
    }

private:
    static constexpr W kInf = std::numeric_limits<W>::max();

    void settle_one(detail::SearchSide<W>& side, const detail::SearchSide<W>& other,
                    const WeightAssignment<W>& w, const Potential<W>& phi, W b, W& best,
                    Verdict& out, bool forward) {
        const auto [d, x] = side.pop();
        side.settle(x, d);
        ++out.settled;
        if (forward) {
            for (EdgeId id = g_.out_begin(x); id != g_.out_end(x); ++id) {
                const NodeId z = g_.edge(id).target;
                relax(side, other, z, d + (w[id] + phi[z] - phi[x]), b, best, out);
            }
        } else {
            for (const EdgeId id : g_.in_edge_ids(x)) {
                const NodeId z = g_.edge(id).source;
                relax(side, other, z, d + (w[id] + phi[x] - phi[z]), b, best, out);
            }
        }
    }

    void relax(detail::SearchSide<W>& side, const detail::SearchSide<W>& other, NodeId z, W nd,
               W b, W& best, Verdict& out) {
        if (side.is_settled(z) || nd >= b) {
            return;
        }
        if (!side.labeled(z) || nd < side.dist[z]) {
            side.label(z, nd);
            side.push(nd, z);
            ++out.insertions;
            if (other.labeled(z)) {
                best = std::min(best, nd + other.dist[z]);
            }
        }
    }

    const Graph& g_;
    detail::SearchSide<W> forward_;
    detail::SearchSide<W> backward_;
};

enum class CheckerKind { BellmanFord, Dijkstra, BiDijkstra };

} // namespace nws
