#ifndef EC2_CONNECTIVITY_HPP
#define EC2_CONNECTIVITY_HPP

#include <ec2/error.hpp>
#include <ec2/graph.hpp>
#include <ec2/rational.hpp>

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace ec2 {

/// Maximal 2-connected pieces of a graph. A bridge forms its own
/// single-edge block.
struct BlockDecomposition {
    struct Block {
        std::vector<VertexId> vertices; // ascending
        std::vector<EdgeId> edges;      // ascending
    };
    std::vector<Block> blocks;
    std::vector<VertexId> cut_vertices; // ascending
    EdgeSubset bridge_edges;
};

struct GlobalCut {
    Rational value;
    std::vector<VertexId> side; // ascending, always contains vertex 0
};

namespace detail {

/// Depth-first lowpoint traversal of the subgraph (alive vertices, edges in
/// F). Buffers are kept between calls; one scanner per thread.
class LowpointScanner {
public:
    struct Summary {
        std::size_t alive = 0;
        std::size_t components = 0;
        bool has_cut_vertex = false;
        bool has_bridge = false;
    };

    /// With `collect` false the scan stops at the first cut vertex and does
    /// not record bridges; only the flags in the summary are reliable then.
    Summary run(const Graph& g, const EdgeSubset& f, std::span<const char> alive, bool collect,
                bool stop_on_cut = false) {
        const std::size_t n = g.vertex_count();
        disc_.assign(n, -1);
        low_.assign(n, 0);
        if (collect) {
            cut_.assign(n, 0);
            bridges_.clear();
        }
        stack_.clear();
        Summary s;
        int time = 0;
        for (VertexId root = 0; root < n; ++root) {
            if (!alive.empty() && !alive[root]) continue;
            ++s.alive;
            if (disc_[root] != -1) continue;
            ++s.components;
            disc_[root] = low_[root] = time++;
            stack_.push_back({root, kNoEdge, 0});
            std::size_t root_children = 0;
            while (!stack_.empty()) {
                Frame& top = stack_.back();
                const auto adj = g.adjacency(top.v);
                if (top.next < adj.size()) {
                    const Incidence inc = adj[top.next++];
                    if (inc.edge == top.parent_edge || !f.contains(inc.edge)) continue;
                    if (!alive.empty() && !alive[inc.neighbor]) continue;
                    if (disc_[inc.neighbor] == -1) {
                        disc_[inc.neighbor] = low_[inc.neighbor] = time++;
                        if (top.v == root) ++root_children;
                        stack_.push_back({inc.neighbor, inc.edge, 0});
                    } else {
                        low_[top.v] = std::min(low_[top.v], disc_[inc.neighbor]);
                    }
                    continue;
                }
                const Frame done = top;
                stack_.pop_back();
                if (stack_.empty()) break;
                const VertexId p = stack_.back().v;
                low_[p] = std::min(low_[p], low_[done.v]);
                if (low_[done.v] > disc_[p]) {
                    s.has_bridge = true;
                    if (collect) bridges_.push_back(done.parent_edge);
                }
                if (p != root && low_[done.v] >= disc_[p]) {
                    s.has_cut_vertex = true;
                    if (collect) cut_[p] = 1;
                    if (stop_on_cut) return s;
                }
            }
            if (root_children >= 2) {
                s.has_cut_vertex = true;
                if (collect) cut_[root] = 1;
                if (stop_on_cut) return s;
            }
        }
        return s;
    }

    const std::vector<char>& cut_flags() const noexcept { return cut_; }
    const std::vector<EdgeId>& bridges() const noexcept { return bridges_; }

private:
    static constexpr EdgeId kNoEdge = static_cast<EdgeId>(-1);
    struct Frame {
        VertexId v;
        EdgeId parent_edge;
        std::size_t next;
    };

    std::vector<int> disc_;
    std::vector<int> low_;
    std::vector<char> cut_;
    std::vector<EdgeId> bridges_;
    std::vector<Frame> stack_;
};

inline LowpointScanner& scanner() {
    thread_local LowpointScanner s;
    return s;
}

inline bool min_degree_at_least_two(const Graph& g, const EdgeSubset& f, std::span<const char> alive) {
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (!alive.empty() && !alive[v]) continue;
        std::size_t d = 0;
        for (const Incidence& inc : g.adjacency(v)) {
            if (f.contains(inc.edge) && (alive.empty() || alive[inc.neighbor])) {
                if (++d >= 2) break;
            }
        }
        if (d < 2) return false;
    }
    return true;
}

} // namespace detail

/// Bridges of the subgraph (V, F), ascending.
inline EdgeSubset find_bridges(const Graph& g, const EdgeSubset& f) {
    auto& sc = detail::scanner();
    sc.run(g, f, {}, true);
    EdgeSubset out(g.edge_count());
    for (EdgeId e : sc.bridges()) out.insert(e);
    return out;
}

/// Articulation points of the subgraph (V, F), ascending.
inline std::vector<VertexId> find_cut_vertices(const Graph& g, const EdgeSubset& f) {
    auto& sc = detail::scanner();
    sc.run(g, f, {}, true);
    std::vector<VertexId> out;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (sc.cut_flags()[v]) out.push_back(v);
    }
    return out;
}

inline bool is_connected(const Graph& g, const EdgeSubset& f) {
    return detail::scanner().run(g, f, {}, false).components <= 1;
}

inline bool is_2ecss(const Graph& g, const EdgeSubset& f) {
    if (!detail::min_degree_at_least_two(g, f, {}) && g.vertex_count() > 1) return false;
    const auto s = detail::scanner().run(g, f, {}, false);
    return s.components <= 1 && !s.has_bridge;
}

/// 2-connectivity of the subgraph induced on the alive vertices by F. Fewer
/// than three alive vertices never counts as 2-connected.
inline bool is_2connected_on(const Graph& g, const EdgeSubset& f, std::span<const char> alive) {
    std::size_t count = 0;
    if (alive.empty()) {
        count = g.vertex_count();
    } else {
        for (char a : alive) count += a ? 1 : 0;
    }
    if (count < 3) return false;
    if (!detail::min_degree_at_least_two(g, f, alive)) return false;
    const auto s = detail::scanner().run(g, f, alive, false, true);
    return s.components == 1 && !s.has_cut_vertex;
}

inline bool is_2vcss(const Graph& g, const EdgeSubset& f) { return is_2connected_on(g, f, {}); }

/// Hopcroft-Tarjan block decomposition of the whole graph.
inline BlockDecomposition block_decomposition(const Graph& g) {
    const std::size_t n = g.vertex_count();
    BlockDecomposition out;
    out.bridge_edges = EdgeSubset(g.edge_count());
    if (n == 0) return out;
    if (!is_connected(g, g.all_edges())) throw Error(ErrorCode::Disconnected, "graph is not connected");

    constexpr EdgeId kNone = static_cast<EdgeId>(-1);
    struct Frame {
        VertexId v;
        EdgeId parent_edge;
        std::size_t next;
    };
    std::vector<int> disc(n, -1), low(n, 0);
    std::vector<EdgeId> edge_stack;
    std::vector<Frame> stack{{0, kNone, 0}};
    std::vector<std::size_t> membership(n, 0);
    disc[0] = low[0] = 0;
    int time = 1;
    while (!stack.empty()) {
        Frame& top = stack.back();
        const auto adj = g.adjacency(top.v);
        if (top.next < adj.size()) {
            const Incidence inc = adj[top.next++];
            if (inc.edge == top.parent_edge) continue;
            if (disc[inc.neighbor] == -1) {
                edge_stack.push_back(inc.edge);
                disc[inc.neighbor] = low[inc.neighbor] = time++;
                stack.push_back({inc.neighbor, inc.edge, 0});
            } else if (disc[inc.neighbor] < disc[top.v]) {
                edge_stack.push_back(inc.edge);
                low[top.v] = std::min(low[top.v], disc[inc.neighbor]);
            }
            continue;
        }
        const Frame done = stack.back();
        stack.pop_back();
        if (stack.empty()) break;
        const VertexId p = stack.back().v;
        low[p] = std::min(low[p], low[done.v]);
        if (low[done.v] >= disc[p]) {
            BlockDecomposition::Block block;
            EdgeId e;
            do {
                e = edge_stack.back();
                edge_stack.pop_back();
                block.edges.push_back(e);
                block.vertices.push_back(g.edge(e).u);
                block.vertices.push_back(g.edge(e).v);
            } while (e != done.parent_edge);
            std::sort(block.edges.begin(), block.edges.end());
            std::sort(block.vertices.begin(), block.vertices.end());
            block.vertices.erase(std::unique(block.vertices.begin(), block.vertices.end()), block.vertices.end());
            if (block.edges.size() == 1) out.bridge_edges.insert(block.edges.front());
            for (VertexId v : block.vertices) ++membership[v];
            out.blocks.push_back(std::move(block));
        }
    }
    std::sort(out.blocks.begin(), out.blocks.end(),
              [](const auto& a, const auto& b) { return a.edges.front() < b.edges.front(); });
    for (VertexId v = 0; v < n; ++v) {
        if (membership[v] >= 2) out.cut_vertices.push_back(v);
    }
    return out;
}

/// Exact Stoer-Wagner minimum cut. Ties between phases keep the first
/// minimum found; the reported side is the one containing vertex 0.
inline GlobalCut min_global_cut(const Graph& g, std::span<const Rational> weights) {
    const std::size_t n = g.vertex_count();
    if (weights.size() != g.edge_count()) throw Error(ErrorCode::InvalidArgument, "one weight per edge required");
    if (n < 2) throw Error(ErrorCode::InvalidArgument, "cut needs at least two vertices");
    if (!is_connected(g, g.all_edges())) throw Error(ErrorCode::Disconnected, "graph is not connected");

    std::vector<std::vector<Rational>> w(n, std::vector<Rational>(n, 0));
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (weights[e] < 0) throw Error(ErrorCode::InvalidArgument, "negative cut weight");
        const Edge& ed = g.edge(e);
        w[ed.u][ed.v] += weights[e];
        w[ed.v][ed.u] += weights[e];
    }
    // groups[v]: original vertices merged into super-vertex v
    std::vector<std::vector<VertexId>> groups(n);
    for (VertexId v = 0; v < n; ++v) groups[v] = {v};
    std::vector<char> merged(n, 0);

    std::optional<Rational> best;
    std::vector<VertexId> best_group;
    std::vector<Rational> attach(n);
    std::vector<char> added(n);
    for (std::size_t phase = 0; phase + 1 < n; ++phase) {
        std::fill(added.begin(), added.end(), 0);
        for (auto& a : attach) a = 0;
        VertexId prev = 0, last = 0;
        bool first = true;
        const std::size_t remaining = n - phase;
        for (std::size_t step = 0; step < remaining; ++step) {
            // most tightly attached vertex; smallest index on ties
            std::optional<VertexId> pick;
            for (VertexId v = 0; v < n; ++v) {
                if (merged[v] || added[v]) continue;
                if (!pick || attach[v] > attach[*pick]) pick = v;
            }
            added[*pick] = 1;
            if (!first) prev = last;
            last = *pick;
            first = false;
            for (VertexId v = 0; v < n; ++v) {
                if (!merged[v] && !added[v]) attach[v] += w[last][v];
            }
        }
        const Rational& cut_of_phase = attach[last];
        if (!best || cut_of_phase < *best) {
            best = cut_of_phase;
            best_group = groups[last];
        }
        groups[prev].insert(groups[prev].end(), groups[last].begin(), groups[last].end());
        merged[last] = 1;
        for (VertexId v = 0; v < n; ++v) {
            w[prev][v] += w[last][v];
            w[v][prev] = w[prev][v];
        }
        w[prev][prev] = 0;
    }

    std::vector<char> in_side(n, 0);
    for (VertexId v : best_group) in_side[v] = 1;
    if (!in_side[0]) {
        for (auto& c : in_side) c = !c;
    }
    GlobalCut out{*best, {}};
    for (VertexId v = 0; v < n; ++v) {
        if (in_side[v]) out.side.push_back(v);
    }
    return out;
}

/// Total weight of edges crossing the side.
inline Rational cut_weight(const Graph& g, std::span<const Rational> weights, std::span<const char> in_side) {
    Rational total = 0;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (in_side[g.edge(e).u] != in_side[g.edge(e).v]) total += weights[e];
    }
    return total;
}

} // namespace ec2

#endif // EC2_CONNECTIVITY_HPP
