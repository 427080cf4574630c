#ifndef EC2_SOLVER_HPP
#define EC2_SOLVER_HPP

#include <ec2/connectivity.hpp>
#include <ec2/error.hpp>
#include <ec2/graph.hpp>
#include <ec2/random.hpp>
#include <ec2/segments.hpp>

#include <array>
#include <chrono>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

namespace ec2 {

enum class DeletionOrder { AscendingEdgeId, SeededShuffle };

struct SolverConfig {
    DeletionOrder deletion_order = DeletionOrder::AscendingEdgeId;
    std::uint64_t seed = 0;
    bool enable_improvements = true;     // step 2
    bool enable_final_improvement = true; // step 3
    bool enable_cleanup = true;           // step 4
    /// Deepest improvement-process level explored; 0 means unbounded.
    std::size_t max_recursion_depth = 0;
    /// 0 drops improvement records, anything else keeps them.
    int trace_verbosity = 1;
};

/// (segment, side vertex) pairs on which an improvement process has been
/// called. Append-only for the whole of step 2.
class CallRegistry {
public:
    bool contains(const SegmentKey& key, VertexId side) const { return calls_.count({key, side}) != 0; }
    bool insert(const SegmentKey& key, VertexId side) { return calls_.insert({key, side}).second; }
    std::size_t size() const noexcept { return calls_.size(); }

private:
    std::set<std::pair<SegmentKey, VertexId>> calls_;
};

enum class ImprovementKind { Direct, Recursive, Final };

struct ImprovementRecord {
    int step = 2;
    ImprovementKind kind = ImprovementKind::Direct;
    std::size_t k = 0;     // |H| of the improvement operation that fired
    std::size_t depth = 1; // recursion level at which it fired; 1 = direct
    EdgeSubset added;
    EdgeSubset removed;
    SegmentKey segment;
    VertexId side_vertex = 0;
    std::size_t cost_before = 0;
    std::size_t cost_after = 0;
};

struct SolveResult {
    EdgeSubset F;
    EdgeSubset F_bar;
    std::vector<ImprovementRecord> trace;
    /// |F| after steps 1, 2, 3 and |F_bar| after step 4.
    std::array<std::size_t, 4> step_sizes{};
    std::array<double, 4> step_ms{};
    bool vcss_valid = true;
    bool hamiltonian_shortcut = false;
    std::size_t process_calls = 0;
    std::size_t registry_size = 0;
};

/// An improvement operation: add H (critical edges at u), drop D from F.
struct Swap {
    EdgeSubset H;
    EdgeSubset D;
};

namespace detail {

inline std::vector<std::size_t> deletion_rank(std::size_t m, const SolverConfig& cfg) {
    std::vector<EdgeId> order(m);
    std::iota(order.begin(), order.end(), EdgeId{0});
    if (cfg.deletion_order == DeletionOrder::SeededShuffle) {
        Rng rng(cfg.seed);
        rng.shuffle(std::span<EdgeId>(order));
    }
    std::vector<std::size_t> rank(m);
    for (std::size_t i = 0; i < m; ++i) rank[order[i]] = i;
    return rank;
}

inline std::vector<EdgeId> in_rank_order(const EdgeSubset& s, const std::vector<std::size_t>& rank) {
    std::vector<EdgeId> v = s.to_vector();
    std::sort(v.begin(), v.end(), [&](EdgeId a, EdgeId b) { return rank[a] < rank[b]; });
    return v;
}

inline void require_2vcss(const Graph& g, const EdgeSubset& f, const char* where) {
    if (!is_2vcss(g, f)) throw std::logic_error(std::string("solution lost 2-connectivity after ") + where);
}

/// Critical edge sets on u: all 1-subsets then all 2-subsets of N(u), in
/// lexicographic order of edge ids.
inline std::vector<EdgeSubset> critical_edge_sets(const Graph& g, const EdgeSubset& f, VertexId u) {
    const auto n_u = nonsolution_incident_edges(g, f, u).to_vector();
    std::vector<EdgeSubset> out;
    for (EdgeId a : n_u) out.push_back(EdgeSubset(g.edge_count(), {a}));
    for (std::size_t i = 0; i < n_u.size(); ++i) {
        for (std::size_t j = i + 1; j < n_u.size(); ++j) out.push_back(EdgeSubset(g.edge_count(), {n_u[i], n_u[j]}));
    }
    return out;
}

/// Strong short segments of a decomposition, sorted by key.
inline std::vector<Segment> strong_short_segments(const Graph& g, const EdgeSubset& f, const SegmentDecomposition& dec) {
    std::vector<Segment> out;
    for (const Segment& s : dec.segments) {
        if (s.is_short() && is_weak(g, f, s) == SegmentStrength::Strong) out.push_back(s);
    }
    std::sort(out.begin(), out.end(), [](const Segment& a, const Segment& b) { return canonical_key(a) < canonical_key(b); });
    return out;
}

/// Shared state of one step-2 run.
class ImprovementEngine {
public:
    struct Outcome {
        EdgeSubset solution;
        std::size_t k = 0;
        std::size_t depth = 1;
    };

    ImprovementEngine(const Graph& g, const SolverConfig& cfg, CallRegistry& registry)
        : g_(g), cfg_(cfg), registry_(registry), rank_(deletion_rank(g.edge_count(), cfg)) {}

    std::optional<Outcome> process(const EdgeSubset& f, const Segment& s, VertexId u, std::size_t level) {
        ++calls_;
        registry_.insert(canonical_key(s), u);
        if (auto swap = find_direct_swap(g_, f, u)) {
            EdgeSubset next = (f | swap->H) - swap->D;
            require_2vcss(g_, next, "improvement operation");
            return Outcome{std::move(next), swap->H.size(), level};
        }
        if (cfg_.max_recursion_depth != 0 && level >= cfg_.max_recursion_depth) return std::nullopt;

        std::set<SegmentKey> existing;
        for (const Segment& seg : decompose(g_, f).segments) existing.insert(canonical_key(seg));

        for (const EdgeSubset& h : critical_edge_sets(g_, f, u)) {
            const EdgeSubset fh = f | h;
            const auto dec = decompose(g_, fh);
            std::vector<Segment> emerging;
            for (Segment& seg : strong_short_segments(g_, fh, dec)) {
                if (!existing.count(canonical_key(seg))) emerging.push_back(std::move(seg));
            }
            for (const Segment& t : emerging) {
                const SegmentKey key = canonical_key(t);
                for (VertexId v : side_vertices(t)) {
                    if (registry_.contains(key, v)) continue;
                    auto child = process(fh, t, v, level + 1);
                    if (!child) continue;
                    EdgeSubset reduced = deletion(child->solution, h);
                    if (reduced.size() < f.size()) {
                        require_2vcss(g_, reduced, "deletion operation");
                        return Outcome{std::move(reduced), child->k, child->depth};
                    }
                    // no net gain: keep f and go on with the remaining candidates
                }
            }
        }
        return std::nullopt;
    }

    EdgeSubset deletion(const EdgeSubset& base, const EdgeSubset& h) const {
        EdgeSubset out = base;
        auto scan = [&](const EdgeSubset& part) {
            for (EdgeId e : in_rank_order(part, rank_)) {
                out.erase(e);
                if (!is_2vcss(g_, out)) out.insert(e);
            }
        };
        EdgeSubset h_in_base(g_.edge_count());
        for (EdgeId e : h) {
            if (base.contains(e)) h_in_base.insert(e);
        }
        scan(base - h_in_base);
        scan(h_in_base);
        return out;
    }

    /// First (H, D) in candidate order: |H| = 1 before 2, H then D ascending
    /// lexicographically. D ranges over (k+1)-subsets of F; prefixes that
    /// leave a vertex with fewer than two edges are skipped.
    static std::optional<Swap> find_direct_swap(const Graph& g, const EdgeSubset& f, VertexId u) {
        const auto f_edges = f.to_vector();
        const auto base_deg = degrees_in_subset(g, f);
        for (const EdgeSubset& h : critical_edge_sets(g, f, u)) {
            EdgeSubset work = f | h;
            auto deg = base_deg;
            for (EdgeId e : h) {
                ++deg[g.edge(e).u];
                ++deg[g.edge(e).v];
            }
            const std::size_t need = h.size() + 1;
            std::vector<EdgeId> picked;
            std::function<bool(std::size_t)> choose = [&](std::size_t from) -> bool {
                if (picked.size() == need) return is_2vcss(g, work);
                for (std::size_t i = from; i + (need - picked.size()) <= f_edges.size(); ++i) {
                    const Edge& ed = g.edge(f_edges[i]);
                    if (deg[ed.u] <= 2 || deg[ed.v] <= 2) continue;
                    --deg[ed.u];
                    --deg[ed.v];
                    work.erase(f_edges[i]);
                    picked.push_back(f_edges[i]);
                    if (choose(i + 1)) return true;
                    picked.pop_back();
                    work.insert(f_edges[i]);
                    ++deg[ed.u];
                    ++deg[ed.v];
                }
                return false;
            };
            if (choose(0)) return Swap{h, EdgeSubset(g.edge_count(), std::span<const EdgeId>(picked))};
        }
        return std::nullopt;
    }

    std::size_t calls() const noexcept { return calls_; }

private:
    const Graph& g_;
    const SolverConfig& cfg_;
    CallRegistry& registry_;
    std::vector<std::size_t> rank_;
    std::size_t calls_ = 0;
};

inline void require_block(const Graph& g) {
    if (g.vertex_count() < 3) throw Error(ErrorCode::NotTwoConnected, "fewer than 3 vertices");
    if (!is_2vcss(g, g.all_edges())) throw Error(ErrorCode::NotTwoConnected, "input graph is not 2-connected");
}

} // namespace detail

/// Step 1: drop edges one at a time in deletion order while the rest stays
/// 2-connected. One pass suffices since 2-connectivity is monotone under
/// edge addition.
inline EdgeSubset minimal_2vcss(const Graph& g, const SolverConfig& cfg = {}) {
    detail::require_block(g);
    EdgeSubset f = g.all_edges();
    for (EdgeId e : detail::in_rank_order(f, detail::deletion_rank(g.edge_count(), cfg))) {
        f.erase(e);
        if (!is_2vcss(g, f)) f.insert(e);
    }
    return f;
}

inline std::optional<Swap> try_direct_improvement(const Graph& g, const EdgeSubset& f, const Segment& s, VertexId u) {
    const auto sides = side_vertices(s);
    if (std::find(sides.begin(), sides.end(), u) == sides.end()) {
        throw Error(ErrorCode::InvalidArgument, "u is not a side vertex of the segment");
    }
    return detail::ImprovementEngine::find_direct_swap(g, f, u);
}

/// Greedy feasibility-preserving deletion over base: edges outside H first,
/// then H, each group in deletion order.
inline EdgeSubset deletion_operation(const Graph& g, const EdgeSubset& base, const EdgeSubset& h, const SolverConfig& cfg = {}) {
    CallRegistry unused;
    return detail::ImprovementEngine(g, cfg, unused).deletion(base, h);
}

/// One improvement process on (S, u). Returns the input unchanged with
/// `false` when nothing improved.
inline std::pair<EdgeSubset, bool> improvement_process(const Graph& g, const EdgeSubset& f, const Segment& s, VertexId u,
                                                       CallRegistry& registry, const SolverConfig& cfg = {}) {
    if (registry.contains(canonical_key(s), u)) throw Error(ErrorCode::InvalidArgument, "process already called on (S,u)");
    detail::ImprovementEngine engine(g, cfg, registry);
    if (auto out = engine.process(f, s, u, 1)) return {std::move(out->solution), true};
    return {f, false};
}

struct LoopStats {
    std::vector<ImprovementRecord> trace;
    std::size_t process_calls = 0;
    std::size_t registry_size = 0;
};

/// Step 2.
inline EdgeSubset improvement_loop(const Graph& g, EdgeSubset f, const SolverConfig& cfg = {}, LoopStats* stats = nullptr) {
    CallRegistry registry;
    detail::ImprovementEngine engine(g, cfg, registry);
    while (true) {
        const auto dec = decompose(g, f);
        if (dec.is_hamiltonian_cycle) break;
        std::vector<const Segment*> shorts;
        for (const Segment& s : dec.segments) {
            if (s.is_short()) shorts.push_back(&s);
        }
        std::sort(shorts.begin(), shorts.end(),
                  [](const Segment* a, const Segment* b) { return canonical_key(*a) < canonical_key(*b); });
        bool called = false;
        for (const Segment* s : shorts) {
            const SegmentKey key = canonical_key(*s);
            std::vector<VertexId> open;
            for (VertexId u : side_vertices(*s)) {
                if (!registry.contains(key, u)) open.push_back(u);
            }
            if (open.empty() || is_weak(g, f, *s) == SegmentStrength::Weak) continue;
            called = true;
            auto out = engine.process(f, *s, open.front(), 1);
            if (out) {
                if (stats && cfg.trace_verbosity > 0) {
                    ImprovementRecord rec;
                    rec.step = 2;
                    rec.kind = out->depth == 1 ? ImprovementKind::Direct : ImprovementKind::Recursive;
                    rec.k = out->k;
                    rec.depth = out->depth;
                    rec.added = out->solution - f;
                    rec.removed = f - out->solution;
                    rec.segment = key;
                    rec.side_vertex = open.front();
                    rec.cost_before = f.size();
                    rec.cost_after = out->solution.size();
                    stats->trace.push_back(std::move(rec));
                }
                f = std::move(out->solution);
            }
            break;
        }
        if (!called) break;
    }
    if (stats) {
        stats->process_calls = engine.calls();
        stats->registry_size = registry.size();
    }
    return f;
}

/// Step 3: for each e outside F, add it and greedily delete F-edges while
/// 2-connectivity holds; keep the result iff at least two edges went.
/// Passes repeat until one makes no change.
inline EdgeSubset final_improvement(const Graph& g, EdgeSubset f, const SolverConfig& cfg = {},
                                    std::vector<ImprovementRecord>* trace = nullptr) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (EdgeId e = 0; e < g.edge_count(); ++e) {
            if (f.contains(e)) continue;
            EdgeSubset trial = f;
            trial.insert(e);
            std::size_t deleted = 0;
            for (EdgeId d : f) {
                trial.erase(d);
                if (is_2vcss(g, trial)) {
                    ++deleted;
                } else {
                    trial.insert(d);
                }
            }
            if (deleted < 2) continue;
            detail::require_2vcss(g, trial, "final improvement");
            if (trace && cfg.trace_verbosity > 0) {
                ImprovementRecord rec;
                rec.step = 3;
                rec.kind = ImprovementKind::Final;
                rec.k = 1;
                rec.depth = 1;
                rec.added = trial - f;
                rec.removed = f - trial;
                rec.side_vertex = 0;
                rec.cost_before = f.size();
                rec.cost_after = trial.size();
                trace->push_back(std::move(rec));
            }
            f = std::move(trial);
            changed = true;
        }
    }
    return f;
}

/// Step 4: drop edges (deletion order) while 2-edge-connectivity holds.
inline EdgeSubset remove_redundant(const Graph& g, EdgeSubset f, const SolverConfig& cfg = {}) {
    for (EdgeId e : detail::in_rank_order(f, detail::deletion_rank(g.edge_count(), cfg))) {
        f.erase(e);
        if (!is_2ecss(g, f)) f.insert(e);
    }
    return f;
}

inline SolveResult solve_block(const Graph& g, const SolverConfig& cfg = {}) {
    using clock = std::chrono::steady_clock;
    auto ms_since = [](clock::time_point t) { return std::chrono::duration<double, std::milli>(clock::now() - t).count(); };

    SolveResult r;
    auto t = clock::now();
    EdgeSubset f = minimal_2vcss(g, cfg);
    r.step_ms[0] = ms_since(t);
    r.step_sizes[0] = f.size();

    if (f.size() == g.vertex_count()) {
        r.hamiltonian_shortcut = true;
        r.step_sizes = {f.size(), f.size(), f.size(), f.size()};
        r.F = f;
        r.F_bar = f;
        return r;
    }

    t = clock::now();
    if (cfg.enable_improvements) {
        LoopStats stats;
        f = improvement_loop(g, std::move(f), cfg, &stats);
        r.trace = std::move(stats.trace);
        r.process_calls = stats.process_calls;
        r.registry_size = stats.registry_size;
    }
    r.step_ms[1] = ms_since(t);
    r.step_sizes[1] = f.size();

    t = clock::now();
    if (cfg.enable_final_improvement) f = final_improvement(g, std::move(f), cfg, &r.trace);
    r.step_ms[2] = ms_since(t);
    r.step_sizes[2] = f.size();

    t = clock::now();
    r.F_bar = cfg.enable_cleanup ? remove_redundant(g, f, cfg) : f;
    r.step_ms[3] = ms_since(t);
    r.step_sizes[3] = r.F_bar.size();
    r.F = std::move(f);
    return r;
}

/// Runs the block solver on every block and unions the answers. F is only
/// a 2-VCSS of G when G is a single block.
inline SolveResult solve_general(const Graph& g, const SolverConfig& cfg = {}) {
    if (g.vertex_count() < 3) throw Error(ErrorCode::Infeasible2ECSS, "fewer than 3 vertices");
    const auto blocks = block_decomposition(g);
    if (!blocks.bridge_edges.empty()) {
        const Edge& b = g.edge(*blocks.bridge_edges.begin());
        throw Error(ErrorCode::Infeasible2ECSS, "bridge " + std::to_string(b.u) + "-" + std::to_string(b.v) + " cannot lie on a cycle");
    }
    if (blocks.blocks.size() == 1) return solve_block(g, cfg);

    SolveResult total;
    total.F = g.empty_subset();
    total.F_bar = g.empty_subset();
    total.vcss_valid = false;
    for (const auto& block : blocks.blocks) {
        std::vector<VertexId> local(g.vertex_count(), 0);
        for (std::size_t i = 0; i < block.vertices.size(); ++i) local[block.vertices[i]] = static_cast<VertexId>(i);
        std::vector<std::pair<VertexId, VertexId>> edges;
        for (EdgeId e : block.edges) edges.emplace_back(local[g.edge(e).u], local[g.edge(e).v]);
        const Graph sub(block.vertices.size(), edges);
        const SolveResult part = solve_block(sub, cfg);

        auto lift = [&](const EdgeSubset& s) {
            EdgeSubset out = g.empty_subset();
            for (EdgeId e : s) out.insert(block.edges[e]);
            return out;
        };
        total.F |= lift(part.F);
        total.F_bar |= lift(part.F_bar);
        for (const auto& rec : part.trace) {
            ImprovementRecord lifted = rec;
            lifted.added = lift(rec.added);
            lifted.removed = lift(rec.removed);
            for (VertexId& v : lifted.segment.sequence) v = block.vertices[v];
            lifted.side_vertex = block.vertices[rec.side_vertex];
            total.trace.push_back(std::move(lifted));
        }
        for (std::size_t i = 0; i < 4; ++i) {
            total.step_sizes[i] += part.step_sizes[i];
            total.step_ms[i] += part.step_ms[i];
        }
        total.process_calls += part.process_calls;
        total.registry_size += part.registry_size;
    }
    return total;
}

} // namespace ec2

#endif // EC2_SOLVER_HPP
