#ifndef EC2_INSTANCES_HPP
#define EC2_INSTANCES_HPP

#include <ec2/connectivity.hpp>
#include <ec2/error.hpp>
#include <ec2/graph.hpp>
#include <ec2/random.hpp>

#include <algorithm>
#include <bit>
#include <charconv>
#include <cstdint>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ec2 {

// Instance files:
//   c <free text>        comment, ignored
//   p ec2 <n> <m>        header, exactly once, before any edge
//   e <u> <v>            m edge lines, 0-based vertex ids
// Canonical form: no comments, u < v on every line, edges sorted.

namespace detail {

inline std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

inline std::uint64_t parse_uint(std::string_view tok, std::size_t line_no) {
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
        throw Error(ErrorCode::SyntaxError, "line " + std::to_string(line_no) + ": expected a non-negative integer, got '" + std::string(tok) + "'");
    }
    return v;
}

} // namespace detail

inline Graph parse_instance(std::string_view text) {
    std::size_t n = 0, m = 0;
    bool header = false;
    std::vector<std::pair<VertexId, VertexId>> edges;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        const std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;
        const auto tok = detail::split_ws(line);
        if (tok.empty() || tok[0] == "c") continue;
        const std::string where = "line " + std::to_string(line_no);
        if (tok[0] == "p") {
            if (header) throw Error(ErrorCode::SyntaxError, where + ": second header");
            if (tok.size() != 4 || tok[1] != "ec2") throw Error(ErrorCode::SyntaxError, where + ": expected 'p ec2 <n> <m>'");
            n = detail::parse_uint(tok[2], line_no);
            m = detail::parse_uint(tok[3], line_no);
            header = true;
        } else if (tok[0] == "e") {
            if (!header) throw Error(ErrorCode::SyntaxError, where + ": edge before header");
            if (tok.size() != 3) throw Error(ErrorCode::SyntaxError, where + ": expected 'e <u> <v>'");
            const auto u = detail::parse_uint(tok[1], line_no);
            const auto v = detail::parse_uint(tok[2], line_no);
            if (u >= n || v >= n) throw Error(ErrorCode::VertexOutOfRange, where);
            edges.emplace_back(static_cast<VertexId>(u), static_cast<VertexId>(v));
        } else {
            throw Error(ErrorCode::SyntaxError, where + ": unknown line type '" + std::string(tok[0]) + "'");
        }
    }
    if (!header) throw Error(ErrorCode::SyntaxError, "missing 'p ec2' header");
    if (edges.size() != m) {
        throw Error(ErrorCode::CountMismatch, "header announces " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
    }
    return Graph(n, edges);
}

/// Canonical text of the edge set `f` (all edges when omitted).
inline std::string serialize_instance(const Graph& g, const EdgeSubset* f = nullptr) {
    std::vector<Edge> edges;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (!f || f->contains(e)) edges.push_back(g.edge(e));
    }
    std::sort(edges.begin(), edges.end());
    std::string out = "p ec2 " + std::to_string(g.vertex_count()) + " " + std::to_string(edges.size()) + "\n";
    for (const Edge& e : edges) out += "e " + std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
    return out;
}

inline std::string serialize_subset(const Graph& g, const EdgeSubset& f) { return serialize_instance(g, &f); }

inline Graph canonical_graph(std::size_t n, std::vector<std::pair<VertexId, VertexId>> edges) {
    for (auto& [a, b] : edges) {
        if (a > b) std::swap(a, b);
    }
    std::sort(edges.begin(), edges.end());
    return Graph(n, edges);
}

// ---------------------------------------------------------------------------
// Exhaustive small graphs

inline std::vector<std::pair<VertexId, VertexId>> vertex_pairs(std::size_t n) {
    std::vector<std::pair<VertexId, VertexId>> out;
    for (VertexId i = 0; i < n; ++i) {
        for (VertexId j = i + 1; j < n; ++j) out.emplace_back(i, j);
    }
    return out;
}

/// Graph whose edges are the pairs selected by `mask` (bit k = k-th pair in
/// lexicographic order).
inline Graph graph_from_mask(std::size_t n, std::uint64_t mask) {
    const auto pairs = vertex_pairs(n);
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (std::size_t k = 0; k < pairs.size(); ++k) {
        if ((mask >> k) & 1u) edges.push_back(pairs[k]);
    }
    return Graph(n, edges);
}

namespace detail {

inline bool mask_connected(const std::vector<std::uint32_t>& adj, std::uint32_t alive) {
    if (alive == 0) return true;
    std::uint32_t seen = alive & (~alive + 1);
    std::uint32_t frontier = seen;
    while (frontier) {
        const int v = std::countr_zero(frontier);
        frontier &= frontier - 1;
        const std::uint32_t next = adj[v] & alive & ~seen;
        seen |= next;
        frontier |= next;
    }
    return seen == alive;
}

} // namespace detail

/// Calls `fn(mask)` for every 2-connected labeled graph on n vertices, in
/// ascending mask order.
inline void for_each_2connected_mask(std::size_t n, const std::function<void(std::uint64_t)>& fn) {
    if (n < 3) throw Error(ErrorCode::InvalidArgument, "n must be at least 3");
    if (n > 7) throw Error(ErrorCode::TooLarge, "exhaustive enumeration is limited to n <= 7");
    const auto pairs = vertex_pairs(n);
    const std::uint64_t total = std::uint64_t{1} << pairs.size();
    const std::uint32_t all = (1u << n) - 1;
    std::vector<std::uint32_t> adj(n);
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        if (static_cast<std::size_t>(std::popcount(mask)) < n) continue;
        std::fill(adj.begin(), adj.end(), 0);
        for (std::size_t k = 0; k < pairs.size(); ++k) {
            if ((mask >> k) & 1u) {
                adj[pairs[k].first] |= 1u << pairs[k].second;
                adj[pairs[k].second] |= 1u << pairs[k].first;
            }
        }
        bool ok = true;
        for (std::size_t v = 0; v < n && ok; ++v) ok = std::popcount(adj[v]) >= 2;
        if (!ok || !detail::mask_connected(adj, all)) continue;
        for (std::size_t v = 0; v < n && ok; ++v) ok = detail::mask_connected(adj, all & ~(1u << v));
        if (ok) fn(mask);
    }
}

inline void enumerate_2connected(std::size_t n, const std::function<void(const Graph&)>& fn) {
    for_each_2connected_mask(n, [&](std::uint64_t mask) { fn(graph_from_mask(n, mask)); });
}

// ---------------------------------------------------------------------------
// Seeded generators

/// Hamiltonian cycle 0-1-...-(n-1)-0 plus c distinct chords.
inline Graph gen_cycle_plus_chords(std::size_t n, std::size_t c, std::uint64_t seed) {
    if (n < 3) throw Error(ErrorCode::InvalidArgument, "n must be at least 3");
    if (c > n * (n - 3) / 2) throw Error(ErrorCode::TooManyChords, std::to_string(c) + " chords requested, at most " + std::to_string(n * (n - 3) / 2) + " exist");
    std::vector<std::pair<VertexId, VertexId>> edges;
    std::vector<std::pair<VertexId, VertexId>> chords;
    for (const auto& [a, b] : vertex_pairs(n)) {
        const bool on_cycle = b == a + 1 || (a == 0 && b == n - 1);
        (on_cycle ? edges : chords).emplace_back(a, b);
    }
    Rng rng(seed);
    for (std::size_t i = 0; i < c; ++i) {
        const std::size_t j = i + rng.below(chords.size() - i);
        std::swap(chords[i], chords[j]);
        edges.push_back(chords[i]);
    }
    return canonical_graph(n, std::move(edges));
}

/// Random cycle of length in [3, n_target] grown by open ears until it has
/// n_target vertices. An ear with no inner vertex between adjacent
/// vertices is skipped.
inline Graph gen_ear_graph(std::size_t n_target, std::uint64_t seed) {
    if (n_target < 3) throw Error(ErrorCode::InvalidArgument, "n_target must be at least 3");
    Rng rng(seed);
    const std::size_t base = rng.between(3, n_target);
    std::set<std::pair<VertexId, VertexId>> edges;
    auto add = [&](VertexId a, VertexId b) { edges.insert({std::min(a, b), std::max(a, b)}); };
    for (VertexId v = 0; v < base; ++v) add(v, static_cast<VertexId>((v + 1) % base));
    std::size_t count = base;
    while (count < n_target) {
        const auto a = static_cast<VertexId>(rng.below(count));
        auto b = static_cast<VertexId>(rng.below(count - 1));
        if (b >= a) ++b;
        const std::size_t inner = rng.below(n_target - count + 1);
        if (inner == 0) {
            if (edges.count({std::min(a, b), std::max(a, b)})) continue;
            add(a, b);
            continue;
        }
        VertexId prev = a;
        for (std::size_t i = 0; i < inner; ++i) {
            const auto fresh = static_cast<VertexId>(count++);
            add(prev, fresh);
            prev = fresh;
        }
        add(prev, b);
    }
    return canonical_graph(n_target, {edges.begin(), edges.end()});
}

// ---------------------------------------------------------------------------
// Corpora

/// family: "cycle-chords" (n in [n_min, n_max], c in [1, n]) or "ear"
/// (n in [n_min, n_max]). Instance i draws its parameters and generator
/// seed from Rng(instance_seed(seed, i)).
struct CorpusSpec {
    std::string family = "cycle-chords";
    std::size_t n_min = 8;
    std::size_t n_max = 14;
    std::uint64_t seed = 1;
    std::size_t count = 200;
};

struct NamedInstance {
    std::string name; // <family>/<seed>-<index>.ec2
    Graph graph;
};

inline std::vector<NamedInstance> generate_corpus(const CorpusSpec& spec) {
    if (spec.n_min < 3 || spec.n_max < spec.n_min) throw Error(ErrorCode::InvalidArgument, "bad size range");
    if (spec.family == "tight") {
        // Reserved for the tight family; its construction is not available.
        throw Error(ErrorCode::InvalidArgument, "the 'tight' family has no generator");
    }
    std::vector<NamedInstance> out;
    for (std::size_t i = 0; i < spec.count; ++i) {
        Rng params(instance_seed(spec.seed, i));
        const std::size_t n = params.between(spec.n_min, spec.n_max);
        NamedInstance inst;
        inst.name = spec.family + "/" + std::to_string(spec.seed) + "-" + std::to_string(i) + ".ec2";
        if (spec.family == "cycle-chords") {
            const std::size_t most = std::min(n, n * (n - 3) / 2);
            const std::size_t c = most == 0 ? 0 : params.between(1, most);
            inst.graph = gen_cycle_plus_chords(n, c, params.next());
        } else if (spec.family == "ear") {
            inst.graph = gen_ear_graph(n, params.next());
        } else {
            throw Error(ErrorCode::InvalidArgument, "unknown family '" + spec.family + "'");
        }
        out.push_back(std::move(inst));
    }
    return out;
}

} // namespace ec2

#endif // EC2_INSTANCES_HPP
