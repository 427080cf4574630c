#ifndef EC2_GRAPH_HPP
#define EC2_GRAPH_HPP

#include <ec2/error.hpp>

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace ec2 {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

/// Endpoints of an undirected edge, stored with u < v.
struct Edge {
    VertexId u;
    VertexId v;

    VertexId other(VertexId x) const noexcept { return x == u ? v : u; }
    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

struct Incidence {
    VertexId neighbor;
    EdgeId edge;
};

/// Set of edge ids over a fixed universe [0, m). Bit-packed; iteration is
/// ascending by id.
class EdgeSubset {
public:
    class const_iterator {
    public:
        using iterator_category = std::forward_iterator_tag;
        using value_type = EdgeId;
        using difference_type = std::ptrdiff_t;
        using pointer = const EdgeId*;
        using reference = EdgeId;

        const_iterator() = default;
        const_iterator(const std::vector<std::uint64_t>* words, std::size_t pos)
            : words_(words), pos_(pos) { seek(); }

        EdgeId operator*() const noexcept { return static_cast<EdgeId>(pos_); }
        const_iterator& operator++() {
            ++pos_;
            seek();
            return *this;
        }
        const_iterator operator++(int) {
            auto tmp = *this;
            ++*this;
            return tmp;
        }
        friend bool operator==(const const_iterator& a, const const_iterator& b) noexcept {
            return a.pos_ == b.pos_;
        }

    private:
        void seek() {
            const std::size_t limit = words_->size() * 64;
            while (pos_ < limit) {
                std::uint64_t w = (*words_)[pos_ / 64] >> (pos_ % 64);
                if (w != 0) {
                    pos_ += static_cast<std::size_t>(std::countr_zero(w));
                    return;
                }
                pos_ = (pos_ / 64 + 1) * 64;
            }
            pos_ = limit;
        }

        const std::vector<std::uint64_t>* words_ = nullptr;
        std::size_t pos_ = 0;
    };

    EdgeSubset() = default;
    explicit EdgeSubset(std::size_t universe) : universe_(universe), words_((universe + 63) / 64, 0) {}
    EdgeSubset(std::size_t universe, std::initializer_list<EdgeId> ids) : EdgeSubset(universe) {
        for (EdgeId e : ids) insert(e);
    }
    EdgeSubset(std::size_t universe, std::span<const EdgeId> ids) : EdgeSubset(universe) {
        for (EdgeId e : ids) insert(e);
    }

    static EdgeSubset full(std::size_t universe) {
        EdgeSubset s(universe);
        for (std::size_t e = 0; e < universe; ++e) s.insert(static_cast<EdgeId>(e));
        return s;
    }

    std::size_t universe() const noexcept { return universe_; }
    std::size_t size() const noexcept { return count_; }
    bool empty() const noexcept { return count_ == 0; }

    bool contains(EdgeId e) const noexcept {
        return e < universe_ && ((words_[e / 64] >> (e % 64)) & 1u) != 0;
    }

    /// Returns true if the id was not present before.
    bool insert(EdgeId e) {
        if (e >= universe_) throw Error(ErrorCode::InvalidArgument, "edge id out of range");
        std::uint64_t& w = words_[e / 64];
        const std::uint64_t bit = std::uint64_t{1} << (e % 64);
        if (w & bit) return false;
        w |= bit;
        ++count_;
        return true;
    }

    bool erase(EdgeId e) noexcept {
        if (!contains(e)) return false;
        words_[e / 64] &= ~(std::uint64_t{1} << (e % 64));
        --count_;
        return true;
    }

    const_iterator begin() const { return const_iterator(&words_, 0); }
    const_iterator end() const { return const_iterator(&words_, universe_roundup()); }

    std::vector<EdgeId> to_vector() const { return {begin(), end()}; }

    bool is_subset_of(const EdgeSubset& other) const noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            const std::uint64_t o = i < other.words_.size() ? other.words_[i] : 0;
            if (words_[i] & ~o) return false;
        }
        return true;
    }

    EdgeSubset& operator|=(const EdgeSubset& other) {
        for (EdgeId e : other) insert(e);
        return *this;
    }
    EdgeSubset& operator-=(const EdgeSubset& other) {
        for (EdgeId e : other) erase(e);
        return *this;
    }
    friend EdgeSubset operator|(EdgeSubset a, const EdgeSubset& b) { return a |= b; }
    friend EdgeSubset operator-(EdgeSubset a, const EdgeSubset& b) { return a -= b; }

    friend bool operator==(const EdgeSubset& a, const EdgeSubset& b) noexcept {
        return a.universe_ == b.universe_ && a.words_ == b.words_;
    }

private:
    std::size_t universe_roundup() const noexcept { return words_.size() * 64; }

    std::size_t universe_ = 0;
    std::size_t count_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Immutable simple undirected graph. Vertices are 0..n-1, edge ids follow
/// construction order.
class Graph {
public:
    Graph() = default;

    Graph(std::size_t n, std::span<const std::pair<VertexId, VertexId>> edge_list)
        : n_(n), adjacency_(n) {
        edges_.reserve(edge_list.size());
        lookup_.reserve(edge_list.size() * 2);
        for (const auto& [a, b] : edge_list) {
            if (a >= n || b >= n) {
                throw Error(ErrorCode::VertexOutOfRange,
                            "edge (" + std::to_string(a) + "," + std::to_string(b) + ") with n=" + std::to_string(n));
            }
            if (a == b) throw Error(ErrorCode::SelfLoop, "vertex " + std::to_string(a));
            const Edge e{std::min(a, b), std::max(a, b)};
            const auto id = static_cast<EdgeId>(edges_.size());
            if (!lookup_.emplace(key(e.u, e.v), id).second) {
                throw Error(ErrorCode::DuplicateEdge, "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")");
            }
            edges_.push_back(e);
            adjacency_[a].push_back({b, id});
            adjacency_[b].push_back({a, id});
        }
    }

    Graph(std::size_t n, std::initializer_list<std::pair<VertexId, VertexId>> edge_list)
        : Graph(n, std::span<const std::pair<VertexId, VertexId>>(edge_list.begin(), edge_list.size())) {}

    std::size_t vertex_count() const noexcept { return n_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }

    const Edge& edge(EdgeId e) const { return edges_.at(e); }
    std::span<const Edge> edges() const noexcept { return edges_; }
    std::span<const Incidence> adjacency(VertexId v) const { return adjacency_.at(v); }

    std::optional<EdgeId> find_edge(VertexId a, VertexId b) const {
        if (a == b) return std::nullopt;
        auto it = lookup_.find(key(std::min(a, b), std::max(a, b)));
        if (it == lookup_.end()) return std::nullopt;
        return it->second;
    }

    EdgeSubset all_edges() const { return EdgeSubset::full(edges_.size()); }
    EdgeSubset empty_subset() const { return EdgeSubset(edges_.size()); }

private:
    static std::uint64_t key(VertexId a, VertexId b) noexcept {
        return (static_cast<std::uint64_t>(a) << 32) | b;
    }

    std::size_t n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<Incidence>> adjacency_;
    std::unordered_map<std::uint64_t, EdgeId> lookup_;
};

inline Graph build_graph(std::size_t n, std::span<const std::pair<VertexId, VertexId>> edge_list) {
    return Graph(n, edge_list);
}

inline Graph build_graph(std::size_t n, std::initializer_list<std::pair<VertexId, VertexId>> edge_list) {
    return Graph(n, edge_list);
}

/// N(u): edges at u that are outside the solution.
inline EdgeSubset nonsolution_incident_edges(const Graph& g, const EdgeSubset& solution, VertexId u) {
    EdgeSubset out(g.edge_count());
    for (const Incidence& inc : g.adjacency(u)) {
        if (!solution.contains(inc.edge)) out.insert(inc.edge);
    }
    return out;
}

inline std::size_t degree_in_subset(const Graph& g, const EdgeSubset& subset, VertexId v) {
    std::size_t d = 0;
    for (const Incidence& inc : g.adjacency(v)) d += subset.contains(inc.edge) ? 1 : 0;
    return d;
}

inline std::vector<std::size_t> degrees_in_subset(const Graph& g, const EdgeSubset& subset) {
    std::vector<std::size_t> deg(g.vertex_count(), 0);
    for (EdgeId e : subset) {
        ++deg[g.edge(e).u];
        ++deg[g.edge(e).v];
    }
    return deg;
}

inline EdgeSubset edges_between(const Graph& g, std::span<const std::pair<VertexId, VertexId>> pairs) {
    EdgeSubset s(g.edge_count());
    for (const auto& [a, b] : pairs) {
        auto e = g.find_edge(a, b);
        if (!e) throw Error(ErrorCode::NotSubset, "(" + std::to_string(a) + "," + std::to_string(b) + ") is not an edge");
        s.insert(*e);
    }
    return s;
}

inline EdgeSubset edges_between(const Graph& g, std::initializer_list<std::pair<VertexId, VertexId>> pairs) {
    return edges_between(g, std::span<const std::pair<VertexId, VertexId>>(pairs.begin(), pairs.size()));
}

} // namespace ec2

#endif // EC2_GRAPH_HPP
