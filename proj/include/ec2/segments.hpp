#ifndef EC2_SEGMENTS_HPP
#define EC2_SEGMENTS_HPP

#include <ec2/connectivity.hpp>
#include <ec2/error.hpp>
#include <ec2/graph.hpp>

#include <algorithm>
#include <compare>
#include <vector>

namespace ec2 {

/// Maximal plain path of a solution: internal vertices have degree 2 on F,
/// the end vertices are high-degree.
struct Segment {
    std::vector<VertexId> vertices; // v1 .. vk
    std::vector<EdgeId> edges;      // k-1 consecutive edges

    std::size_t length() const noexcept { return edges.size(); }
    bool is_trivial() const noexcept { return edges.size() == 1; }
    bool is_short() const noexcept { return edges.size() >= 2 && edges.size() <= 4; }
    bool is_long() const noexcept { return edges.size() >= 5; }
};

/// Direction-independent identity of a segment: its vertex sequence with the
/// smaller end first (for a closed segment, the smaller of both readings).
struct SegmentKey {
    std::vector<VertexId> sequence;

    friend bool operator==(const SegmentKey&, const SegmentKey&) = default;
    friend auto operator<=>(const SegmentKey&, const SegmentKey&) = default;
};

enum class SegmentStrength { Weak, Strong };

struct SegmentDecomposition {
    std::vector<Segment> segments;
    std::vector<int> segment_of_edge; // -1 for edges outside F
    bool is_hamiltonian_cycle = false;
};

inline SegmentKey canonical_key(const Segment& s) {
    std::vector<VertexId> fwd = s.vertices;
    std::vector<VertexId> rev(fwd.rbegin(), fwd.rend());
    if (fwd.empty()) return {};
    if (fwd.front() != fwd.back()) return {fwd.front() < fwd.back() ? fwd : rev};
    return {std::min(fwd, rev)};
}

inline SegmentDecomposition decompose(const Graph& g, const EdgeSubset& f) {
    const std::size_t n = g.vertex_count();
    const auto deg = degrees_in_subset(g, f);
    for (VertexId v = 0; v < n; ++v) {
        if (deg[v] < 2) throw Error(ErrorCode::NotSpanning, "vertex " + std::to_string(v) + " has degree < 2 on F");
    }
    SegmentDecomposition out;
    out.segment_of_edge.assign(g.edge_count(), -1);
    const bool any_high = std::any_of(deg.begin(), deg.end(), [](std::size_t d) { return d >= 3; });
    if (!any_high) {
        if (!is_connected(g, f)) throw Error(ErrorCode::NotSpanning, "F is a union of disjoint cycles");
        out.is_hamiltonian_cycle = true;
        return out;
    }
    for (VertexId start = 0; start < n; ++start) {
        if (deg[start] < 3) continue;
        for (const Incidence& first : g.adjacency(start)) {
            if (!f.contains(first.edge) || out.segment_of_edge[first.edge] != -1) continue;
            const int index = static_cast<int>(out.segments.size());
            Segment seg;
            seg.vertices.push_back(start);
            EdgeId via = first.edge;
            VertexId cur = first.neighbor;
            while (true) {
                seg.edges.push_back(via);
                seg.vertices.push_back(cur);
                out.segment_of_edge[via] = index;
                if (deg[cur] >= 3) break;
                for (const Incidence& inc : g.adjacency(cur)) {
                    if (inc.edge != via && f.contains(inc.edge)) {
                        via = inc.edge;
                        cur = inc.neighbor;
                        break;
                    }
                }
            }
            out.segments.push_back(std::move(seg));
        }
    }
    for (EdgeId e : f) {
        if (out.segment_of_edge[e] == -1) throw Error(ErrorCode::NotSpanning, "F has a cycle component without high-degree vertices");
    }
    return out;
}

/// v2 and v(k-1); a single vertex for a 2-segment.
inline std::vector<VertexId> side_vertices(const Segment& s) {
    if (s.length() < 2) throw Error(ErrorCode::TrivialSegment, "a trivial segment has no side vertices");
    VertexId a = s.vertices[1];
    VertexId b = s.vertices[s.vertices.size() - 2];
    if (a == b) return {a};
    if (a > b) std::swap(a, b);
    return {a, b};
}

/// Removing a segment deletes its edges and its internal vertices. The
/// segment is weak iff what remains is not 2-connected.
inline SegmentStrength is_weak(const Graph& g, const EdgeSubset& f, const Segment& s) {
    EdgeSubset rest = f;
    for (EdgeId e : s.edges) rest.erase(e);
    std::vector<char> alive(g.vertex_count(), 1);
    for (std::size_t i = 1; i + 1 < s.vertices.size(); ++i) alive[s.vertices[i]] = 0;
    return is_2connected_on(g, rest, alive) ? SegmentStrength::Strong : SegmentStrength::Weak;
}

} // namespace ec2

#endif // EC2_SEGMENTS_HPP
