#ifndef EC2_REPORT_HPP
#define EC2_REPORT_HPP

#include <ec2/bounds.hpp>
#include <ec2/graph.hpp>
#include <ec2/rational.hpp>
#include <ec2/solver.hpp>

#include <string>
#include <utility>
#include <vector>

namespace ec2 {

using ReportFields = std::vector<std::pair<std::string, std::string>>;

/// "u-v,u-v,..." in ascending edge id order; "-" when empty.
inline std::string format_edges(const Graph& g, const EdgeSubset& s) {
    if (s.empty()) return "-";
    std::string out;
    for (EdgeId e : s) {
        if (!out.empty()) out += ',';
        out += std::to_string(g.edge(e).u) + "-" + std::to_string(g.edge(e).v);
    }
    return out;
}

inline std::string kind_name(const ImprovementRecord& r) {
    switch (r.kind) {
    case ImprovementKind::Direct: return "direct";
    case ImprovementKind::Recursive: return "recursive:" + std::to_string(r.depth);
    case ImprovementKind::Final: return "final";
    }
    return "?";
}

/// step, kind, k, added, removed, cost_before, cost_after; tab separated.
inline std::string format_trace_line(const Graph& g, const ImprovementRecord& r) {
    return std::to_string(r.step) + "\t" + kind_name(r) + "\t" + std::to_string(r.k) + "\t" + format_edges(g, r.added) + "\t" +
           format_edges(g, r.removed) + "\t" + std::to_string(r.cost_before) + "\t" + std::to_string(r.cost_after);
}

inline std::string format_trace(const Graph& g, const SolveResult& r) {
    std::string out;
    for (const auto& rec : r.trace) out += format_trace_line(g, rec) + "\n";
    return out;
}

inline std::string ratio_string(std::size_t size, std::size_t opt) { return to_decimal(size, opt); }

inline ReportFields report_fields(const Graph& g, const SolveResult& r, const BoundReport& b) {
    ReportFields f;
    f.emplace_back("n", std::to_string(g.vertex_count()));
    f.emplace_back("m", std::to_string(g.edge_count()));
    f.emplace_back("F", std::to_string(r.F.size()));
    f.emplace_back("Fbar", std::to_string(r.F_bar.size()));
    f.emplace_back("vcss_valid", r.vcss_valid ? "true" : "false");
    f.emplace_back("steps", std::to_string(r.step_sizes[0]) + "," + std::to_string(r.step_sizes[1]) + "," +
                                std::to_string(r.step_sizes[2]) + "," + std::to_string(r.step_sizes[3]));
    f.emplace_back("improvements", std::to_string(r.trace.size()));
    f.emplace_back("process_calls", std::to_string(r.process_calls));
    f.emplace_back("degree_bound", std::to_string(b.degree_bound));
    if (b.lp_value) f.emplace_back("lp", to_string(*b.lp_value));
    if (b.exact_ec) f.emplace_back("opt_ec", std::to_string(*b.exact_ec));
    if (b.exact_vc) f.emplace_back("opt_vc", std::to_string(*b.exact_vc));
    if (b.exact_ec) {
        f.emplace_back("ratio_F", ratio_string(r.F.size(), *b.exact_ec));
        f.emplace_back("ratio_Fbar", ratio_string(r.F_bar.size(), *b.exact_ec));
    }
    return f;
}

inline std::string join_lines(const ReportFields& f) {
    std::string out;
    for (const auto& [k, v] : f) out += k + "=" + v + "\n";
    return out;
}

inline std::string join_inline(const ReportFields& f) {
    std::string out;
    for (const auto& [k, v] : f) {
        if (!out.empty()) out += ' ';
        out += k + "=" + v;
    }
    return out;
}

} // namespace ec2

#endif // EC2_REPORT_HPP
