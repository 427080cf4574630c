#ifndef EC2_TOOLS_COMMANDS_HPP
#define EC2_TOOLS_COMMANDS_HPP

// Subcommand bodies of the ec2 tool. Each takes parsed options plus output
// streams and returns the process exit code, so tests can drive them
// without spawning a process.

#include <ec2/ec2.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace ec2::cli {

namespace exit_code {
constexpr int ok = 0;
constexpr int usage = 1;
constexpr int infeasible = 2;
constexpr int verification = 3;
constexpr int ratio = 4;
} // namespace exit_code

struct CommonOptions {
    std::string order = "ascending"; // ascending | shuffle
    std::uint64_t seed = 0;
    std::size_t exact_limit = 14;
    bool lp = false;
    bool exact = false;
    bool pretty = false;
    bool timings = false;
};

struct SolveOptions {
    CommonOptions common;
    std::string input;
    std::string trace_path;
    std::string emit_f;
    std::string emit_fbar;
};

struct VerifyOptions {
    std::string instance;
    std::string solution;
    std::string mode = "ec";
};

struct BenchOptions {
    CommonOptions common;
    std::string directory;
    std::string family;
    std::size_t count = 200;
    std::size_t n_min = 8;
    std::size_t n_max = 14;
    std::size_t exhaustive = 0;
    std::size_t sample_every = 1;
    std::size_t jobs = 1;
};

struct GenOptions {
    std::string family = "cycle-chords";
    std::size_t n = 8;
    std::size_t c = 0;
    std::uint64_t seed = 1;
    std::size_t count = 0; // >0 writes a corpus
    std::size_t n_min = 8;
    std::size_t n_max = 14;
    std::string out;
};

struct BoundOnlyOptions {
    std::string input;
    std::size_t exact_limit = 14;
};

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::InvalidArgument, "cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void write_file(const std::string& path, const std::string& text) {
    const auto parent = std::filesystem::path(path).parent_path();
    if (!parent.empty()) std::filesystem::create_directories(parent);
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write " + path);
    out << text;
}

inline SolverConfig solver_config(const CommonOptions& o) {
    SolverConfig cfg;
    if (o.order == "shuffle") {
        cfg.deletion_order = DeletionOrder::SeededShuffle;
    } else if (o.order != "ascending") {
        throw Error(ErrorCode::InvalidArgument, "--order must be ascending or shuffle");
    }
    cfg.seed = o.seed;
    return cfg;
}

inline ExactOptions exact_options(std::size_t limit) {
    ExactOptions eo;
    eo.limit = limit;
    if (const char* budget = std::getenv("EC2_EXACT_BUDGET_MS")) {
        eo.budget = std::chrono::milliseconds(std::strtoll(budget, nullptr, 10));
    }
    return eo;
}

inline int code_for(const Error& e) {
    switch (e.code()) {
    case ErrorCode::Infeasible2ECSS:
    case ErrorCode::Infeasible: return exit_code::infeasible;
    case ErrorCode::RatioViolation: return exit_code::ratio;
    default: return exit_code::usage;
    }
}

inline ReportFields manifest(const std::string& command, const std::string& input, const CommonOptions& o) {
    return {
        {"manifest.command", command},
        {"manifest.input", input},
        {"manifest.order", o.order},
        {"manifest.seed", std::to_string(o.seed)},
        {"manifest.exact", o.exact ? "on" : "off"},
        {"manifest.exact_limit", std::to_string(o.exact_limit)},
        {"manifest.lp", o.lp ? "on" : "off"},
        {"manifest.version", EC2_VERSION},
    };
}

inline std::string format_ms(double ms) {
    std::ostringstream ss;
    ss << std::fixed << std::setprecision(3) << ms;
    return ss.str();
}

inline void print_fields(std::ostream& out, const ReportFields& fields, bool pretty) {
    if (!pretty) {
        out << join_lines(fields);
        return;
    }
    std::size_t width = 0;
    for (const auto& [k, v] : fields) width = std::max(width, k.size());
    for (const auto& [k, v] : fields) out << std::left << std::setw(static_cast<int>(width)) << k << " : " << v << "\n";
}

inline int cmd_solve(const SolveOptions& o, std::ostream& out, std::ostream& err) {
    try {
        const Graph g = parse_instance(read_file(o.input));
        const SolverConfig cfg = solver_config(o.common);
        const SolveResult r = solve_general(g, cfg);
        BoundOptions bo;
        bo.lp = o.common.lp;
        bo.exact = o.common.exact;
        bo.exact_options = exact_options(o.common.exact_limit);
        int rc = exit_code::ok;
        BoundReport b;
        try {
            b = bound_report(g, r, bo);
        } catch (const Error& e) {
            if (e.code() != ErrorCode::RatioViolation) throw;
            err << e.what() << "\n";
            rc = exit_code::ratio;
            bo.exact = false;
            b = bound_report(g, r, bo);
        }
        ReportFields fields = manifest("solve", o.input, o.common);
        for (auto& f : report_fields(g, r, b)) fields.push_back(std::move(f));
        if (o.common.timings) {
            for (std::size_t i = 0; i < 4; ++i) fields.emplace_back("time.step" + std::to_string(i + 1) + "_ms", format_ms(r.step_ms[i]));
        }
        print_fields(out, fields, o.common.pretty);
        if (!o.trace_path.empty()) write_file(o.trace_path, format_trace(g, r));
        if (!o.emit_f.empty()) write_file(o.emit_f, serialize_subset(g, r.F));
        if (!o.emit_fbar.empty()) write_file(o.emit_fbar, serialize_subset(g, r.F_bar));
        return rc;
    } catch (const Error& e) {
        err << e.what() << "\n";
        return code_for(e);
    }
}

/// First violated condition of the solution, or nullopt if it is feasible.
inline std::optional<std::string> first_violation(const Graph& g, const EdgeSubset& f, bool vertex_mode) {
    if (vertex_mode && g.vertex_count() < 3) return "fewer than 3 vertices";
    if (!is_connected(g, f)) return "disconnected";
    if (vertex_mode) {
        const auto cuts = find_cut_vertices(g, f);
        if (!cuts.empty()) return "cut vertex " + std::to_string(cuts.front());
    } else {
        const auto bridges = find_bridges(g, f);
        if (!bridges.empty()) {
            const Edge& e = g.edge(*bridges.begin());
            return "bridge found " + std::to_string(e.u) + "-" + std::to_string(e.v);
        }
    }
    return std::nullopt;
}

inline int cmd_verify(const VerifyOptions& o, std::ostream& out, std::ostream& err) {
    try {
        if (o.mode != "ec" && o.mode != "vc") throw Error(ErrorCode::InvalidArgument, "--mode must be ec or vc");
        const Graph g = parse_instance(read_file(o.instance));
        const Graph s = parse_instance(read_file(o.solution));
        if (s.vertex_count() != g.vertex_count()) {
            throw Error(ErrorCode::NotSubset, "solution has n=" + std::to_string(s.vertex_count()) + ", instance has n=" + std::to_string(g.vertex_count()));
        }
        EdgeSubset f = g.empty_subset();
        for (const Edge& e : s.edges()) {
            auto id = g.find_edge(e.u, e.v);
            if (!id) throw Error(ErrorCode::NotSubset, "edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " is not in the instance");
            f.insert(*id);
        }
        if (auto bad = first_violation(g, f, o.mode == "vc")) {
            out << "status=fail\nreason=" << *bad << "\n";
            return exit_code::verification;
        }
        out << "status=ok\n";
        return exit_code::ok;
    } catch (const Error& e) {
        err << e.what() << "\n";
        return exit_code::usage;
    }
}

namespace detail {

struct BenchItem {
    std::string name;
    Graph graph;
};

struct BenchRow {
    std::string line;
    bool violation = false;
    bool error = false;
    std::optional<std::pair<std::size_t, std::size_t>> ratio_f; // (size, opt)
    std::optional<std::pair<std::size_t, std::size_t>> ratio_fbar;
    double ms = 0;
};

inline bool ratio_less(const std::pair<std::size_t, std::size_t>& a, const std::pair<std::size_t, std::size_t>& b) {
    return a.first * b.second < b.first * a.second;
}

inline std::vector<BenchItem> bench_items(const BenchOptions& o) {
    std::vector<BenchItem> items;
    if (!o.directory.empty()) {
        std::vector<std::filesystem::path> paths;
        if (!std::filesystem::is_directory(o.directory)) throw Error(ErrorCode::InvalidArgument, o.directory + " is not a directory");
        for (const auto& entry : std::filesystem::recursive_directory_iterator(o.directory)) {
            if (entry.is_regular_file() && entry.path().extension() == ".ec2") paths.push_back(entry.path());
        }
        std::sort(paths.begin(), paths.end());
        for (const auto& p : paths) {
            items.push_back({std::filesystem::relative(p, o.directory).generic_string(), parse_instance(read_file(p.string()))});
        }
    } else if (o.exhaustive != 0) {
        std::size_t index = 0;
        for_each_2connected_mask(o.exhaustive, [&](std::uint64_t mask) {
            if (index++ % o.sample_every == 0) {
                items.push_back({"exhaustive/" + std::to_string(o.exhaustive) + "-" + std::to_string(mask), graph_from_mask(o.exhaustive, mask)});
            }
        });
    } else if (!o.family.empty()) {
        CorpusSpec spec{o.family, o.n_min, o.n_max, o.common.seed, o.count};
        for (auto& inst : generate_corpus(spec)) items.push_back({std::move(inst.name), std::move(inst.graph)});
    }
    return items;
}

inline BenchRow bench_one(const BenchItem& item, const BenchOptions& o) {
    BenchRow row;
    ReportFields fields{{"instance", item.name}};
    const auto t0 = std::chrono::steady_clock::now();
    try {
        const SolveResult r = solve_general(item.graph, solver_config(o.common));
        row.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        BoundOptions bo;
        bo.lp = o.common.lp;
        bo.exact = o.common.exact;
        bo.exact_options = exact_options(o.common.exact_limit);
        BoundReport b;
        try {
            b = bound_report(item.graph, r, bo);
        } catch (const Error& e) {
            if (e.code() != ErrorCode::RatioViolation) throw;
            row.violation = true;
            bo.exact = false;
            b = bound_report(item.graph, r, bo);
            b.exact_ec = exact_opt(item.graph, Connectivity::Edge, bo.exact_options, r.F_bar).size;
        }
        for (auto& f : report_fields(item.graph, r, b)) fields.push_back(std::move(f));
        if (b.exact_ec) {
            row.ratio_f = std::make_pair(r.F.size(), *b.exact_ec);
            row.ratio_fbar = std::make_pair(r.F_bar.size(), *b.exact_ec);
        }
        if (row.violation) fields.emplace_back("violation", "true");
    } catch (const Error& e) {
        row.error = true;
        fields.emplace_back("error", std::string(to_string(e.code())));
    }
    if (o.common.timings) fields.emplace_back("solve_ms", format_ms(row.ms));
    row.line = join_inline(fields);
    return row;
}

} // namespace detail

inline int cmd_bench(const BenchOptions& o, std::ostream& out, std::ostream& err) {
    std::vector<detail::BenchItem> items;
    try {
        solver_config(o.common);
        if (o.sample_every == 0) throw Error(ErrorCode::InvalidArgument, "--sample-every must be positive");
        items = detail::bench_items(o);
    } catch (const Error& e) {
        err << e.what() << "\n";
        return exit_code::usage;
    }

    std::vector<detail::BenchRow> rows(items.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < items.size(); i = next++) rows[i] = detail::bench_one(items[i], o);
    };
    const std::size_t jobs = std::max<std::size_t>(1, std::min(o.jobs, items.size()));
    std::vector<std::thread> pool;
    for (std::size_t j = 1; j < jobs; ++j) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    std::size_t violations = 0, errors = 0;
    std::optional<std::pair<std::size_t, std::size_t>> max_f, max_fbar;
    std::vector<double> times;
    for (const auto& row : rows) {
        out << row.line << "\n";
        violations += row.violation ? 1 : 0;
        errors += row.error ? 1 : 0;
        if (row.ratio_f && (!max_f || detail::ratio_less(*max_f, *row.ratio_f))) max_f = row.ratio_f;
        if (row.ratio_fbar && (!max_fbar || detail::ratio_less(*max_fbar, *row.ratio_fbar))) max_fbar = row.ratio_fbar;
        times.push_back(row.ms);
    }
    ReportFields summary = manifest("bench", !o.directory.empty() ? o.directory : (o.exhaustive ? "exhaustive" : o.family), o.common);
    summary.emplace_back("instances", std::to_string(rows.size()));
    if (max_f) summary.emplace_back("max_ratio_F", ratio_string(max_f->first, max_f->second));
    if (max_fbar) summary.emplace_back("max_ratio_Fbar", ratio_string(max_fbar->first, max_fbar->second));
    summary.emplace_back("violations", std::to_string(violations));
    summary.emplace_back("errors", std::to_string(errors));
    if (o.common.timings && !times.empty()) {
        std::sort(times.begin(), times.end());
        double total = 0;
        for (double t : times) total += t;
        auto pct = [&](double p) { return times[static_cast<std::size_t>(p * static_cast<double>(times.size() - 1))]; };
        summary.emplace_back("time.total_ms", format_ms(total));
        summary.emplace_back("time.p50_ms", format_ms(pct(0.5)));
        summary.emplace_back("time.p90_ms", format_ms(pct(0.9)));
        summary.emplace_back("time.max_ms", format_ms(times.back()));
    }
    print_fields(out, summary, o.common.pretty);
    return violations > 0 ? exit_code::ratio : exit_code::ok;
}

inline int cmd_gen(const GenOptions& o, std::ostream& out, std::ostream& err) {
    try {
        if (o.count > 0) {
            if (o.out.empty()) throw Error(ErrorCode::InvalidArgument, "--count needs --out DIR");
            const auto corpus = generate_corpus(CorpusSpec{o.family, o.n_min, o.n_max, o.seed, o.count});
            for (const auto& inst : corpus) write_file((std::filesystem::path(o.out) / inst.name).string(), serialize_instance(inst.graph));
            out << "written=" << corpus.size() << "\n";
            return exit_code::ok;
        }
        Graph g;
        if (o.family == "cycle-chords") {
            g = gen_cycle_plus_chords(o.n, o.c, o.seed);
        } else if (o.family == "ear") {
            g = gen_ear_graph(o.n, o.seed);
        } else {
            throw Error(ErrorCode::InvalidArgument, "unknown family '" + o.family + "'");
        }
        const std::string text = serialize_instance(g);
        if (o.out.empty()) {
            out << text;
        } else {
            write_file(o.out, text);
        }
        return exit_code::ok;
    } catch (const Error& e) {
        err << e.what() << "\n";
        return exit_code::usage;
    }
}

inline int cmd_exact(const BoundOnlyOptions& o, std::ostream& out, std::ostream& err) {
    try {
        const Graph g = parse_instance(read_file(o.input));
        const auto opts = exact_options(o.exact_limit);
        out << "opt_ec=" << exact_opt_2ecss(g, opts).size << "\n";
        if (is_2vcss(g, g.all_edges())) out << "opt_vc=" << exact_opt_2vcss(g, opts).size << "\n";
        return exit_code::ok;
    } catch (const Error& e) {
        err << e.what() << "\n";
        return code_for(e);
    }
}

inline int cmd_lp(const BoundOnlyOptions& o, std::ostream& out, std::ostream& err) {
    try {
        const Graph g = parse_instance(read_file(o.input));
        const LpState lp = lp_cut_bound(g);
        out << "lp=" << to_string(lp.objective) << "\n";
        out << "cuts=" << lp.active_constraints.size() << "\n";
        out << "separation_rounds=" << lp.separation_rounds << "\n";
        return exit_code::ok;
    } catch (const Error& e) {
        err << e.what() << "\n";
        return code_for(e);
    }
}

} // namespace ec2::cli

#endif // EC2_TOOLS_COMMANDS_HPP
