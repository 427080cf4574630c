#include "commands.hpp"

#include <CLI11.hpp>

#include <iostream>

namespace {

void add_common(CLI::App* cmd, ec2::cli::CommonOptions& o) {
    cmd->add_option("--order", o.order, "Deletion order: ascending or shuffle")->check(CLI::IsMember({"ascending", "shuffle"}));
    cmd->add_option("--seed", o.seed, "Seed for the shuffled order and generated corpora");
    cmd->add_option("--exact-limit", o.exact_limit, "Largest n handed to the exact oracles");
    cmd->add_flag("--exact", o.exact, "Compute opt_ec / opt_vc and check the 9/7 ratio");
    cmd->add_flag("--lp", o.lp, "Compute the cut LP lower bound");
    cmd->add_flag("--pretty", o.pretty, "Aligned human-readable output");
    cmd->add_flag("--timings", o.timings, "Include wall-clock timings (output is then not reproducible)");
}

} // namespace

int main(int argc, char** argv) {
    using namespace ec2::cli;
    CLI::App app{"Approximate minimum 2-edge- and 2-vertex-connected spanning subgraphs"};
    app.require_subcommand(1);
    app.set_version_flag("--version", EC2_VERSION);

    SolveOptions solve;
    auto* solve_cmd = app.add_subcommand("solve", "Solve one instance and print a key=value report");
    solve_cmd->add_option("instance", solve.input, "Instance file")->required();
    add_common(solve_cmd, solve.common);
    solve_cmd->add_option("--trace", solve.trace_path, "Write the improvement trace here");
    solve_cmd->add_option("--emit-f", solve.emit_f, "Write F (2-VCSS) as an instance file");
    solve_cmd->add_option("--emit-fbar", solve.emit_fbar, "Write Fbar (2-ECSS) as an instance file");

    VerifyOptions verify;
    auto* verify_cmd = app.add_subcommand("verify", "Check a solution file against an instance");
    verify_cmd->add_option("instance", verify.instance)->required();
    verify_cmd->add_option("solution", verify.solution)->required();
    verify_cmd->add_option("--mode", verify.mode, "ec or vc")->check(CLI::IsMember({"ec", "vc"}));

    BenchOptions bench;
    auto* bench_cmd = app.add_subcommand("bench", "Solve a corpus and summarise ratios");
    bench_cmd->add_option("directory", bench.directory, "Directory of .ec2 files (searched recursively)");
    add_common(bench_cmd, bench.common);
    bench_cmd->add_option("--family", bench.family, "Generate a corpus instead: cycle-chords or ear");
    bench_cmd->add_option("--count", bench.count, "Corpus size");
    bench_cmd->add_option("--n-min", bench.n_min);
    bench_cmd->add_option("--n-max", bench.n_max);
    bench_cmd->add_option("--exhaustive", bench.exhaustive, "Every 2-connected labeled graph on this many vertices (3..7)");
    bench_cmd->add_option("--sample-every", bench.sample_every, "Keep every k-th exhaustive graph");
    bench_cmd->add_option("--jobs", bench.jobs, "Worker threads");

    GenOptions gen;
    auto* gen_cmd = app.add_subcommand("gen", "Generate an instance or a corpus");
    gen_cmd->add_option("--family", gen.family)->check(CLI::IsMember({"cycle-chords", "ear"}));
    gen_cmd->add_option("--n", gen.n, "Vertex count (single instance)");
    gen_cmd->add_option("--c", gen.c, "Chord count (cycle-chords)");
    gen_cmd->add_option("--seed", gen.seed);
    gen_cmd->add_option("--count", gen.count, "Write a corpus of this many instances");
    gen_cmd->add_option("--n-min", gen.n_min);
    gen_cmd->add_option("--n-max", gen.n_max);
    gen_cmd->add_option("-o,--out", gen.out, "Output file (single) or directory (corpus)");

    BoundOnlyOptions exact;
    auto* exact_cmd = app.add_subcommand("exact", "Exact opt_ec and opt_vc");
    exact_cmd->add_option("instance", exact.input)->required();
    exact_cmd->add_option("--exact-limit", exact.exact_limit);

    BoundOnlyOptions lp;
    auto* lp_cmd = app.add_subcommand("lp", "Cut LP lower bound");
    lp_cmd->add_option("instance", lp.input)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_code::usage;
    }

    if (*solve_cmd) return cmd_solve(solve, std::cout, std::cerr);
    if (*verify_cmd) return cmd_verify(verify, std::cout, std::cerr);
    if (*bench_cmd) return cmd_bench(bench, std::cout, std::cerr);
    if (*gen_cmd) return cmd_gen(gen, std::cout, std::cerr);
    if (*exact_cmd) return cmd_exact(exact, std::cout, std::cerr);
    if (*lp_cmd) return cmd_lp(lp, std::cout, std::cerr);
    return exit_code::usage;
}
