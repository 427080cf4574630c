#include <ec2/ec2.hpp>
#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace ec2;

namespace {

Graph k4() { return build_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}); }

Graph from_pairs(std::size_t n, std::vector<std::pair<VertexId, VertexId>> edges) { return canonical_graph(n, std::move(edges)); }

std::vector<std::string> trace_lines(const Graph& g, const SolveResult& r) {
    std::vector<std::string> out;
    for (const auto& rec : r.trace) out.push_back(format_trace_line(g, rec));
    return out;
}

bool inclusion_minimal(const Graph& g, const EdgeSubset& f, bool vertex_mode) {
    for (EdgeId e : f) {
        EdgeSubset rest = f;
        rest.erase(e);
        if (vertex_mode ? oracle::two_connected(g, rest) : oracle::two_edge_connected(g, rest)) return false;
    }
    return true;
}

Graph random_block(Rng& rng) {
    const std::size_t n = 4 + rng.below(9);
    switch (rng.below(3)) {
    case 0: return gen_ear_graph(n, rng.next());
    case 1: return chords_graph(rng, n, 1 + rng.below(n));
    default: return gen_cycle_plus_chords(n, rng.below(n * (n - 3) / 2 + 1), rng.next());
    }
}

} // namespace

TEST(Solver, CycleTakesHamiltonianShortcut) {
    const Graph g = build_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
    const auto r = solve_block(g);
    EXPECT_TRUE(r.hamiltonian_shortcut);
    EXPECT_EQ(r.F, g.all_edges());
    EXPECT_EQ(r.F_bar, g.all_edges());
    EXPECT_TRUE(r.trace.empty());
}

TEST(Solver, EveryMinimalSolutionOfK4HasFourEdges) {
    const Graph g = k4();
    for (std::uint64_t bits = 0; bits < 64; ++bits) {
        EdgeSubset s(6);
        for (EdgeId e = 0; e < 6; ++e) {
            if ((bits >> e) & 1u) s.insert(e);
        }
        if (oracle::two_connected(g, s) && inclusion_minimal(g, s, true)) EXPECT_EQ(s.size(), 4u);
    }
    EXPECT_EQ(solve_block(g).F.size(), 4u);
}

TEST(Solver, ThetaDropsOnlyTheChord) {
    const Graph g = build_graph(4, {{0, 1}, {1, 3}, {0, 2}, {2, 3}, {0, 3}});
    const auto r = solve_block(g);
    EXPECT_EQ(r.F, edges_between(g, {{0, 1}, {1, 3}, {0, 2}, {2, 3}}));
}

TEST(Solver, BowtieSolvedPerBlock) {
    const Graph g = build_graph(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}});
    const auto r = solve_general(g);
    EXPECT_EQ(r.F_bar, g.all_edges());
    EXPECT_FALSE(r.vcss_valid);
    try {
        solve_block(g);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::NotTwoConnected);
    }
}

TEST(Solver, BridgeMakesGeneralInputInfeasible) {
    const Graph g = build_graph(6, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 4}, {3, 5}, {4, 5}});
    try {
        solve_general(g);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::Infeasible2ECSS);
    }
}

TEST(Solver, DirectImprovementFixture) {
    const Graph g = from_pairs(5, {{0, 1}, {0, 3}, {0, 4}, {1, 3}, {1, 4}, {2, 3}, {2, 4}});
    const auto r = solve_block(g);
    EXPECT_EQ(trace_lines(g, r), std::vector<std::string>{"2\tdirect\t1\t0-1\t0-3,1-4\t6\t5"});
    EXPECT_EQ(r.F.size(), 5u);
}

TEST(Solver, RecursiveImprovementFixture) {
    const Graph g = from_pairs(7, {{0, 2}, {0, 4}, {0, 5}, {0, 6}, {1, 3}, {1, 4}, {1, 6}, {2, 4}, {2, 5}, {3, 5}});
    const auto r = solve_block(g);
    EXPECT_EQ(trace_lines(g, r), std::vector<std::string>{"2\trecursive:2\t1\t0-4\t0-5,1-4\t8\t7"});
    EXPECT_TRUE(oracle::two_connected(g, r.F));
}

TEST(Solver, FinalImprovementFixture) {
    const Graph g = from_pairs(10, {{0, 5}, {0, 8}, {1, 2}, {1, 4}, {1, 5}, {1, 7}, {1, 8}, {1, 9}, {2, 4}, {2, 7},
                                    {2, 8}, {2, 9}, {3, 7}, {3, 8}, {4, 5}, {4, 8}, {5, 6}, {5, 7}, {5, 8}, {6, 8}});
    const auto r = solve_block(g);
    EXPECT_EQ(trace_lines(g, r),
              (std::vector<std::string>{"2\tdirect\t1\t1-4\t1-8,4-5\t13\t12", "3\tfinal\t1\t4-5\t4-8,5-7\t12\t11"}));
    EXPECT_EQ(r.step_sizes, (std::array<std::size_t, 4>{13, 12, 11, 11}));
}

TEST(Solver, RedundantEdgeFixture) {
    const Graph g = from_pairs(7, {{0, 3}, {0, 4}, {0, 5}, {0, 6}, {1, 2}, {1, 5}, {1, 6}, {2, 3}, {2, 4}});
    const auto r = solve_block(g);
    EXPECT_EQ(r.F, g.all_edges());
    EXPECT_EQ(r.F - r.F_bar, edges_between(g, {{1, 2}}));
    EXPECT_TRUE(oracle::two_edge_connected(g, r.F_bar));
}

TEST(Solver, DeletionOperationRemovesAddedChord) {
    const Graph g = build_graph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 2}});
    const EdgeSubset h = edges_between(g, {{0, 2}});
    EXPECT_EQ(deletion_operation(g, g.all_edges(), h), edges_between(g, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}));
}

TEST(Solver, DeletionOperationFollowsOrder) {
    const Graph g = k4();
    const EdgeId first = *g.find_edge(0, 1);
    const EdgeId second = *g.find_edge(0, 2);
    EdgeSubset without_first = g.all_edges();
    without_first.erase(first);
    EdgeSubset without_second = g.all_edges();
    without_second.erase(second);
    EdgeSubset without_both = without_first;
    without_both.erase(second);
    ASSERT_TRUE(oracle::two_connected(g, without_first));
    ASSERT_TRUE(oracle::two_connected(g, without_second));
    ASSERT_FALSE(oracle::two_connected(g, without_both));

    const EdgeSubset out = deletion_operation(g, g.all_edges(), g.empty_subset());
    EXPECT_FALSE(out.contains(first));
    EXPECT_TRUE(out.contains(second));
    EXPECT_TRUE(inclusion_minimal(g, out, true));
}

TEST(Solver, FinalImprovementRevertsSingleDeletion) {
    const Graph g = k4();
    const EdgeSubset cycle = edges_between(g, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    std::vector<ImprovementRecord> trace;
    EXPECT_EQ(final_improvement(g, cycle, {}, &trace), cycle);
    EXPECT_TRUE(trace.empty());
}

TEST(Solver, RemoveRedundantDropsChord) {
    const Graph g = build_graph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 2}});
    EXPECT_EQ(remove_redundant(g, g.all_edges()), edges_between(g, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}));
}

TEST(Solver, DirectImprovementRequiresSideVertex) {
    const Graph g = from_pairs(5, {{0, 1}, {0, 3}, {0, 4}, {1, 3}, {1, 4}, {2, 3}, {2, 4}});
    const EdgeSubset f = minimal_2vcss(g);
    for (const Segment& s : decompose(g, f).segments) {
        if (s.length() < 2) continue;
        try {
            try_direct_improvement(g, f, s, s.vertices.front());
            FAIL();
        } catch (const Error& e) {
            EXPECT_EQ(e.code(), ErrorCode::InvalidArgument);
        }
    }
}

TEST(Solver, ImprovementProcessRejectsRepeatedCall) {
    const Graph g = from_pairs(5, {{0, 1}, {0, 3}, {0, 4}, {1, 3}, {1, 4}, {2, 3}, {2, 4}});
    const EdgeSubset f = minimal_2vcss(g);
    CallRegistry registry;
    const auto d = decompose(g, f);
    const Segment* seg = nullptr;
    for (const Segment& s : d.segments) {
        if (s.is_short()) seg = &s;
    }
    ASSERT_NE(seg, nullptr);
    const VertexId u = side_vertices(*seg).front();
    const auto [out, improved] = improvement_process(g, f, *seg, u, registry);
    EXPECT_TRUE(oracle::two_connected(g, out));
    if (improved) EXPECT_LT(out.size(), f.size());
    EXPECT_TRUE(registry.contains(canonical_key(*seg), u));
    try {
        improvement_process(g, f, *seg, u, registry);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::InvalidArgument);
    }
}

TEST(Solver, InvariantsOnRandomBlocks) {
    Rng rng(41);
    for (int trial = 0; trial < 250; ++trial) {
        const Graph g = random_block(rng);
        SolverConfig cfg;
        if (trial % 2) {
            cfg.deletion_order = DeletionOrder::SeededShuffle;
            cfg.seed = rng.next();
        }
        const auto step1 = minimal_2vcss(g, cfg);
        EXPECT_TRUE(inclusion_minimal(g, step1, true));

        const auto r = solve_block(g, cfg);
        EXPECT_TRUE(oracle::two_connected(g, r.F)) << serialize_instance(g);
        EXPECT_TRUE(oracle::two_edge_connected(g, r.F_bar));
        EXPECT_TRUE(r.F_bar.is_subset_of(r.F));
        EXPECT_TRUE(inclusion_minimal(g, r.F_bar, false));
        EXPECT_EQ(r.step_sizes[0], step1.size());
        for (std::size_t i = 1; i < 4; ++i) EXPECT_LE(r.step_sizes[i], r.step_sizes[i - 1]);
        EXPECT_EQ(r.step_sizes[2], r.F.size());
        EXPECT_EQ(r.step_sizes[3], r.F_bar.size());
        EXPECT_EQ(r.process_calls, r.registry_size);

        std::size_t cost = r.step_sizes[0];
        for (const auto& rec : r.trace) {
            EXPECT_EQ(rec.cost_before, cost);
            EXPECT_LT(rec.cost_after, rec.cost_before);
            EXPECT_EQ(rec.cost_after + rec.removed.size(), rec.cost_before + rec.added.size());
            if (rec.step == 3) EXPECT_GE(rec.removed.size(), 2u);
            cost = rec.cost_after;
        }
        EXPECT_EQ(cost, r.F.size());

        const auto again = solve_block(g, cfg);
        EXPECT_EQ(again.F, r.F);
        EXPECT_EQ(again.F_bar, r.F_bar);
        EXPECT_EQ(format_trace(g, again), format_trace(g, r));
    }
}

TEST(Solver, DisabledStepsLeaveSolutionUntouched) {
    Rng rng(42);
    for (int trial = 0; trial < 50; ++trial) {
        const Graph g = random_block(rng);
        SolverConfig cfg;
        cfg.enable_improvements = false;
        cfg.enable_final_improvement = false;
        cfg.enable_cleanup = false;
        const auto r = solve_block(g, cfg);
        EXPECT_EQ(r.F, minimal_2vcss(g));
        EXPECT_EQ(r.F_bar, r.F);
        EXPECT_TRUE(r.trace.empty());
    }
}

TEST(Solver, GeneralInputsWithSeveralBlocks) {
    Rng rng(43);
    for (int trial = 0; trial < 60; ++trial) {
        // glue two random blocks at one shared vertex
        const Graph a = random_block(rng);
        const Graph b = random_block(rng);
        std::vector<std::pair<VertexId, VertexId>> edges;
        for (const Edge& e : a.edges()) edges.emplace_back(e.u, e.v);
        const auto shift = static_cast<VertexId>(a.vertex_count() - 1);
        for (const Edge& e : b.edges()) edges.emplace_back(e.u + shift, e.v + shift);
        const Graph g(a.vertex_count() + b.vertex_count() - 1, edges);
        const auto r = solve_general(g);
        EXPECT_FALSE(r.vcss_valid);
        EXPECT_TRUE(oracle::two_edge_connected(g, r.F_bar));
        EXPECT_TRUE(oracle::two_edge_connected(g, r.F));
        for (const auto& rec : r.trace) EXPECT_TRUE(rec.added.is_subset_of(g.all_edges()));
    }
}
