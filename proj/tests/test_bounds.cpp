#include <ec2/ec2.hpp>
#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace ec2;

namespace {

Graph cycle(std::size_t n) {
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (VertexId v = 0; v < n; ++v) edges.emplace_back(v, static_cast<VertexId>((v + 1) % n));
    return canonical_graph(n, edges);
}

Graph k4() { return build_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}); }
Graph k23() { return build_graph(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}}); }

std::size_t brute(const Graph& g, Connectivity mode) {
    if (mode == Connectivity::Edge) return oracle::min_subset(g, [&](const EdgeSubset& s) { return oracle::two_edge_connected(g, s); });
    return oracle::min_subset(g, [&](const EdgeSubset& s) { return oracle::two_connected(g, s); });
}

} // namespace

TEST(Exact, SmallNamedGraphs) {
    struct Case {
        Graph g;
        std::size_t ec, vc;
    };
    const std::vector<Case> cases = {{cycle(5), 5, 5}, {k4(), 4, 4}, {k23(), 6, 6}};
    for (const auto& c : cases) {
        EXPECT_EQ(brute(c.g, Connectivity::Edge), c.ec);
        EXPECT_EQ(brute(c.g, Connectivity::Vertex), c.vc);
        EXPECT_EQ(exact_opt_2ecss(c.g).size, c.ec);
        EXPECT_EQ(exact_opt_2vcss(c.g).size, c.vc);
        EXPECT_EQ(exact_opt_enumerate(c.g, Connectivity::Edge).size, c.ec);
    }
}

TEST(Exact, BowtieHasEdgeOptimumOnly) {
    const Graph g = build_graph(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}});
    EXPECT_EQ(exact_opt_2ecss(g).size, 6u);
    try {
        exact_opt_2vcss(g);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::Infeasible);
    }
}

TEST(Exact, Preconditions) {
    try {
        exact_opt_2ecss(cycle(15));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::TooLarge);
    }
    try {
        exact_opt_2ecss(build_graph(6, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 4}, {3, 5}, {4, 5}}));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::Infeasible);
    }
}

TEST(Exact, BranchAndBoundAgreesWithEnumerationUpToSix) {
    for (std::size_t n = 3; n <= 6; ++n) {
        enumerate_2connected(n, [&](const Graph& g) {
            for (auto mode : {Connectivity::Edge, Connectivity::Vertex}) {
                const auto bb = exact_opt(g, mode);
                const auto en = exact_opt_enumerate(g, mode);
                ASSERT_EQ(bb.size, en.size) << serialize_instance(g);
                EXPECT_EQ(bb.witness.size(), bb.size);
                EXPECT_TRUE(satisfies(g, bb.witness, mode));
            }
        });
    }
}

TEST(Exact, BranchAndBoundAgreesOnSevenVertexSample) {
    std::size_t index = 0;
    for_each_2connected_mask(7, [&](std::uint64_t mask) {
        if (index++ % 997 != 0) return;
        const Graph g = graph_from_mask(7, mask);
        for (auto mode : {Connectivity::Edge, Connectivity::Vertex}) {
            ASSERT_EQ(exact_opt(g, mode).size, exact_opt_enumerate(g, mode).size) << serialize_instance(g);
        }
    });
}

TEST(Exact, IncumbentDoesNotChangeOptimum) {
    Rng rng(51);
    for (int trial = 0; trial < 40; ++trial) {
        const Graph g = chords_graph(rng, 6 + rng.below(5), 2 + rng.below(6));
        const auto r = solve_block(g);
        EXPECT_EQ(exact_opt(g, Connectivity::Edge, {}, r.F_bar).size, exact_opt(g, Connectivity::Edge).size);
        EXPECT_EQ(exact_opt(g, Connectivity::Vertex, {}, r.F).size, exact_opt(g, Connectivity::Vertex).size);
    }
}

TEST(Lp, NamedGraphs) {
    EXPECT_EQ(lp_cut_bound(cycle(5)).objective, 5);
    EXPECT_EQ(lp_cut_bound(k4()).objective, 4);
    EXPECT_EQ(lp_cut_bound(k23()).objective, 6);
    for (std::size_t n = 3; n <= 12; ++n) EXPECT_EQ(lp_cut_bound(cycle(n)).objective, n);
}

TEST(Lp, FullEnumerationOnNamedGraphs) {
    EXPECT_EQ(oracle::lp_full_enumeration(cycle(5)).value, 5);
    EXPECT_EQ(oracle::lp_full_enumeration(k4()).value, 4);
    EXPECT_EQ(oracle::lp_full_enumeration(k23()).value, 6);
}

TEST(Lp, RejectsGraphWithBridge) {
    try {
        lp_cut_bound(build_graph(6, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 4}, {3, 5}, {4, 5}}));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::Infeasible);
    }
}

TEST(Lp, ConstraintGenerationMatchesFullEnumeration) {
    Rng rng(52);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 3 + rng.below(6);
        const Graph g = trial % 2 ? gen_ear_graph(n, rng.next()) : gen_cycle_plus_chords(n, rng.below(n * (n - 3) / 2 + 1), rng.next());
        const LpState s = lp_cut_bound(g);
        EXPECT_EQ(s.objective, oracle::lp_full_enumeration(g).value) << serialize_instance(g);

        // the final point satisfies every cut, not just the generated ones
        EXPECT_GE(oracle::min_cut_brute_force(g, s.x), 2);
        Rational sum = 0;
        for (const auto& v : s.x) {
            EXPECT_GE(v, 0);
            EXPECT_LE(v, 1);
            sum += v;
        }
        EXPECT_EQ(sum, s.objective);

        // the dual certificate over the active cuts proves optimality
        Rational dual = 0;
        std::vector<Rational> load(g.edge_count(), 0);
        for (std::size_t i = 0; i < s.active_constraints.size(); ++i) {
            EXPECT_GE(s.cut_duals[i], 0);
            dual += 2 * s.cut_duals[i];
            const auto mask = side_mask(n, s.active_constraints[i]);
            for (EdgeId e = 0; e < g.edge_count(); ++e) {
                if (mask[g.edge(e).u] != mask[g.edge(e).v]) load[e] += s.cut_duals[i];
            }
        }
        for (EdgeId e = 0; e < g.edge_count(); ++e) {
            EXPECT_GE(s.edge_duals[e], 0);
            EXPECT_LE(load[e], 1 + s.edge_duals[e]);
            dual -= s.edge_duals[e];
        }
        EXPECT_EQ(dual, s.objective);
    }
}

TEST(Bounds, SandwichOnRandomBlocks) {
    Rng rng(53);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 4 + rng.below(7);
        const Graph g = trial % 2 ? gen_ear_graph(n, rng.next()) : chords_graph(rng, n, 1 + rng.below(n));
        const auto r = solve_block(g);
        BoundOptions opts;
        opts.lp = true;
        opts.exact = true;
        const BoundReport b = bound_report(g, r, opts);
        EXPECT_LE(Rational(b.degree_bound), *b.lp_value);
        EXPECT_LE(*b.lp_value, Rational(*b.exact_ec));
        EXPECT_LE(*b.exact_ec, *b.exact_vc);
        EXPECT_LE(*b.exact_vc, r.F.size());
        EXPECT_TRUE(within_ratio(r.F.size(), *b.exact_ec));
    }
}

TEST(Bounds, RatioGuard) {
    EXPECT_TRUE(within_ratio(9, 7));
    EXPECT_FALSE(within_ratio(10, 7));
    EXPECT_NO_THROW(check_ratio(9, 9, 7));
    try {
        check_ratio(10, 10, 7);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::RatioViolation);
    }
}

TEST(Bounds, DegreeBoundIsVertexCount) { EXPECT_EQ(degree_lower_bound(k23()), 5u); }
