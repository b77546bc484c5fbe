#include <sbreak/automorphism.hpp>
#include <sbreak/errors.hpp>
#include <sbreak/instances.hpp>
#include <sbreak/program.hpp>
#include <sbreak/smodels_io.hpp>

#include <brute.hpp>

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <regex>

using namespace sbreak;

namespace {

// Detection never sees minimize statements, so symmetries are judged on the
// remaining rules.
Program without_minimize(Program p) {
    std::erase_if(p.rules, [](const Rule& r) { return r.kind == RuleKind::Minimize; });
    return p;
}

Coloring unit_coloring(std::size_t n) {
    Coloring c;
    c.cells.emplace_back();
    for (Vertex v = 0; v < n; ++v) {
        c.cells[0].push_back(v);
    }
    return c;
}

void expect_valid(const ColoredGraph& g, const GeneratorSet& set) {
    std::set<Permutation> seen;
    for (std::size_t i = 0; i < set.size(); ++i) {
        const auto& v = set.graph_generators[i];
        EXPECT_FALSE(set.generators[i].is_identity());
        EXPECT_TRUE(seen.insert(set.generators[i]).second);
        EXPECT_TRUE(is_automorphism(g, v));
    }
}

} // namespace

TEST(FindGenerators, RigidGraphsHaveNone) {
    // a spider with legs of length 1, 2, 3 and a 6-vertex asymmetric graph
    auto tree = make_graph(7, {{0, 1}, {0, 2}, {2, 3}, {0, 4}, {4, 5}, {5, 6}}, unit_coloring(7));
    ASSERT_EQ(brute::all_graph_automorphisms(tree).size(), 1u);
    EXPECT_TRUE(find_generators(tree).empty());

    auto six = make_graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {1, 5}, {2, 5}, {1, 3}}, unit_coloring(6));
    ASSERT_EQ(brute::all_graph_automorphisms(six).size(), 1u);
    EXPECT_TRUE(find_generators(six).empty());
}

TEST(FindGenerators, GeneratedGroupEqualsBruteForceOnSmallGraphs) {
    std::mt19937_64 rng(101);
    std::size_t     graphs = 0;
    for (unsigned n = 1; n <= 6; ++n) {
        for (const auto& edges : brute::graphs_up_to_iso(n)) {
            ++graphs;
            for (int trial = 0; trial < 2; ++trial) {
                auto start = trial == 0 ? unit_coloring(n) : brute::random_coloring(n, 2, rng);
                auto g     = make_graph(n, edges, start);
                auto gens  = find_generators(g);
                for (const auto& p : gens.generators) {
                    ASSERT_TRUE(is_automorphism(g, p));
                }
                auto expected = brute::all_graph_automorphisms(g);
                ASSERT_EQ(group_closure(gens.generators), expected) << "n=" << n << " edges=" << edges.size();
            }
        }
    }
    EXPECT_EQ(graphs, 1u + 2 + 4 + 11 + 34 + 156);
}

TEST(FindGenerators, PigeonHoleTwoByTwo) {
    auto p    = gen_php({2, 2});
    auto g    = build_graph(p);
    auto gens = find_generators(g);
    expect_valid(g, gens);
    auto group = group_closure(gens.generators);
    EXPECT_GE(group.size(), 4u);
    EXPECT_EQ(group, brute::all_program_automorphisms(p));
}

TEST(FindGenerators, AtomGroupEqualsBruteForceOnRandomPrograms) {
    std::mt19937_64 rng(103);
    int             nontrivial = 0;
    for (int round = 0; round < 150; ++round) {
        Program p = brute::random_program(rng, 8, 6);
        auto g    = build_graph(p);
        auto gens = find_generators(g);
        for (std::size_t i = 0; i < gens.size(); ++i) {
            ASSERT_TRUE(is_automorphism(g, gens.graph_generators[i]));
            ASSERT_EQ(atom_restriction(gens.graph_generators[i], g), gens.generators[i]);
            auto core = without_minimize(p);
            ASSERT_TRUE(programs_equal_modulo_rule_order(apply_permutation(core, gens.generators[i]), core));
        }
        auto expected = brute::all_program_automorphisms(p);
        nontrivial += expected.size() > 1;
        ASSERT_EQ(group_closure(gens.generators), expected) << write_smodels(p);
    }
    EXPECT_GT(nontrivial, 10);
}

TEST(FindGenerators, WorkedExampleWithLimitOne) {
    auto p    = gen_house(worked_house_example());
    auto g    = build_graph(p);
    auto gens = find_generators(g, {.limit = 1});
    ASSERT_EQ(gens.size(), 1u);
    EXPECT_TRUE(gens.stats.limit_hit);
    const auto& gen    = gens.generators[0];
    auto        cycles = gen.cycles();
    ASSERT_EQ(cycles.size(), 5u);
    static const std::regex assign(R"(cabinetTOthing\((\d+),(\d+)\))");
    std::set<std::string>   things;
    std::set<std::string>   cabinet_pairs;
    int                     unnamed = 0;
    for (const auto& c : cycles) {
        ASSERT_EQ(c.size(), 2u);
        bool named_a = p.symbols.count(c[0]) > 0;
        bool named_b = p.symbols.count(c[1]) > 0;
        ASSERT_EQ(named_a, named_b);
        if (!named_a) {
            ++unnamed;
            continue;
        }
        std::smatch ma, mb;
        const auto& na = p.symbols.at(c[0]);
        const auto& nb = p.symbols.at(c[1]);
        ASSERT_TRUE(std::regex_match(na, ma, assign)) << na;
        ASSERT_TRUE(std::regex_match(nb, mb, assign)) << nb;
        EXPECT_EQ(ma[2], mb[2]);
        things.insert(ma[2]);
        auto lo = std::min(ma[1].str(), mb[1].str());
        auto hi = std::max(ma[1].str(), mb[1].str());
        cabinet_pairs.insert(lo + "," + hi);
    }
    EXPECT_EQ(unnamed, 1);
    EXPECT_EQ(things.size(), 4u);
    EXPECT_EQ(cabinet_pairs.size(), 1u);
    EXPECT_TRUE(programs_equal_modulo_rule_order(apply_permutation(p, gen), p));
}

TEST(FindGenerators, LimitedRunIsPrefix) {
    std::vector<Program> programs{gen_php({3, 3}), gen_php({4, 2}), gen_house(worked_house_example()),
                                  gen_house({.persons = 3, .things_per_person = 2, .cabinets = 3, .cabinet_capacity = 2})};
    for (const auto& p : programs) {
        auto g   = build_graph(p);
        auto all = find_generators(g);
        ASSERT_FALSE(all.empty());
        EXPECT_FALSE(all.stats.limit_hit);
        for (std::size_t k = 0; k <= all.size() + 1; ++k) {
            auto some = find_generators(g, {.limit = k});
            std::size_t expect = std::min(k, all.size());
            ASSERT_EQ(some.size(), expect);
            EXPECT_TRUE(std::equal(some.generators.begin(), some.generators.end(), all.generators.begin()));
            if (k < all.size()) {
                EXPECT_TRUE(some.stats.limit_hit);
            }
            if (k > all.size()) {
                EXPECT_FALSE(some.stats.limit_hit);
            }
        }
    }
}

TEST(FindGenerators, Deterministic) {
    auto g = build_graph(gen_house({.persons = 2, .things_per_person = 2, .cabinets = 4}));
    for (std::uint64_t seed : {0u, 1u, 5u}) {
        auto a = find_generators(g, {.seed = seed});
        auto b = find_generators(g, {.seed = seed});
        EXPECT_EQ(a.generators, b.generators);
        EXPECT_EQ(a.graph_generators, b.graph_generators);
        EXPECT_EQ(a.stats.nodes, b.stats.nodes);
    }
}

TEST(FindGenerators, SeedsGenerateTheSameGroup) {
    auto p        = gen_php({3, 3});
    auto g        = build_graph(p);
    auto expected = group_closure(find_generators(g).generators);
    EXPECT_EQ(expected.size(), 36u);
    for (std::uint64_t seed = 1; seed < 6; ++seed) {
        auto gens = find_generators(g, {.seed = seed});
        expect_valid(g, gens);
        EXPECT_EQ(group_closure(gens.generators), expected);
    }
}

TEST(FindGenerators, Budgets) {
    auto g     = build_graph(gen_php({4, 4}));
    auto small = find_generators(g, {.node_budget = 2});
    EXPECT_TRUE(small.stats.budget_hit);
    EXPECT_LE(small.stats.nodes, 2u);
    for (const auto& v : small.graph_generators) {
        EXPECT_TRUE(is_automorphism(g, v));
    }
    auto timed = find_generators(g, {.time_budget = std::chrono::milliseconds(0)});
    EXPECT_TRUE(timed.stats.timed_out);
    auto none = find_generators(g, {.limit = 0});
    EXPECT_TRUE(none.empty());
    EXPECT_TRUE(none.stats.limit_hit);
}

TEST(AtomRestriction, Basics) {
    Program p;
    p.add_rule(Rule::choice({2}, {}));
    p.add_rule(Rule::choice({3}, {}));
    auto g = build_graph(p);
    EXPECT_TRUE(atom_restriction(Permutation{}, g).is_identity());
    auto gens = find_generators(g);
    ASSERT_EQ(gens.size(), 1u);
    EXPECT_EQ(gens.generators[0], Permutation::from_cycles({{2, 3}}));
    auto bad = Permutation::from_cycles({{pos_vertex(2), pos_vertex(3)}});
    EXPECT_THROW(atom_restriction(bad, g), InvariantError);
    EXPECT_FALSE(is_automorphism(g, bad));
}

TEST(FormatGenerators, OneLinePerGenerator) {
    Program p;
    p.add_rule(Rule::choice({2}, {}));
    p.add_rule(Rule::choice({3}, {}));
    auto gens = find_generators(build_graph(p));
    EXPECT_EQ(format_generators(gens), "(2 3)\n");
    EXPECT_EQ(format_generators(GeneratorSet{}), "");
}
