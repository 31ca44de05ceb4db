#include "graph_euler/euler.hpp"
#include "graph_euler/graph_oracle.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

using namespace graph_euler;

namespace {

HalfEdgeGraph rose(int petals)
{
    HalfEdgeGraph g;
    g.vertex_count = 1;
    for (int i = 0; i < petals; ++i) {
        g.pairing.push_back(2 * i + 1);
        g.pairing.push_back(2 * i);
        g.vertex_of.push_back(0);
        g.vertex_of.push_back(0);
    }
    return g;
}

HalfEdgeGraph theta()
{
    // three edges 0-1 between vertex 0 (halves 0,2,4) and vertex 1 (halves 1,3,5)
    HalfEdgeGraph g;
    g.vertex_count = 2;
    g.pairing = {1, 0, 3, 2, 5, 4};
    g.vertex_of = {0, 1, 0, 1, 0, 1};
    return g;
}

HalfEdgeGraph random_relabel(const HalfEdgeGraph& g, std::mt19937& rng)
{
    std::vector<int> vm(static_cast<std::size_t>(g.vertex_count)), hm(g.pairing.size());
    std::iota(vm.begin(), vm.end(), 0);
    std::iota(hm.begin(), hm.end(), 0);
    std::shuffle(vm.begin(), vm.end(), rng);
    std::shuffle(hm.begin(), hm.end(), rng);
    return detail::relabel(g, vm, hm);
}

const std::vector<HalfEdgeGraph>& chi2_graphs()
{
    static const auto graphs = enumerate_graphs(-2);
    return graphs;
}

} // namespace

TEST(Graphs, BasicInvariants)
{
    const auto r = rose(2);
    EXPECT_EQ(r.euler_characteristic(), -1);
    EXPECT_TRUE(r.connected());
    EXPECT_TRUE(r.admissible());
    EXPECT_TRUE(r.is_loop(0));
    EXPECT_EQ(automorphism_group(r).size(), 8u);
    EXPECT_EQ(automorphism_group(theta()).size(), 12u);
    EXPECT_EQ(subforests(theta()).size(), 4u);
    EXPECT_EQ(subforests(r).size(), 1u);
    EXPECT_FALSE(rose(1).admissible());
}

TEST(Graphs, AutomorphismsFormAGroup)
{
    for (const auto& g : chi2_graphs()) {
        const auto aut = automorphism_group(g);
        const std::set<GraphAutomorphism> set(aut.begin(), aut.end());
        ASSERT_EQ(set.size(), aut.size());
        for (auto& a : aut) {
            EXPECT_TRUE(set.count(a.inverse()));
            for (auto& b : aut)
                EXPECT_TRUE(set.count(a.then(b)));
        }
    }
}

TEST(Graphs, EnumerationChiMinusOne)
{
    const auto graphs = enumerate_graphs(-1);
    ASSERT_EQ(graphs.size(), 3u);
    std::multiset<std::size_t> orders;
    for (auto& g : graphs) {
        EXPECT_TRUE(g.admissible());
        EXPECT_TRUE(g.connected());
        EXPECT_EQ(g.euler_characteristic(), -1);
        orders.insert(automorphism_group(g).size());
    }
    EXPECT_EQ(orders, (std::multiset<std::size_t>{8, 8, 12}));
}

TEST(Graphs, EnumerationChiMinusTwo)
{
    const auto& graphs = chi2_graphs();
    EXPECT_EQ(graphs.size(), 21u);
    std::set<std::vector<int>> forms;
    std::size_t connected = 0;
    for (auto& g : graphs) {
        EXPECT_TRUE(g.admissible());
        EXPECT_EQ(g.euler_characteristic(), -2);
        forms.insert(canonical_form(g));
        connected += g.connected();
    }
    EXPECT_EQ(forms.size(), graphs.size());
    EXPECT_EQ(connected, 15u);

    // The disconnected classes are exactly the pairs of chi = -1 graphs.
    std::set<std::vector<int>> disconnected, pairs;
    for (auto& g : graphs)
        if (!g.connected())
            disconnected.insert(canonical_form(g));
    for (auto& g : disconnected_pairs_chi2())
        pairs.insert(canonical_form(g));
    EXPECT_EQ(disconnected, pairs);
}

TEST(Graphs, EnumerationGuard)
{
    EXPECT_THROW(static_cast<void>(enumerate_graphs(-3)), std::invalid_argument);
    EXPECT_THROW(static_cast<void>(enumerate_graphs(0)), std::invalid_argument);
}

TEST(Graphs, CanonicalFormsAgreeUnderRelabeling)
{
    std::mt19937 rng(12345);
    for (const auto& g : chi2_graphs()) {
        const auto form = canonical_form(g);
        const auto matrix_form = matrix_canonical_form(adjacency_matrix(g));
        for (int trial = 0; trial < 5; ++trial) {
            const auto h = random_relabel(g, rng);
            EXPECT_EQ(canonical_form(h), form);
            EXPECT_EQ(matrix_canonical_form(adjacency_matrix(h)), matrix_form);
            EXPECT_EQ(automorphism_group(h).size(), automorphism_group(g).size());
        }
        EXPECT_EQ(canonical_form(canonicalize(g)), form);
        EXPECT_EQ(detail::encode(canonicalize(g)), form);
    }
}

TEST(Graphs, SubforestsAreAcyclic)
{
    for (const auto& g : chi2_graphs())
        for (auto& phi : subforests(g)) {
            HalfEdgeGraph f = g;
            f.forest = phi;
            EXPECT_TRUE(f.admissible());
            // a forest on V vertices has at most V - 1 edges
            EXPECT_LT(static_cast<int>(phi.size()), g.vertex_count);
        }
}

TEST(ForestedGraphs, CensusCounts)
{
    EXPECT_EQ(forested_classes(-1).size(), 5u);
    const auto classes = forested_classes(-2);
    EXPECT_EQ(classes.size(), 79u);
    std::size_t even = 0;
    for (auto& c : classes)
        even += c.even;
    EXPECT_EQ(even, 60u);
}

// Orbit-stabiliser: the classes of (G, Phi) for fixed G weigh
// sum 1/|Aut(G, Phi)| = (#forests of G) / |Aut G|.
TEST(ForestedGraphs, OrbitStabilizer)
{
    std::map<std::vector<int>, Rational> by_graph;
    for (auto& c : forested_classes(-2)) {
        HalfEdgeGraph bare = c.graph;
        bare.forest.clear();
        by_graph[canonical_form(bare)] += make_rational(1, static_cast<long>(c.aut_order));
    }
    ASSERT_EQ(by_graph.size(), chi2_graphs().size());
    for (const auto& g : chi2_graphs())
        EXPECT_EQ(by_graph[canonical_form(g)],
                  make_rational(static_cast<long>(subforests(g).size()), static_cast<long>(automorphism_group(g).size())));
}

TEST(ForestedGraphs, EvenFlagMatchesSigns)
{
    for (auto& c : forested_classes(-2)) {
        bool all_even = true;
        for (auto& a : automorphism_group(c.graph))
            all_even = all_even && forest_edge_sign(c.graph, a) == 1;
        EXPECT_EQ(c.even, all_even);
        // Burnside-style cancellation: odd classes contribute zero.
        if (!c.even) {
            EXPECT_EQ(c.even_weight_sum, 0);
        }
    }
}

TEST(Oracle, AgreesWithPipeline)
{
    const auto forest = forest_series(4);
    const auto forest_odd = forest_series(4, Orientation::odd);
    for (std::int64_t n = 1; n <= 2; ++n) {
        EXPECT_EQ(e_hat_oracle(n), e_hat(n, forest));
        EXPECT_EQ(e_hat_odd_oracle(n), e_hat_odd(n, forest_odd));
        EXPECT_EQ(Rational(even_class_count(n, false)), e_hat_oracle(n));
    }
    EXPECT_EQ(e_out_oracle(1), 1);
    EXPECT_EQ(e_out_oracle(2), 1);
    EXPECT_EQ(even_class_count(1, true), 1);
    EXPECT_EQ(even_class_count(2, true), 1);
}

TEST(Oracle, CensusJsonShape)
{
    const auto rows = census_json(-1);
    ASSERT_EQ(rows.size(), 5u);
    for (auto& r : rows) {
        EXPECT_EQ(r["chi"], -1);
        EXPECT_TRUE(r.contains("vertexDegrees"));
        EXPECT_TRUE(r["evenFlag"].get<bool>());
    }
}
