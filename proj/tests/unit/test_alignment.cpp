#include "oracles.hpp"

#include "niceturan/alignment.hpp"
#include "niceturan/copies.hpp"
#include "niceturan/families.hpp"
#include "niceturan/graph6.hpp"
#include "niceturan/random_graph.hpp"

#include <gtest/gtest.h>

using namespace niceturan;

TEST(IsNice, Examples)
{
    Pattern c4(cycle_graph(4)), k3(complete_graph(3));
    auto in_k4 = is_nice(VertexSet::of({0, 1, 2}), c4, complete_graph(4));
    EXPECT_FALSE(in_k4.nice);
    ASSERT_TRUE(in_k4.witness);
    EXPECT_EQ(*in_k4.witness, VertexSet{0xf});

    EXPECT_TRUE(is_nice(VertexSet::of({0, 1, 2}), c4, complete_graph(3).disjoint_union(empty_graph(1))).nice);
    EXPECT_FALSE(is_nice(VertexSet::of({0, 1, 2}), k3, complete_graph(3)).nice);
}

TEST(NiceCount, Examples)
{
    Pattern k2(complete_graph(2)), k3(complete_graph(3)), k4(complete_graph(4)), c4(cycle_graph(4));
    EXPECT_EQ(nice_count(k3, c4, complete_graph(4)).nice_copies, 0U);
    auto t36 = nice_count(k3, k4, turan_graph(6, 3));
    EXPECT_EQ(t36.total_copies, 8U);
    EXPECT_EQ(t36.nice_copies, 8U);
    EXPECT_EQ(nice_count(k2, k3, cycle_graph(5)).nice_copies, 5U);
    auto k4_report = nice_count(k3, c4, complete_graph(4));
    EXPECT_EQ(k4_report.total_copies, 4U);
    EXPECT_EQ(k4_report.aligned_sets.size(), 4U);
}

TEST(NiceCount, MatchesOracleInBothDirections)
{
    // the first pairs exercise the subset index, the rest the anchored superset search
    std::vector<std::pair<Graph, Graph>> pairs{
        {cycle_graph(4), complete_graph(3)}, {book_graph(2), cycle_graph(4)}, {complete_graph(3), complete_graph(3)},
        {complete_graph(3), cycle_graph(4)}, {complete_graph(2), complete_graph(3)}, {star_graph(2), book_graph(2)},
        {path_graph(3), path_graph(5)},     {complete_graph(3), complete_graph(4)}};
    Rng rng(31);
    for (int i = 0; i < 120; ++i) {
        auto g = random_graph_between(3, 7, rng);
        for (const auto & [h, f] : pairs) {
            Pattern hp(h), fp(f);
            auto report = nice_count(hp, fp, g);
            ASSERT_EQ(report.nice_copies, oracle::nice(h, f, g)) << to_graph6(h) << " " << to_graph6(f) << " "
                                                                 << to_graph6(g);
            std::vector<std::uint64_t> sets;
            for (auto s : report.nice_sets)
                sets.push_back(s.bits());
            EXPECT_EQ(sets, oracle::nice_sets(h, f, g));
            EXPECT_LE(report.nice_copies, report.total_copies);
            EXPECT_EQ(report.total_copies, count_copies(hp, g));

            // nice and aligned sets partition the copy sets; witnesses really align
            EXPECT_EQ(report.nice_sets.size() + report.aligned_sets.size(), enumerate_copy_sets(hp, g).size());
            auto f_sets = oracle::copy_sets(f, g);
            for (auto [s, t] : report.aligned_sets) {
                EXPECT_TRUE(f_sets.count(t.bits()));
                EXPECT_TRUE(s.subset_of(t) || t.subset_of(s));
            }
        }
    }
}

TEST(NiceCount, Invariants)
{
    Rng rng(37);
    std::vector<Graph> shapes{complete_graph(2), complete_graph(3), path_graph(3), cycle_graph(4), book_graph(2)};
    for (int i = 0; i < 150; ++i) {
        auto g = random_graph_between(3, 8, rng);
        for (const auto & h : shapes)
            for (const auto & f : shapes) {
                Pattern hp(h), fp(f);
                auto nice = nice_count(hp, fp, g).nice_copies;
                if (! contains_copy(fp, g))
                    EXPECT_EQ(nice, count_copies(hp, g));
                if (h == f && contains_copy(hp, g))
                    EXPECT_EQ(nice, 0U);
                if (h.order() <= f.order())
                    EXPECT_GE(strongly_nice_count(hp, fp, g), nice);
            }
    }
}

TEST(StronglyNice, Examples)
{
    Pattern k3(complete_graph(3)), c4(cycle_graph(4)), p4(path_graph(4)), p6(path_graph(6));
    EXPECT_EQ(strongly_nice_count(k3, c4, complete_graph(4)), 4U);
    EXPECT_EQ(strongly_nice_count(p4, p6, path_graph(6)), 0U);
    EXPECT_EQ(strongly_nice_count(k3, Pattern(complete_graph(4)), turan_graph(6, 3)), 8U);
    EXPECT_THROW(strongly_nice_count(c4, k3, complete_graph(4)), std::invalid_argument);
}

TEST(StronglyNice, MatchesOracle)
{
    std::vector<std::pair<Graph, Graph>> pairs{
        {complete_graph(3), cycle_graph(4)}, {path_graph(3), cycle_graph(4)}, {complete_graph(2), complete_graph(3)},
        {path_graph(3), book_graph(2)},      {cycle_graph(4), complete_graph(4)}, {complete_graph(3), complete_graph(3)},
        {empty_graph(2), path_graph(3)}};
    Rng rng(41);
    for (int i = 0; i < 100; ++i) {
        auto g = random_graph_between(3, 7, rng);
        for (const auto & [h, f] : pairs)
            ASSERT_EQ(strongly_nice_count(Pattern(h), Pattern(f), g), oracle::strongly_nice(h, f, g))
                << to_graph6(h) << " " << to_graph6(f) << " " << to_graph6(g);
    }
}
