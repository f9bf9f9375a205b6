#include "oracles.hpp"

#include "niceturan/canonical.hpp"
#include "niceturan/copies.hpp"
#include "niceturan/errors.hpp"
#include "niceturan/families.hpp"
#include "niceturan/graph6.hpp"
#include "niceturan/search.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <atomic>
#include <mutex>
#include <set>

using namespace niceturan;

TEST(Generation, KnownCounts)
{
    const std::vector<std::size_t> expected{1, 1, 2, 4, 11, 34, 156, 1044, 12346};
    for (int n = 0; n <= 8; ++n) {
        std::set<std::string> forms;
        std::size_t visited = 0;
        for_each_nonisomorphic(n, [&](const Graph & g, int) {
            ++visited;
            forms.insert(canonical_form(g));
        });
        EXPECT_EQ(visited, expected[n]) << n;
        EXPECT_EQ(forms.size(), expected[n]) << n;
    }
}

TEST(Generation, MatchesLabelledDedupe)
{
    for (int n = 1; n <= 5; ++n) {
        std::set<std::string> labelled;
        for_each_labeled(n, [&](const Graph & g) { labelled.insert(canonical_form(g)); });
        std::set<std::string> generated;
        for (const auto & g : nonisomorphic_graphs(n))
            generated.insert(canonical_form(g));
        EXPECT_EQ(generated, labelled);
    }
}

TEST(Generation, ParallelVisitsSameClasses)
{
    GenerateOptions options;
    options.jobs = 4;
    std::mutex m;
    std::set<std::string> forms;
    std::atomic<int> count{0};
    for_each_nonisomorphic(
        7,
        [&](const Graph & g, int worker) {
            EXPECT_GE(worker, 0);
            EXPECT_LT(worker, 4);
            ++count;
            std::lock_guard lock(m);
            forms.insert(canonical_form(g));
        },
        options);
    EXPECT_EQ(count.load(), 1044);
    EXPECT_EQ(forms.size(), 1044U);
}

TEST(Generation, RejectPrunesHereditarily)
{
    Pattern k3(complete_graph(3));
    GenerateOptions options;
    options.reject = [&](const Graph & g) { return contains_copy(k3, g); };
    // triangle-free graphs on 6 vertices: 38 classes
    EXPECT_EQ(nonisomorphic_graphs(6, options).size(), 38U);
}

TEST(Generation, Guards)
{
    EXPECT_THROW(for_each_nonisomorphic(11, [](const Graph &, int) {}), GuardError);
    EXPECT_THROW(for_each_labeled(7, [](const Graph &) {}), GuardError);
    EXPECT_THROW(exhaustive_max(7, Pattern(complete_graph(2)), Pattern(complete_graph(3)), SearchMode::nice,
                                GeneratorKind::labeled),
                 GuardError);
}

TEST(ExhaustiveMax, Examples)
{
    Pattern k2(complete_graph(2)), k3(complete_graph(3)), c4(cycle_graph(4));
    auto a = exhaustive_max(4, k3, c4, SearchMode::nice);
    EXPECT_EQ(a.value, 1U);
    // the triangle with an isolated vertex, and the paw
    auto paw = complete_graph(3).disjoint_union(empty_graph(1));
    paw.add_edge(0, 3);
    std::vector<std::string> expected{canonical_form(complete_graph(3).disjoint_union(empty_graph(1))),
                                      canonical_form(paw)};
    std::sort(expected.begin(), expected.end());
    EXPECT_EQ(a.witnesses, expected);
    EXPECT_EQ(a.graphs_examined, 11U);

    auto b = exhaustive_max(5, k2, k3, SearchMode::nice);
    EXPECT_EQ(b.value, 6U);
    ASSERT_EQ(b.witnesses.size(), 1U);
    EXPECT_EQ(b.witnesses[0], canonical_form(complete_multipartite({2, 3})));

    EXPECT_EQ(exhaustive_max(5, k3, k2, SearchMode::classic).value, 0U);
    EXPECT_EQ(labeled_oracle_max(2, k2, k3, SearchMode::nice).value, 1U);
}

TEST(ExhaustiveMax, WitnessesReverify)
{
    Pattern h(star_graph(2)), f(complete_graph(3));
    for (auto mode : {SearchMode::nice, SearchMode::classic, SearchMode::strong}) {
        auto record = exhaustive_max(5, h, f, mode);
        std::set<std::string> distinct(record.witnesses.begin(), record.witnesses.end());
        EXPECT_EQ(distinct.size(), record.witnesses.size());
        for (const auto & w : record.witnesses) {
            auto g = from_graph6(w);
            EXPECT_EQ(canonical_form(g), w);
            EXPECT_EQ(mode_value(h, f, g, mode), record.value);
        }
    }
}

TEST(ExhaustiveMax, WitnessCapSetsFlag)
{
    SearchOptions options;
    options.witness_cap = 2;
    // every graph on 4 vertices has zero nice K_3 w.r.t. K_3
    auto record = exhaustive_max(4, Pattern(complete_graph(3)), Pattern(complete_graph(3)), SearchMode::nice,
                                 GeneratorKind::canonical, options);
    EXPECT_EQ(record.value, 0U);
    EXPECT_EQ(record.witnesses.size(), 2U);
    EXPECT_TRUE(record.witnesses_truncated);
}

TEST(ExhaustiveMax, CanonicalAgreesWithLabelledOracle)
{
    std::vector<std::pair<Graph, Graph>> battery{{complete_graph(3), cycle_graph(4)},
                                                 {star_graph(2), complete_graph(3)},
                                                 {complete_graph(2), complete_graph(3)},
                                                 {path_graph(3), path_graph(4)}};
    for (int n = 1; n <= 5; ++n)
        for (const auto & [h, f] : battery)
            for (auto mode : {SearchMode::nice, SearchMode::classic}) {
                Pattern hp(h), fp(f);
                auto a = exhaustive_max(n, hp, fp, mode);
                auto b = labeled_oracle_max(n, hp, fp, mode);
                EXPECT_EQ(a.value, b.value);
                EXPECT_EQ(a.witnesses, b.witnesses);
            }
}

TEST(ExhaustiveMax, NiceDominatesClassicAndIsMonotone)
{
    Pattern h(complete_graph(3)), f(book_graph(2));
    Count previous = 0;
    for (int n = 1; n <= 6; ++n) {
        auto nice = exhaustive_max(n, h, f, SearchMode::nice).value;
        auto classic = exhaustive_max(n, h, f, SearchMode::classic).value;
        EXPECT_GE(nice, classic);
        EXPECT_GE(nice, previous);
        previous = nice;
    }
}

TEST(ExhaustiveMax, ParallelMatchesSequential)
{
    SearchOptions options;
    options.jobs = 3;
    Pattern h(complete_graph(3)), f(cycle_graph(4));
    auto a = exhaustive_max(7, h, f, SearchMode::nice);
    auto b = exhaustive_max(7, h, f, SearchMode::nice, GeneratorKind::canonical, options);
    EXPECT_EQ(a.value, b.value);
    EXPECT_EQ(a.witnesses, b.witnesses);
    EXPECT_EQ(a.graphs_examined, b.graphs_examined);
}

TEST(ExhaustiveMax, StrongModeNeedsSmallH)
{
    EXPECT_THROW(exhaustive_max(4, Pattern(cycle_graph(4)), Pattern(complete_graph(3)), SearchMode::strong),
                 std::invalid_argument);
}

TEST(SearchMode, Names)
{
    for (auto mode : {SearchMode::nice, SearchMode::classic, SearchMode::strong})
        EXPECT_EQ(parse_search_mode(to_string(mode)), mode);
    EXPECT_EQ(parse_generator("labeled"), GeneratorKind::labeled);
    EXPECT_THROW(parse_search_mode("weak"), ParseError);
}
