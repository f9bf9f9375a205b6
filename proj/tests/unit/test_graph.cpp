#include "niceturan/errors.hpp"
#include "niceturan/families.hpp"
#include "niceturan/graph.hpp"
#include "niceturan/graph6.hpp"
#include "niceturan/random_graph.hpp"

#include <gtest/gtest.h>

using namespace niceturan;

namespace
{
    void expect_valid(const Graph & g)
    {
        for (int v = 0; v < g.order(); ++v) {
            EXPECT_FALSE(g.adjacent(v, v));
            EXPECT_EQ(g.neighbours(v) & ~g.all_vertices(), 0U);
            for (int u = 0; u < g.order(); ++u)
                EXPECT_EQ(g.adjacent(u, v), g.adjacent(v, u));
        }
    }

    auto petersen() -> Graph
    {
        Graph g(10);
        for (int i = 0; i < 5; ++i) {
            g.add_edge(i, (i + 1) % 5);
            g.add_edge(i, i + 5);
            g.add_edge(5 + i, 5 + (i + 2) % 5);
        }
        return g;
    }
}

TEST(Graph, BasicMutation)
{
    Graph g(4);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    EXPECT_EQ(g.edge_count(), 2);
    EXPECT_EQ(g.degree(1), 2);
    g.remove_edge(0, 1);
    EXPECT_FALSE(g.adjacent(0, 1));
    EXPECT_EQ(g.edge_count(), 1);
    expect_valid(g);
}

TEST(Graph, RejectsBadInput)
{
    EXPECT_THROW(Graph(65), std::invalid_argument);
    EXPECT_THROW(Graph(-1), std::invalid_argument);
    EXPECT_THROW(Graph::from_adjacency({0b10, 0b00}), std::invalid_argument);
    EXPECT_THROW(Graph::from_adjacency({0b1}), std::invalid_argument);
    EXPECT_THROW(Graph::from_adjacency({0b100, 0b0}), std::invalid_argument);
}

TEST(Graph, SetNeighboursKeepsSymmetry)
{
    auto g = path_graph(4);
    g.set_neighbours(0, 0b1100);
    expect_valid(g);
    EXPECT_FALSE(g.adjacent(0, 1));
    EXPECT_TRUE(g.adjacent(0, 3));
    EXPECT_TRUE(g.adjacent(2, 0));
}

TEST(Graph, InducedAndComplement)
{
    auto g = cycle_graph(5);
    auto h = g.induced(VertexSet::of({0, 1, 2}));
    EXPECT_EQ(h, path_graph(3));
    EXPECT_EQ(g.induced_edge_count(VertexSet::of({0, 1, 2})), 2);
    EXPECT_EQ(g.complement().edge_count(), 5);
    EXPECT_EQ(g.complement().complement(), g);
}

TEST(Graph, RelabelAndUnion)
{
    auto g = path_graph(3);
    auto r = g.relabeled({1, 0, 2});
    EXPECT_TRUE(r.adjacent(0, 1));
    EXPECT_TRUE(r.adjacent(0, 2));
    EXPECT_FALSE(r.adjacent(1, 2));
    auto u = complete_graph(3).disjoint_union(empty_graph(1));
    EXPECT_EQ(u.order(), 4);
    EXPECT_EQ(u.edge_count(), 3);
    EXPECT_EQ(u.degree(3), 0);
}

TEST(Graph, MultipartiteStructure)
{
    EXPECT_TRUE(is_complete_multipartite(complete_multipartite({3, 1, 2})));
    EXPECT_EQ(multipartite_parts(complete_multipartite({1, 3, 2})), (std::vector<int>{3, 2, 1}));
    EXPECT_FALSE(is_complete_multipartite(path_graph(4)));
    EXPECT_TRUE(is_complete_multipartite(empty_graph(3)));
    EXPECT_TRUE(bipartition(cycle_graph(6)).has_value());
    EXPECT_FALSE(bipartition(cycle_graph(5)).has_value());
}

TEST(VertexSet, HexRoundTrip)
{
    EXPECT_EQ(VertexSet::of({0, 1, 2, 3}).to_hex(), "f");
    EXPECT_EQ(VertexSet{}.to_hex(), "0");
    EXPECT_EQ(VertexSet::from_hex("a5"), VertexSet{0xa5});
    EXPECT_EQ(VertexSet::from_hex(VertexSet{~0ULL}.to_hex()), VertexSet{~0ULL});
    EXPECT_THROW(VertexSet::from_hex("xyz"), ParseError);
}

TEST(Graph6, Fixtures)
{
    EXPECT_EQ(to_graph6(complete_graph(4)), "C~");
    EXPECT_EQ(to_graph6(cycle_graph(5)), "Dhc");
    EXPECT_EQ(to_graph6(petersen()), "IheA@GUAo");
    EXPECT_EQ(to_graph6(path_graph(7)), "FhCGG");
    EXPECT_EQ(to_graph6(Graph(0)), "?");
    EXPECT_EQ(to_graph6(Graph(1)), "@");
    EXPECT_EQ(from_graph6("IheA@GUAo"), petersen());
    EXPECT_EQ(from_graph6(">>graph6<<C~\n"), complete_graph(4));
}

TEST(Graph6, LongForm)
{
    auto k63 = complete_graph(63);
    auto text = to_graph6(k63);
    EXPECT_EQ(text.substr(0, 4), "~??~");
    EXPECT_EQ(text.size(), 4U + (63 * 62 / 2 + 5) / 6);
    EXPECT_EQ(from_graph6(text), k63);
}

TEST(Graph6, RandomRoundTrip)
{
    Rng rng(7);
    for (int i = 0; i < 300; ++i) {
        int n = static_cast<int>(rng() % 65);
        auto g = random_graph(n, unit_draw(rng), rng);
        EXPECT_EQ(from_graph6(to_graph6(g)), g);
    }
}

TEST(Graph6, RejectsMalformed)
{
    EXPECT_THROW(from_graph6(""), ParseError);
    EXPECT_THROW(from_graph6("C"), ParseError);      // body missing
    EXPECT_THROW(from_graph6("C~~"), ParseError);    // body too long
    EXPECT_THROW(from_graph6("C\x7f"), ParseError);  // byte out of range
    EXPECT_THROW(from_graph6("B@"), ParseError);     // non-zero padding
    EXPECT_THROW(from_graph6("~?@@"), ParseError);   // 65 vertices
}
