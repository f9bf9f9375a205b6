#ifndef NICETURAN_GRAPH_HPP
#define NICETURAN_GRAPH_HPP

#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace niceturan
{
    inline constexpr int max_vertices = 64;

    using Count = std::uint64_t;

    // Mask with the low n bits set, valid for 0 <= n <= 64.
    constexpr auto low_bits(int n) -> std::uint64_t
    {
        return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    }

    constexpr auto bit(int v) -> std::uint64_t
    {
        return std::uint64_t{1} << v;
    }

    /// A set of vertices of one graph, stored as a bitmask.
    class VertexSet
    {
    public:
        constexpr VertexSet() = default;
        constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

        static auto of(std::initializer_list<int> vertices) -> VertexSet
        {
            std::uint64_t b = 0;
            for (int v : vertices)
                b |= bit(v);
            return VertexSet{b};
        }

        constexpr auto bits() const -> std::uint64_t { return bits_; }
        constexpr auto size() const -> int { return std::popcount(bits_); }
        constexpr auto empty() const -> bool { return bits_ == 0; }
        constexpr auto contains(int v) const -> bool { return (bits_ >> v) & 1U; }
        constexpr auto subset_of(VertexSet other) const -> bool { return (bits_ & ~other.bits_) == 0; }
        constexpr auto lowest() const -> int { return std::countr_zero(bits_); }

        auto members() const -> std::vector<int>;

        // Lower-case hex without prefix, e.g. "f" for {0,1,2,3}.
        auto to_hex() const -> std::string;
        static auto from_hex(const std::string & hex) -> VertexSet;

        constexpr auto operator<=>(const VertexSet &) const = default;

    private:
        std::uint64_t bits_ = 0;
    };

    /// Small simple undirected graph on at most 64 vertices. Neighbourhoods are
    /// bitmasks, so adjacency tests and neighbourhood intersections are single
    /// word operations.
    class Graph
    {
    public:
        Graph() = default;
        explicit Graph(int n);

        static auto from_edges(int n, const std::vector<std::pair<int, int>> & edges) -> Graph;

        // Rebuilds a graph from per-vertex masks. Throws std::invalid_argument
        // when the masks are not symmetric, have loops, or use bits >= n.
        static auto from_adjacency(const std::vector<std::uint64_t> & adjacency) -> Graph;

        auto order() const -> int { return n_; }
        auto all_vertices() const -> std::uint64_t { return low_bits(n_); }
        auto neighbours(int v) const -> std::uint64_t { return adj_[v]; }
        auto adjacent(int u, int v) const -> bool { return (adj_[u] >> v) & 1U; }
        auto degree(int v) const -> int { return std::popcount(adj_[v]); }
        auto edge_count() const -> int;
        auto edges() const -> std::vector<std::pair<int, int>>;

        void add_edge(int u, int v);
        void remove_edge(int u, int v);

        // Replaces the neighbourhood of v; keeps symmetry.
        void set_neighbours(int v, std::uint64_t neighbours);

        // Adds an isolated vertex and returns its index.
        auto add_vertex() -> int;

        auto complement() const -> Graph;

        // Graph on the vertices of s, renumbered 0..|s|-1 in increasing order.
        auto induced(VertexSet s) const -> Graph;

        // Edge count of the subgraph induced on s, without building it.
        auto induced_edge_count(VertexSet s) const -> int;

        // Vertex perm[i] of this graph becomes vertex i of the result.
        auto relabeled(const std::vector<int> & perm) const -> Graph;

        // Disjoint union, other's vertices shifted by order().
        auto disjoint_union(const Graph & other) const -> Graph;

        auto operator==(const Graph & other) const -> bool;

    private:
        int n_ = 0;
        std::array<std::uint64_t, max_vertices> adj_{};
    };

    // Non-adjacency is an equivalence relation.
    auto is_complete_multipartite(const Graph & g) -> bool;

    // Part sizes in non-increasing order; the graph must be complete multipartite.
    auto multipartite_parts(const Graph & g) -> std::vector<int>;

    // Two-colouring if one exists. colour[v] is 0 or 1.
    auto bipartition(const Graph & g) -> std::optional<std::vector<int>>;
}

#endif
