#include "niceturan/graph.hpp"
#include "niceturan/errors.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>

namespace niceturan
{
    auto VertexSet::members() const -> std::vector<int>
    {
        std::vector<int> result;
        for (auto b = bits_; b; b &= b - 1)
            result.push_back(std::countr_zero(b));
        return result;
    }

    auto VertexSet::to_hex() const -> std::string
    {
        char buf[20];
        std::snprintf(buf, sizeof(buf), "%llx", static_cast<unsigned long long>(bits_));
        return buf;
    }

    auto VertexSet::from_hex(const std::string & hex) -> VertexSet
    {
        std::string digits = hex;
        if (digits.starts_with("0x") || digits.starts_with("0X"))
            digits = digits.substr(2);
        if (digits.empty() || digits.size() > 16)
            throw ParseError("bad vertex set hex '" + hex + "'");
        std::uint64_t bits = 0;
        for (char c : digits) {
            int d;
            if (c >= '0' && c <= '9')
                d = c - '0';
            else if (c >= 'a' && c <= 'f')
                d = c - 'a' + 10;
            else if (c >= 'A' && c <= 'F')
                d = c - 'A' + 10;
            else
                throw ParseError("bad vertex set hex '" + hex + "'");
            bits = (bits << 4) | static_cast<std::uint64_t>(d);
        }
        return VertexSet{bits};
    }

    Graph::Graph(int n) : n_(n)
    {
        if (n < 0 || n > max_vertices)
            throw std::invalid_argument("graph order must be in [0, 64], got " + std::to_string(n));
    }

    auto Graph::from_edges(int n, const std::vector<std::pair<int, int>> & edges) -> Graph
    {
        Graph g(n);
        for (auto [u, v] : edges)
            g.add_edge(u, v);
        return g;
    }

    auto Graph::from_adjacency(const std::vector<std::uint64_t> & adjacency) -> Graph
    {
        Graph g(static_cast<int>(adjacency.size()));
        auto all = g.all_vertices();
        for (int v = 0; v < g.n_; ++v) {
            auto a = adjacency[v];
            if (a & ~all)
                throw std::invalid_argument("adjacency uses bits beyond the vertex count");
            if ((a >> v) & 1U)
                throw std::invalid_argument("adjacency has a loop at vertex " + std::to_string(v));
            g.adj_[v] = a;
        }
        for (int v = 0; v < g.n_; ++v)
            for (auto b = g.adj_[v]; b; b &= b - 1)
                if (! g.adjacent(std::countr_zero(b), v))
                    throw std::invalid_argument("adjacency is not symmetric");
        return g;
    }

    auto Graph::edge_count() const -> int
    {
        int twice = 0;
        for (int v = 0; v < n_; ++v)
            twice += std::popcount(adj_[v]);
        return twice / 2;
    }

    auto Graph::edges() const -> std::vector<std::pair<int, int>>
    {
        std::vector<std::pair<int, int>> result;
        for (int u = 0; u < n_; ++u)
            for (auto b = adj_[u] & ~low_bits(u + 1); b; b &= b - 1)
                result.emplace_back(u, std::countr_zero(b));
        return result;
    }

    void Graph::add_edge(int u, int v)
    {
        if (u < 0 || v < 0 || u >= n_ || v >= n_)
            throw std::out_of_range("edge endpoint out of range");
        if (u == v)
            throw std::invalid_argument("loops are not allowed");
        adj_[u] |= bit(v);
        adj_[v] |= bit(u);
    }

    void Graph::remove_edge(int u, int v)
    {
        adj_[u] &= ~bit(v);
        adj_[v] &= ~bit(u);
    }

    void Graph::set_neighbours(int v, std::uint64_t neighbours)
    {
        neighbours &= all_vertices() & ~bit(v);
        for (auto b = adj_[v]; b; b &= b - 1)
            adj_[std::countr_zero(b)] &= ~bit(v);
        adj_[v] = neighbours;
        for (auto b = neighbours; b; b &= b - 1)
            adj_[std::countr_zero(b)] |= bit(v);
    }

    auto Graph::add_vertex() -> int
    {
        if (n_ == max_vertices)
            throw std::length_error("graph already has 64 vertices");
        adj_[n_] = 0;
        return n_++;
    }

    auto Graph::complement() const -> Graph
    {
        Graph g(n_);
        for (int v = 0; v < n_; ++v)
            g.adj_[v] = ~adj_[v] & all_vertices() & ~bit(v);
        return g;
    }

    auto Graph::induced(VertexSet s) const -> Graph
    {
        auto members = s.members();
        return relabeled(members);
    }

    auto Graph::induced_edge_count(VertexSet s) const -> int
    {
        int twice = 0;
        for (auto b = s.bits(); b; b &= b - 1)
            twice += std::popcount(adj_[std::countr_zero(b)] & s.bits());
        return twice / 2;
    }

    auto Graph::relabeled(const std::vector<int> & perm) const -> Graph
    {
        Graph g(static_cast<int>(perm.size()));
        for (int i = 0; i < g.n_; ++i)
            for (int j = i + 1; j < g.n_; ++j)
                if (adjacent(perm[i], perm[j]))
                    g.add_edge(i, j);
        return g;
    }

    auto Graph::disjoint_union(const Graph & other) const -> Graph
    {
        Graph g(n_ + other.n_);
        for (int v = 0; v < n_; ++v)
            g.adj_[v] = adj_[v];
        for (int v = 0; v < other.n_; ++v)
            g.adj_[n_ + v] = other.adj_[v] << n_;
        return g;
    }

    auto Graph::operator==(const Graph & other) const -> bool
    {
        return n_ == other.n_ && std::equal(adj_.begin(), adj_.begin() + n_, other.adj_.begin());
    }

    auto is_complete_multipartite(const Graph & g) -> bool
    {
        auto all = g.all_vertices();
        for (int v = 0; v < g.order(); ++v)
            for (auto b = all & ~g.neighbours(v) & ~bit(v); b; b &= b - 1)
                if (g.neighbours(std::countr_zero(b)) != g.neighbours(v))
                    return false;
        return true;
    }

    auto multipartite_parts(const Graph & g) -> std::vector<int>
    {
        if (! is_complete_multipartite(g))
            throw std::invalid_argument("graph is not complete multipartite");
        std::vector<int> parts;
        auto remaining = g.all_vertices();
        while (remaining) {
            int v = std::countr_zero(remaining);
            auto part = g.all_vertices() & ~g.neighbours(v);
            parts.push_back(std::popcount(part));
            remaining &= ~part;
        }
        std::sort(parts.begin(), parts.end(), std::greater<>());
        return parts;
    }

    auto bipartition(const Graph & g) -> std::optional<std::vector<int>>
    {
        std::vector<int> colour(g.order(), -1);
        for (int s = 0; s < g.order(); ++s) {
            if (colour[s] != -1)
                continue;
            colour[s] = 0;
            std::vector<int> stack{s};
            while (! stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                for (auto b = g.neighbours(v); b; b &= b - 1) {
                    int w = std::countr_zero(b);
                    if (colour[w] == -1) {
                        colour[w] = 1 - colour[v];
                        stack.push_back(w);
                    }
                    else if (colour[w] == colour[v])
                        return std::nullopt;
                }
            }
        }
        return colour;
    }
}
