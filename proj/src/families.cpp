#include "niceturan/families.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace niceturan
{
    auto empty_graph(int n) -> Graph
    {
        return Graph(n);
    }

    auto complete_graph(int n) -> Graph
    {
        Graph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                g.add_edge(u, v);
        return g;
    }

    auto path_graph(int k) -> Graph
    {
        if (k < 1)
            throw std::invalid_argument("path needs at least one vertex");
        Graph g(k);
        for (int v = 0; v + 1 < k; ++v)
            g.add_edge(v, v + 1);
        return g;
    }

    auto cycle_graph(int k) -> Graph
    {
        if (k < 3)
            throw std::invalid_argument("cycle needs at least three vertices");
        auto g = path_graph(k);
        g.add_edge(k - 1, 0);
        return g;
    }

    auto star_graph(int leaves) -> Graph
    {
        return complete_multipartite({1, leaves});
    }

    auto complete_multipartite(const std::vector<int> & parts) -> Graph
    {
        int n = 0;
        for (int p : parts) {
            if (p < 1)
                throw std::invalid_argument("part sizes must be positive");
            n += p;
        }
        if (n > max_vertices)
            throw std::invalid_argument("complete multipartite graph exceeds 64 vertices");
        Graph g(n);
        std::vector<int> part_of;
        for (std::size_t i = 0; i < parts.size(); ++i)
            part_of.insert(part_of.end(), parts[i], static_cast<int>(i));
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (part_of[u] != part_of[v])
                    g.add_edge(u, v);
        return g;
    }

    auto turan_profile(int n, int k) -> std::vector<int>
    {
        if (k < 1 || n < 0)
            throw std::invalid_argument("turan profile needs k >= 1 and n >= 0");
        int r = std::min(n, k);
        std::vector<int> parts;
        for (int i = 0; i < r; ++i)
            parts.push_back(n / r + (i < n % r ? 1 : 0));
        return parts;
    }

    auto turan_graph(int n, int k) -> Graph
    {
        if (k < 1 || k > n)
            throw std::invalid_argument("turan graph needs 1 <= k <= n");
        return complete_multipartite(turan_profile(n, k));
    }

    auto book_graph(int t) -> Graph
    {
        if (t < 1)
            throw std::invalid_argument("book needs at least one page");
        Graph g(t + 2);
        g.add_edge(0, 1);
        for (int p = 2; p < t + 2; ++p) {
            g.add_edge(0, p);
            g.add_edge(1, p);
        }
        return g;
    }

    auto theta_graph(int p, int len) -> Graph
    {
        if (p < 2 || len < 2)
            throw std::invalid_argument("theta graph needs p >= 2 paths of length >= 2");
        int n = 2 + p * (len - 1);
        if (n > max_vertices)
            throw std::invalid_argument("theta graph exceeds 64 vertices");
        Graph g(n);
        int next = 2;
        for (int path = 0; path < p; ++path) {
            int previous = 0;
            for (int i = 0; i < len - 1; ++i) {
                g.add_edge(previous, next);
                previous = next++;
            }
            g.add_edge(previous, 1);
        }
        return g;
    }
}
