#include "niceturan/random_graph.hpp"

#include <numeric>

namespace niceturan
{
    auto unit_draw(Rng & rng) -> double
    {
        return static_cast<double>(rng() >> 11) * 0x1.0p-53;
    }

    auto random_graph(int n, double p, Rng & rng) -> Graph
    {
        Graph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (unit_draw(rng) < p)
                    g.add_edge(u, v);
        return g;
    }

    auto random_graph_between(int min_n, int max_n, Rng & rng) -> Graph
    {
        int n = min_n + static_cast<int>(rng() % static_cast<std::uint64_t>(max_n - min_n + 1));
        double p = 0.15 + 0.7 * unit_draw(rng);
        return random_graph(n, p, rng);
    }

    auto random_permutation(int n, Rng & rng) -> std::vector<int>
    {
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        // Fisher-Yates with modulo draws; the bias is irrelevant at this size.
        for (int i = n - 1; i > 0; --i)
            std::swap(perm[i], perm[rng() % static_cast<std::uint64_t>(i + 1)]);
        return perm;
    }
}
