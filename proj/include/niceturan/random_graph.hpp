#ifndef NICETURAN_RANDOM_GRAPH_HPP
#define NICETURAN_RANDOM_GRAPH_HPP

#include "niceturan/graph.hpp"

#include <random>

namespace niceturan
{
    using Rng = std::mt19937_64;

    // Uniform in [0, 1) from the top 53 bits, identical on every platform.
    auto unit_draw(Rng & rng) -> double;

    // G(n, p): each pair independently with probability p.
    auto random_graph(int n, double p, Rng & rng) -> Graph;

    // n uniform in [min_n, max_n], p uniform in [0.15, 0.85].
    auto random_graph_between(int min_n, int max_n, Rng & rng) -> Graph;

    auto random_permutation(int n, Rng & rng) -> std::vector<int>;
}

#endif
