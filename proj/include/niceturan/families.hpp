#ifndef NICETURAN_FAMILIES_HPP
#define NICETURAN_FAMILIES_HPP

#include "niceturan/graph.hpp"

#include <vector>

namespace niceturan
{
    auto empty_graph(int n) -> Graph;
    auto complete_graph(int n) -> Graph;
    auto path_graph(int k) -> Graph;   // k vertices, 0-1-...-(k-1)
    auto cycle_graph(int k) -> Graph;  // k >= 3
    auto star_graph(int leaves) -> Graph;

    // Parts are laid out consecutively in the given order.
    auto complete_multipartite(const std::vector<int> & parts) -> Graph;

    // Balanced complete k-partite graph; larger parts first. Needs 1 <= k <= n.
    auto turan_graph(int n, int k) -> Graph;
    auto turan_profile(int n, int k) -> std::vector<int>;

    // Spine 0-1, pages 2..t+1 adjacent to both spine vertices.
    auto book_graph(int t) -> Graph;

    /// Terminals 0 and 1 joined by p internally disjoint paths with len edges
    /// each. Needs p >= 2, len >= 2 (len = 1 would make parallel edges).
    auto theta_graph(int p, int len) -> Graph;
}

#endif
