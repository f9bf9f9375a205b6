#ifndef NICETURAN_CANONICAL_HPP
#define NICETURAN_CANONICAL_HPP

#include "niceturan/graph.hpp"

#include <string>
#include <vector>

namespace niceturan
{
    struct CanonicalLabeling
    {
        // order[i] is the vertex of the input placed at canonical position i.
        std::vector<int> order;
        // Byte string equal for two inputs iff they are isomorphic (respecting
        // the initial colouring, when one was given).
        std::string certificate;
    };

    /// Canonical labelling by equitable refinement and exhaustive
    /// individualisation. Cells whose members are pairwise twins are
    /// individualised on one vertex only. An optional colouring fixes the
    /// initial ordered partition: vertices of smaller colour come first.
    auto canonical_labeling(const Graph & g, const std::vector<int> & colours = {}) -> CanonicalLabeling;

    // graph6 string of the canonically relabelled graph. Equal iff isomorphic.
    auto canonical_form(const Graph & g) -> std::string;

    auto canonical_graph(const Graph & g) -> Graph;

    auto are_isomorphic(const Graph & a, const Graph & b) -> bool;

    // True when some automorphism of g maps u to v.
    auto same_orbit(const Graph & g, int u, int v) -> bool;

    /// Order of the automorphism group. Permutations inside twin classes are
    /// factored out, so graphs such as K_n, empty graphs and stars are cheap.
    auto automorphism_count(const Graph & g) -> Count;
}

#endif
