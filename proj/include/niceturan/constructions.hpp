#ifndef NICETURAN_CONSTRUCTIONS_HPP
#define NICETURAN_CONSTRUCTIONS_HPP

#include "niceturan/graph.hpp"
#include "niceturan/pattern.hpp"

#include <optional>
#include <string>
#include <vector>

namespace niceturan
{
    /// A constructed graph together with the vertex sets it promises are nice.
    struct ConstructionResult
    {
        Graph graph;
        std::vector<VertexSet> designated_sets;
        std::string claim;
        std::string note;
    };

    /// Path v_1..v_k where every position except 2 and k-1 becomes a class of
    /// m + 1 vertices (the original plus m clones); consecutive classes are
    /// completely joined. Vertices 0..k-1 are the original path, clones follow
    /// position by position. Designated sets use one clone per blown class,
    /// m^(k-2) in total. Needs k >= 4, m >= 1, k + (k-2)m <= 64.
    auto path_blowup(int k, int m) -> ConstructionResult;

    /// Replaces each vertex v of side by adjacent twins v_1 (keeps index v) and
    /// v_2 (appended), each joined to the old neighbours of v. Designated sets
    /// are the triangles {u, v_1, v_2}, one per edge of g. side must be one
    /// class of a bipartition of g.
    auto double_one_side(const Graph & g, VertexSet side) -> ConstructionResult;

    struct CertificationReport
    {
        bool passed = true;
        std::size_t checked = 0;
        std::optional<VertexSet> failing_set;
        std::optional<VertexSet> witness;  // aligning F-set for failing_set, if any
        std::string reason;
        std::string claim;
        std::string note;
    };

    // Checks that every designated set carries a copy of h and is nice with respect to f.
    auto certify(const ConstructionResult & result, const Pattern & h, const Pattern & f) -> CertificationReport;
}

#endif
