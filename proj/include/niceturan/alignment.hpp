#ifndef NICETURAN_ALIGNMENT_HPP
#define NICETURAN_ALIGNMENT_HPP

#include "niceturan/copies.hpp"
#include "niceturan/graph.hpp"
#include "niceturan/pattern.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace niceturan
{
    /// Two subgraphs align when one vertex set contains the other. A copy of H
    /// is nice when it aligns with no copy of F. Niceness depends only on the
    /// vertex set, so all copies on one set share it.
    struct NicenessCheck
    {
        bool nice = true;
        std::optional<VertexSet> witness; // vertex set of an aligning copy of F
    };

    auto is_nice(VertexSet s, const Pattern & f, const Graph & g) -> NicenessCheck;

    struct NicenessReport
    {
        Count total_copies = 0;
        Count nice_copies = 0;
        std::vector<VertexSet> nice_sets;
        std::vector<std::pair<VertexSet, VertexSet>> aligned_sets; // (H-set, witness F-set)
    };

    /// Counts copies of h aligning with no copy of f. When |V(f)| <= |V(h)|
    /// the copies of f are enumerated once and looked up inside each h-set;
    /// otherwise each h-set runs an anchored superset search.
    auto nice_count(const Pattern & h, const Pattern & f, const Graph & g) -> NicenessReport;

    // Same classification as nice_count, reusing an already enumerated family of h.
    auto classify_family(const CopyFamily & h_family, int h_order, const Pattern & f, const Graph & g)
        -> NicenessReport;

    /// Copies H* of h such that no copy F* of f has E(H*) inside E(F*).
    /// Counted per copy. Requires |V(h)| <= |V(f)|, throws std::invalid_argument otherwise.
    auto strongly_nice_count(const Pattern & h, const Pattern & f, const Graph & g) -> Count;
}

#endif
