#ifndef NICETURAN_COPIES_HPP
#define NICETURAN_COPIES_HPP

#include "niceturan/graph.hpp"
#include "niceturan/pattern.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace niceturan
{
    /// Vertex sets carrying at least one copy of a pattern, each with the
    /// number of distinct copies (subgraphs) on it. Sorted by set.
    class CopyFamily
    {
    public:
        using Entry = std::pair<VertexSet, Count>;

        CopyFamily() = default;
        explicit CopyFamily(std::vector<Entry> entries) : entries_(std::move(entries)) {}

        auto entries() const -> const std::vector<Entry> & { return entries_; }
        auto size() const -> std::size_t { return entries_.size(); }
        auto empty() const -> bool { return entries_.empty(); }
        auto total() const -> Count;
        auto find(VertexSet s) const -> std::optional<Count>;

        auto begin() const { return entries_.begin(); }
        auto end() const { return entries_.end(); }

    private:
        std::vector<Entry> entries_;
    };

    // Subgraphs of g isomorphic to h: injective homomorphisms / |Aut(h)|.
    auto count_copies(const Pattern & h, const Graph & g) -> Count;

    auto contains_copy(const Pattern & h, const Graph & g) -> bool;

    auto enumerate_copy_sets(const Pattern & h, const Graph & g) -> CopyFamily;

    // Vertex sets S with g[S] isomorphic to h.
    auto count_induced(const Pattern & h, const Graph & g) -> Count;

    enum class Containment
    {
        superset,
        subset
    };

    /// Vertex set of some copy of f whose vertex set contains s (superset)
    /// or lies inside s (subset).
    auto find_copy_with_constraint(const Pattern & f, const Graph & g, VertexSet s, Containment mode)
        -> std::optional<VertexSet>;
}

#endif
