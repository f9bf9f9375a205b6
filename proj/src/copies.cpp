#include "niceturan/copies.hpp"
#include "niceturan/embedding.hpp"
#include "niceturan/errors.hpp"

#include <algorithm>
#include <unordered_map>

namespace niceturan
{
    auto CopyFamily::total() const -> Count
    {
        Count sum = 0;
        for (const auto & [set, count] : entries_)
            sum = checked_add(sum, count);
        return sum;
    }

    auto CopyFamily::find(VertexSet s) const -> std::optional<Count>
    {
        auto it = std::lower_bound(entries_.begin(), entries_.end(), s,
                                   [](const Entry & e, VertexSet key) { return e.first < key; });
        if (it != entries_.end() && it->first == s)
            return it->second;
        return std::nullopt;
    }

    auto count_copies(const Pattern & h, const Graph & g) -> Count
    {
        if (h.order() > g.order())
            return 0;
        auto embeddings = count_embeddings(h.plan(), g);
        if (embeddings % h.aut_count() != 0)
            throw InternalError("embedding count not divisible by automorphism count");
        return embeddings / h.aut_count();
    }

    auto contains_copy(const Pattern & h, const Graph & g) -> bool
    {
        if (h.order() > g.order())
            return false;
        return ! for_each_embedding(h.plan(), g, {}, [](const Image &, std::uint64_t) { return false; });
    }

    auto enumerate_copy_sets(const Pattern & h, const Graph & g) -> CopyFamily
    {
        if (h.order() > g.order())
            return {};
        std::unordered_map<std::uint64_t, Count> per_set;
        for_each_embedding(h.plan(), g, {}, [&](const Image &, std::uint64_t set) {
            ++per_set[set];
            return true;
        });

        std::vector<CopyFamily::Entry> entries;
        entries.reserve(per_set.size());
        for (auto [set, embeddings] : per_set) {
            if (embeddings % h.aut_count() != 0)
                throw InternalError("per-set embedding count not divisible by automorphism count");
            entries.emplace_back(VertexSet{set}, embeddings / h.aut_count());
        }
        std::sort(entries.begin(), entries.end());
        return CopyFamily{std::move(entries)};
    }

    auto count_induced(const Pattern & h, const Graph & g) -> Count
    {
        Count total = 0;
        for (const auto & [set, copies] : enumerate_copy_sets(h, g))
            if (g.induced_edge_count(set) == h.edge_count())
                ++total;
        return total;
    }

    auto find_copy_with_constraint(const Pattern & f, const Graph & g, VertexSet s, Containment mode)
        -> std::optional<VertexSet>
    {
        std::optional<VertexSet> found;
        auto stop = [&](const Image &, std::uint64_t set) {
            found = VertexSet{set};
            return false;
        };

        if (mode == Containment::subset) {
            if (f.order() > s.size())
                return std::nullopt;
            for_each_embedding(f.plan(), g, {.allowed = s.bits()}, stop);
            return found;
        }

        if (f.order() < s.size() || f.order() > g.order())
            return std::nullopt;
        if (s.empty()) {
            for_each_embedding(f.plan(), g, {}, stop);
            return found;
        }
        // Some pattern vertex lands on the lowest vertex of s; trying one root
        // per automorphism orbit covers every copy.
        std::uint64_t anchor = bit(s.lowest());
        for (int root : f.orbit_representatives()) {
            EmbeddingConstraint c{.required = s.bits(), .first_allowed = anchor};
            if (! for_each_embedding(f.anchored_plan(root), g, c, stop))
                return found;
        }
        return std::nullopt;
    }
}
