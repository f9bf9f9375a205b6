#ifndef NICETURAN_EMBEDDING_HPP
#define NICETURAN_EMBEDDING_HPP

#include "niceturan/errors.hpp"
#include "niceturan/graph.hpp"
#include "niceturan/pattern.hpp"

#include <array>
#include <bit>

namespace niceturan
{
    /// Restrictions on the image of an injective homomorphism.
    struct EmbeddingConstraint
    {
        std::uint64_t allowed = ~std::uint64_t{0};     // image must lie inside
        std::uint64_t required = 0;                    // image must contain
        std::uint64_t first_allowed = ~std::uint64_t{0}; // candidates at position 0
    };

    // image[i] is the host vertex assigned to plan.order[i].
    using Image = std::array<int, max_vertices>;

    namespace detail
    {
        template <typename Visit>
        struct EmbeddingSearch
        {
            const EmbeddingPlan & plan;
            const Graph & host;
            EmbeddingConstraint constraint;
            Visit & visit;
            int size;
            std::array<std::uint64_t, max_vertices + 1> degree_at_least{};
            Image image{};
            std::uint64_t used = 0;

            EmbeddingSearch(const EmbeddingPlan & p, const Graph & h, EmbeddingConstraint c, Visit & v) :
                plan(p), host(h), constraint(c), visit(v), size(static_cast<int>(p.order.size()))
            {
                auto allowed = constraint.allowed & host.all_vertices();
                constraint.allowed = allowed;
                for (auto b = allowed; b; b &= b - 1) {
                    int w = std::countr_zero(b);
                    int d = std::popcount(host.neighbours(w) & allowed);
                    for (int k = 0; k <= d; ++k)
                        degree_at_least[k] |= bit(w);
                }
            }

            auto candidates(int depth) const -> std::uint64_t
            {
                std::uint64_t c = constraint.allowed & ~used & degree_at_least[plan.degree[depth]];
                if (depth == 0)
                    c &= constraint.first_allowed;
                for (int j : plan.back[depth])
                    c &= host.neighbours(image[j]);
                return c;
            }

            // Returns false when the visitor asked to stop.
            auto run(int depth) -> bool
            {
                if (depth == size)
                    return visit(image, used);
                auto missing = constraint.required & ~used;
                if (std::popcount(missing) > size - depth)
                    return true;
                auto c = candidates(depth);
                if (std::popcount(missing) == size - depth)
                    c &= missing;
                for (; c; c &= c - 1) {
                    int w = std::countr_zero(c);
                    image[depth] = w;
                    used |= bit(w);
                    bool go_on = run(depth + 1);
                    used &= ~bit(w);
                    if (! go_on)
                        return false;
                }
                return true;
            }

            auto count(int depth) -> Count
            {
                auto missing = constraint.required & ~used;
                if (std::popcount(missing) > size - depth)
                    return 0;
                auto c = candidates(depth);
                if (std::popcount(missing) == size - depth)
                    c &= missing;
                if (depth == size - 1)
                    return static_cast<Count>(std::popcount(c));
                Count total = 0;
                for (; c; c &= c - 1) {
                    int w = std::countr_zero(c);
                    image[depth] = w;
                    used |= bit(w);
                    total = checked_add(total, count(depth + 1));
                    used &= ~bit(w);
                }
                return total;
            }
        };
    }

    /// Calls visit(image, image_set) for every injective homomorphism from the
    /// plan's pattern into host satisfying the constraint. The visitor returns
    /// true to continue. Returns false if the visitor stopped the search.
    template <typename Visit>
    auto for_each_embedding(const EmbeddingPlan & plan, const Graph & host, EmbeddingConstraint constraint,
                            Visit && visit) -> bool
    {
        if (plan.order.empty())
            return visit(Image{}, std::uint64_t{0});
        detail::EmbeddingSearch<Visit> search(plan, host, constraint, visit);
        return search.run(0);
    }

    // Number of injective homomorphisms. Throws OverflowError past 2^64 - 1.
    inline auto count_embeddings(const EmbeddingPlan & plan, const Graph & host, EmbeddingConstraint constraint = {})
        -> Count
    {
        if (plan.order.empty())
            return 1;
        auto never = [](const Image &, std::uint64_t) { return true; };
        detail::EmbeddingSearch<decltype(never)> search(plan, host, constraint, never);
        return search.count(0);
    }
}

#endif
