#include "niceturan/alignment.hpp"
#include "niceturan/embedding.hpp"
#include "niceturan/errors.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <unordered_set>

namespace niceturan
{
    auto is_nice(VertexSet s, const Pattern & f, const Graph & g) -> NicenessCheck
    {
        if (f.order() <= s.size())
            if (auto t = find_copy_with_constraint(f, g, s, Containment::subset))
                return {false, t};
        if (f.order() >= s.size())
            if (auto t = find_copy_with_constraint(f, g, s, Containment::superset))
                return {false, t};
        return {true, std::nullopt};
    }

    namespace
    {
        // Looks up F-sets inside a given vertex set, either by scanning the
        // family or by enumerating the |V(F)|-subsets of the set.
        class SubsetIndex
        {
        public:
            SubsetIndex(const CopyFamily & family, int f_order) : f_order_(f_order)
            {
                for (const auto & [set, count] : family) {
                    sets_.push_back(set.bits());
                    lookup_.insert(set.bits());
                }
            }

            auto find_inside(std::uint64_t s) const -> std::optional<std::uint64_t>
            {
                int size = std::popcount(s);
                if (f_order_ > size || sets_.empty())
                    return std::nullopt;
                if (binomial_at_most(size, f_order_, sets_.size())) {
                    std::optional<std::uint64_t> hit;
                    for_each_subset(s, f_order_, [&](std::uint64_t t) {
                        if (lookup_.contains(t)) {
                            hit = t;
                            return false;
                        }
                        return true;
                    });
                    return hit;
                }
                for (auto t : sets_)
                    if ((t & ~s) == 0)
                        return t;
                return std::nullopt;
            }

        private:
            static auto binomial_at_most(int n, int k, std::size_t limit) -> bool
            {
                double c = 1;
                for (int i = 1; i <= k; ++i)
                    c = c * (n - k + i) / i;
                return c <= static_cast<double>(limit);
            }

            // Visits the k-element subsets of s in increasing order; stops when visit returns false.
            template <typename Visit>
            static auto for_each_subset(std::uint64_t s, int k, Visit && visit) -> bool
            {
                if (k == 0)
                    return visit(std::uint64_t{0});
                std::vector<int> members;
                for (auto b = s; b; b &= b - 1)
                    members.push_back(std::countr_zero(b));
                int n = static_cast<int>(members.size());
                std::vector<int> idx(k);
                for (int i = 0; i < k; ++i)
                    idx[i] = i;
                while (true) {
                    std::uint64_t t = 0;
                    for (int i : idx)
                        t |= bit(members[i]);
                    if (! visit(t))
                        return false;
                    int i = k - 1;
                    while (i >= 0 && idx[i] == n - k + i)
                        --i;
                    if (i < 0)
                        return true;
                    ++idx[i];
                    for (int j = i + 1; j < k; ++j)
                        idx[j] = idx[j - 1] + 1;
                }
            }

            int f_order_;
            std::vector<std::uint64_t> sets_;
            std::unordered_set<std::uint64_t> lookup_;
        };
    }

    auto classify_family(const CopyFamily & h_family, int h_order, const Pattern & f, const Graph & g)
        -> NicenessReport
    {
        NicenessReport report;
        report.total_copies = h_family.total();

        auto record = [&](VertexSet s, Count copies, std::optional<VertexSet> witness) {
            if (witness)
                report.aligned_sets.emplace_back(s, *witness);
            else {
                report.nice_sets.push_back(s);
                report.nice_copies = checked_add(report.nice_copies, copies);
            }
        };

        if (f.order() <= h_order) {
            SubsetIndex index(enumerate_copy_sets(f, g), f.order());
            for (const auto & [set, copies] : h_family) {
                auto hit = index.find_inside(set.bits());
                record(set, copies, hit ? std::optional<VertexSet>{VertexSet{*hit}} : std::nullopt);
            }
        }
        else {
            for (const auto & [set, copies] : h_family)
                record(set, copies, find_copy_with_constraint(f, g, set, Containment::superset));
        }
        return report;
    }

    auto nice_count(const Pattern & h, const Pattern & f, const Graph & g) -> NicenessReport
    {
        return classify_family(enumerate_copy_sets(h, g), h.order(), f, g);
    }

    namespace
    {
        // Edge set of one copy, as neighbourhood masks of its vertices in increasing order.
        using EdgeImage = std::vector<std::uint64_t>;

        auto covered_by_some_copy(const EdgeImage & edges, std::uint64_t vertices, const Pattern & f,
                                  const Graph & g) -> bool
        {
            std::uint64_t anchor = bit(std::countr_zero(vertices));
            for (int root : f.orbit_representatives()) {
                const auto & plan = f.anchored_plan(root);
                auto check = [&](const Image & image, std::uint64_t) {
                    std::array<std::uint64_t, max_vertices> image_adj{};
                    for (std::size_t i = 0; i < plan.order.size(); ++i)
                        for (int j : plan.back[i]) {
                            image_adj[image[i]] |= bit(image[j]);
                            image_adj[image[j]] |= bit(image[i]);
                        }
                    std::size_t k = 0;
                    for (auto b = vertices; b; b &= b - 1, ++k)
                        if (edges[k] & ~image_adj[std::countr_zero(b)])
                            return true;
                    return false;
                };
                if (! for_each_embedding(plan, g, {.required = vertices, .first_allowed = anchor}, check))
                    return true;
            }
            return false;
        }
    }

    auto strongly_nice_count(const Pattern & h, const Pattern & f, const Graph & g) -> Count
    {
        if (h.order() > f.order())
            throw std::invalid_argument("strong alignment needs |V(H)| <= |V(F)|");
        if (h.order() > g.order())
            return 0;

        std::set<std::pair<std::uint64_t, EdgeImage>> copies;
        const auto & plan = h.plan();
        for_each_embedding(plan, g, {}, [&](const Image & image, std::uint64_t set) {
            std::array<std::uint64_t, max_vertices> adj{};
            for (std::size_t i = 0; i < plan.order.size(); ++i)
                for (int j : plan.back[i]) {
                    adj[image[i]] |= bit(image[j]);
                    adj[image[j]] |= bit(image[i]);
                }
            EdgeImage edges;
            for (auto b = set; b; b &= b - 1)
                edges.push_back(adj[std::countr_zero(b)]);
            copies.emplace(set, std::move(edges));
            return true;
        });

        Count nice = 0;
        for (const auto & [vertices, edges] : copies)
            if (! covered_by_some_copy(edges, vertices, f, g))
                ++nice;
        return nice;
    }
}
