#ifndef NICETURAN_PATTERN_HPP
#define NICETURAN_PATTERN_HPP

#include "niceturan/graph.hpp"

#include <memory>
#include <string>
#include <vector>

namespace niceturan
{
    /// Order in which pattern vertices are mapped during an embedding search.
    struct EmbeddingPlan
    {
        std::vector<int> order;              // pattern vertex placed at each position
        std::vector<std::vector<int>> back;  // earlier positions adjacent to this one
        std::vector<int> degree;             // pattern degree of the vertex at each position
    };

    /// Greedy connectivity order: start at root (or a maximum degree vertex),
    /// then repeatedly take the vertex with most already placed neighbours.
    auto make_plan(const Graph & g, int root = -1) -> EmbeddingPlan;

    /// A graph used as H or F. Caches its automorphism group order and the
    /// embedding plans. Copies share the cache.
    class Pattern
    {
    public:
        explicit Pattern(Graph g, std::string name = {});

        auto graph() const -> const Graph & { return data_->graph; }
        auto order() const -> int { return data_->graph.order(); }
        auto edge_count() const -> int { return data_->edges; }
        auto aut_count() const -> Count { return data_->aut_count; }
        auto name() const -> const std::string & { return data_->name; }

        auto plan() const -> const EmbeddingPlan & { return data_->plan; }

        // Plan whose first position is the given pattern vertex.
        auto anchored_plan(int root) const -> const EmbeddingPlan & { return data_->anchored[root]; }

        // One vertex per automorphism orbit.
        auto orbit_representatives() const -> const std::vector<int> & { return data_->orbit_reps; }

    private:
        struct Data
        {
            Graph graph;
            std::string name;
            int edges = 0;
            Count aut_count = 1;
            EmbeddingPlan plan;
            std::vector<EmbeddingPlan> anchored;
            std::vector<int> orbit_reps;
        };
        std::shared_ptr<const Data> data_;
    };
}

#endif
