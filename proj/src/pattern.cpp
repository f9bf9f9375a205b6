#include "niceturan/pattern.hpp"
#include "niceturan/canonical.hpp"
#include "niceturan/graph6.hpp"

#include <stdexcept>

namespace niceturan
{
    auto make_plan(const Graph & g, int root) -> EmbeddingPlan
    {
        int n = g.order();
        EmbeddingPlan plan;
        std::vector<int> position(n, -1);
        std::uint64_t placed = 0;

        for (int step = 0; step < n; ++step) {
            int best = -1, best_back = -1, best_degree = -1;
            for (int v = 0; v < n; ++v) {
                if (placed & bit(v))
                    continue;
                int back = std::popcount(g.neighbours(v) & placed);
                int degree = g.degree(v);
                if (step == 0 && root >= 0) {
                    if (v != root)
                        continue;
                }
                if (back > best_back || (back == best_back && degree > best_degree)) {
                    best = v;
                    best_back = back;
                    best_degree = degree;
                }
            }
            position[best] = step;
            placed |= bit(best);
            plan.order.push_back(best);
            plan.degree.push_back(g.degree(best));
            std::vector<int> back;
            for (auto b = g.neighbours(best) & (placed & ~bit(best)); b; b &= b - 1)
                back.push_back(position[std::countr_zero(b)]);
            plan.back.push_back(std::move(back));
        }
        return plan;
    }

    Pattern::Pattern(Graph g, std::string name)
    {
        if (g.order() == 0)
            throw std::invalid_argument("pattern must have at least one vertex");
        auto data = std::make_shared<Data>();
        data->graph = std::move(g);
        data->name = name.empty() ? to_graph6(data->graph) : std::move(name);
        data->edges = data->graph.edge_count();
        data->aut_count = automorphism_count(data->graph);
        data->plan = make_plan(data->graph);
        for (int v = 0; v < data->graph.order(); ++v)
            data->anchored.push_back(make_plan(data->graph, v));

        std::vector<int> reps;
        for (int v = 0; v < data->graph.order(); ++v) {
            bool fresh = true;
            for (int r : reps)
                if (same_orbit(data->graph, r, v)) {
                    fresh = false;
                    break;
                }
            if (fresh)
                reps.push_back(v);
        }
        data->orbit_reps = std::move(reps);
        data_ = std::move(data);
    }
}
