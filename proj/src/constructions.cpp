#include "niceturan/constructions.hpp"
#include "niceturan/alignment.hpp"
#include "niceturan/copies.hpp"

#include <stdexcept>

namespace niceturan
{
    auto path_blowup(int k, int m) -> ConstructionResult
    {
        if (k < 4)
            throw std::invalid_argument("path blow-up needs k >= 4");
        if (m < 1)
            throw std::invalid_argument("path blow-up needs m >= 1");
        if (k + (k - 2) * m > max_vertices)
            throw std::invalid_argument("path blow-up exceeds 64 vertices");

        Graph g(k + (k - 2) * m);
        std::vector<std::vector<int>> classes(k);
        std::vector<std::vector<int>> clones(k);
        int next = k;
        for (int i = 0; i < k; ++i) {
            classes[i].push_back(i);
            if (i == 1 || i == k - 2)
                continue;
            for (int j = 0; j < m; ++j) {
                classes[i].push_back(next);
                clones[i].push_back(next++);
            }
        }
        for (int i = 0; i + 1 < k; ++i)
            for (int u : classes[i])
                for (int v : classes[i + 1])
                    g.add_edge(u, v);

        // Odometer over one clone per blown position.
        ConstructionResult result{g, {}, "path-blowup: designated P_k sets are nice w.r.t. P_l for odd l-k", ""};
        std::vector<int> choice(k, 0);
        while (true) {
            std::uint64_t set = bit(1) | bit(k - 2);
            for (int i = 0; i < k; ++i)
                if (! clones[i].empty())
                    set |= bit(clones[i][choice[i]]);
            result.designated_sets.emplace_back(set);

            int i = k - 1;
            for (; i >= 0; --i) {
                if (clones[i].empty())
                    continue;
                if (++choice[i] < m)
                    break;
                choice[i] = 0;
            }
            if (i < 0)
                break;
        }
        return result;
    }

    auto double_one_side(const Graph & g, VertexSet side) -> ConstructionResult
    {
        auto all = g.all_vertices();
        if (side.bits() & ~all)
            throw std::invalid_argument("side contains vertices outside the graph");
        auto other = all & ~side.bits();
        for (int v = 0; v < g.order(); ++v) {
            auto same = side.contains(v) ? side.bits() : other;
            if (g.neighbours(v) & same)
                throw std::invalid_argument("side is not one class of a bipartition of the graph");
        }
        if (g.order() + side.size() > max_vertices)
            throw std::invalid_argument("doubled graph exceeds 64 vertices");

        Graph doubled(g.order() + side.size());
        std::vector<int> twin(g.order(), -1);
        int next = g.order();
        for (int v : side.members())
            twin[v] = next++;
        for (auto [u, v] : g.edges()) {
            doubled.add_edge(u, v);
            int s = side.contains(u) ? u : v;
            int o = s == u ? v : u;
            doubled.add_edge(o, twin[s]);
        }
        for (int v : side.members())
            doubled.add_edge(v, twin[v]);

        ConstructionResult result{doubled, {}, "double-one-side: one nice triangle per original edge",
                                  "twin vertices v_1, v_2 are joined by an edge; the triangle count is |E(G)|"};
        for (auto [u, v] : g.edges()) {
            int s = side.contains(u) ? u : v;
            int o = s == u ? v : u;
            result.designated_sets.push_back(VertexSet::of({o, s, twin[s]}));
        }
        return result;
    }

    auto certify(const ConstructionResult & result, const Pattern & h, const Pattern & f) -> CertificationReport
    {
        CertificationReport report;
        report.claim = result.claim;
        report.note = result.note;
        for (auto s : result.designated_sets) {
            ++report.checked;
            if (s.size() != h.order() || ! find_copy_with_constraint(h, result.graph, s, Containment::subset)) {
                report.passed = false;
                report.failing_set = s;
                report.reason = "designated set carries no copy of " + h.name();
                return report;
            }
            auto check = is_nice(s, f, result.graph);
            if (! check.nice) {
                report.passed = false;
                report.failing_set = s;
                report.witness = check.witness;
                report.reason = "designated set aligns with a copy of " + f.name();
                return report;
            }
        }
        return report;
    }
}
