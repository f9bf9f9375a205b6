#include "niceturan/canonical.hpp"
#include "niceturan/errors.hpp"
#include "niceturan/graph6.hpp"

#include <algorithm>
#include <array>

namespace niceturan
{
    namespace
    {
        using Cells = std::vector<std::uint64_t>;

        auto is_twin_cell(const Graph & g, std::uint64_t cell) -> bool
        {
            for (auto a = cell; a; a &= a - 1) {
                int u = std::countr_zero(a);
                for (auto b = a & (a - 1); b; b &= b - 1) {
                    int v = std::countr_zero(b);
                    if ((g.neighbours(u) & ~bit(v)) != (g.neighbours(v) & ~bit(u)))
                        return false;
                }
            }
            return true;
        }

        void refine(const Graph & g, Cells & cells)
        {
            bool split = true;
            while (split) {
                split = false;
                for (std::size_t w = 0; w < cells.size() && ! split; ++w) {
                    auto splitter = cells[w];
                    for (std::size_t c = 0; c < cells.size(); ++c) {
                        auto cell = cells[c];
                        if (std::popcount(cell) <= 1)
                            continue;

                        std::array<std::uint64_t, max_vertices + 1> buckets{};
                        int first = -1;
                        bool uniform = true;
                        for (auto b = cell; b; b &= b - 1) {
                            int v = std::countr_zero(b);
                            int k = std::popcount(g.neighbours(v) & splitter);
                            buckets[k] |= bit(v);
                            if (first == -1)
                                first = k;
                            else if (k != first)
                                uniform = false;
                        }
                        if (uniform)
                            continue;

                        Cells pieces;
                        for (auto bucket : buckets)
                            if (bucket)
                                pieces.push_back(bucket);
                        cells[c] = pieces[0];
                        cells.insert(cells.begin() + static_cast<long>(c) + 1, pieces.begin() + 1, pieces.end());
                        split = true;
                        break;
                    }
                }
            }
        }

        struct Searcher
        {
            const Graph & g;
            const std::vector<int> & colours;
            bool have_best = false;
            std::array<std::uint64_t, max_vertices> best_rows{};
            std::vector<int> best_order{};

            void leaf(const Cells & cells)
            {
                int n = g.order();
                std::vector<int> order(n);
                std::array<int, max_vertices> position{};
                for (int i = 0; i < n; ++i) {
                    order[i] = std::countr_zero(cells[i]);
                    position[order[i]] = i;
                }

                std::array<std::uint64_t, max_vertices> rows{};
                for (int i = 0; i < n; ++i) {
                    std::uint64_t row = 0;
                    for (auto b = g.neighbours(order[i]); b; b &= b - 1)
                        row |= bit(n - 1 - position[std::countr_zero(b)]);
                    rows[i] = row;
                }

                if (! have_best || std::lexicographical_compare(best_rows.begin(), best_rows.begin() + n,
                                                                rows.begin(), rows.begin() + n)) {
                    have_best = true;
                    best_rows = rows;
                    best_order = std::move(order);
                }
            }

            void search(Cells cells)
            {
                refine(g, cells);
                auto target = std::find_if(cells.begin(), cells.end(),
                                           [](std::uint64_t c) { return std::popcount(c) > 1; });
                if (target == cells.end()) {
                    leaf(cells);
                    return;
                }

                auto index = target - cells.begin();
                auto cell = *target;
                auto candidates = is_twin_cell(g, cell) ? (cell & -cell) : cell;
                for (auto b = candidates; b; b &= b - 1) {
                    int v = std::countr_zero(b);
                    Cells child = cells;
                    child[index] = bit(v);
                    child.insert(child.begin() + index + 1, cell & ~bit(v));
                    search(std::move(child));
                }
            }
        };

        auto initial_cells(const Graph & g, const std::vector<int> & colours) -> Cells
        {
            if (g.order() == 0)
                return {};
            if (colours.empty())
                return {g.all_vertices()};
            if (static_cast<int>(colours.size()) != g.order())
                throw std::invalid_argument("colouring size does not match graph order");

            std::vector<int> distinct(colours.begin(), colours.end());
            std::sort(distinct.begin(), distinct.end());
            distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
            Cells cells;
            for (int c : distinct) {
                std::uint64_t cell = 0;
                for (int v = 0; v < g.order(); ++v)
                    if (colours[v] == c)
                        cell |= bit(v);
                cells.push_back(cell);
            }
            return cells;
        }
    }

    auto canonical_labeling(const Graph & g, const std::vector<int> & colours) -> CanonicalLabeling
    {
        Searcher searcher{g, colours, false, {}, {}};
        auto cells = initial_cells(g, colours);
        if (g.order() > 0)
            searcher.search(std::move(cells));

        CanonicalLabeling result;
        result.order = std::move(searcher.best_order);
        result.certificate = to_graph6(g.relabeled(result.order));
        if (! colours.empty()) {
            result.certificate.push_back('|');
            for (int v : result.order)
                result.certificate += std::to_string(colours[v]) + ",";
        }
        return result;
    }

    auto canonical_form(const Graph & g) -> std::string
    {
        return canonical_labeling(g).certificate;
    }

    auto canonical_graph(const Graph & g) -> Graph
    {
        return g.relabeled(canonical_labeling(g).order);
    }

    auto are_isomorphic(const Graph & a, const Graph & b) -> bool
    {
        return a.order() == b.order() && a.edge_count() == b.edge_count() && canonical_form(a) == canonical_form(b);
    }

    auto same_orbit(const Graph & g, int u, int v) -> bool
    {
        if (u == v)
            return true;
        if (g.degree(u) != g.degree(v))
            return false;
        std::vector<int> mark_u(g.order(), 1), mark_v(g.order(), 1);
        mark_u[u] = 0;
        mark_v[v] = 0;
        return canonical_labeling(g, mark_u).certificate == canonical_labeling(g, mark_v).certificate;
    }

    namespace
    {
        struct AutomorphismCounter
        {
            const Graph & g;
            std::vector<int> previous_twin; // previous member of the twin class, or -1
            std::array<int, max_vertices> image{};
            std::uint64_t used = 0;
            Count leaves = 0;

            void extend(int x)
            {
                int n = g.order();
                if (x == n) {
                    leaves = checked_add(leaves, 1);
                    return;
                }
                std::uint64_t candidates = g.all_vertices() & ~used;
                for (int y = 0; y < x; ++y) {
                    if (g.adjacent(x, y))
                        candidates &= g.neighbours(image[y]);
                    else
                        candidates &= ~g.neighbours(image[y]);
                }
                if (previous_twin[x] != -1)
                    candidates &= ~low_bits(image[previous_twin[x]] + 1);
                for (auto b = candidates; b; b &= b - 1) {
                    int w = std::countr_zero(b);
                    if (g.degree(w) != g.degree(x))
                        continue;
                    image[x] = w;
                    used |= bit(w);
                    extend(x + 1);
                    used &= ~bit(w);
                }
            }
        };
    }

    auto automorphism_count(const Graph & g) -> Count
    {
        int n = g.order();
        std::vector<int> previous_twin(n, -1);
        std::vector<int> class_size(n, 1), class_of(n);
        for (int v = 0; v < n; ++v) {
            class_of[v] = v;
            for (int u = v - 1; u >= 0; --u)
                if ((g.neighbours(u) & ~bit(v)) == (g.neighbours(v) & ~bit(u))) {
                    previous_twin[v] = u;
                    class_of[v] = class_of[u];
                    ++class_size[class_of[v]];
                    break;
                }
        }

        AutomorphismCounter counter{g, previous_twin};
        counter.extend(0);

        Count total = counter.leaves;
        for (int v = 0; v < n; ++v)
            if (class_of[v] == v)
                for (int k = 2; k <= class_size[v]; ++k)
                    total = checked_mul(total, static_cast<Count>(k));
        return total;
    }
}
