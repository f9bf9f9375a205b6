#include "niceturan/search.hpp"
#include "niceturan/alignment.hpp"
#include "niceturan/canonical.hpp"
#include "niceturan/copies.hpp"
#include "niceturan/errors.hpp"
#include "niceturan/graph6.hpp"

#include <algorithm>
#include <exception>
#include <mutex>
#include <set>
#include <thread>
#include <unordered_set>

namespace niceturan
{
    auto to_string(SearchMode mode) -> std::string
    {
        switch (mode) {
            case SearchMode::nice: return "nice";
            case SearchMode::classic: return "classic";
            case SearchMode::strong: return "strong";
        }
        return "?";
    }

    auto to_string(GeneratorKind kind) -> std::string
    {
        return kind == GeneratorKind::canonical ? "canonical" : "labeled";
    }

    auto parse_search_mode(const std::string & text) -> SearchMode
    {
        if (text == "nice")
            return SearchMode::nice;
        if (text == "classic")
            return SearchMode::classic;
        if (text == "strong")
            return SearchMode::strong;
        throw ParseError("unknown search mode '" + text + "'");
    }

    auto parse_generator(const std::string & text) -> GeneratorKind
    {
        if (text == "canonical")
            return GeneratorKind::canonical;
        if (text == "labeled")
            return GeneratorKind::labeled;
        throw ParseError("unknown generator '" + text + "'");
    }

    namespace
    {
        // Upper triangle, row by row. Fits n <= 11.
        auto encode(const Graph & g) -> std::uint64_t
        {
            std::uint64_t code = 0;
            int k = 0;
            for (int u = 0; u < g.order(); ++u)
                for (int v = u + 1; v < g.order(); ++v, ++k)
                    if (g.adjacent(u, v))
                        code |= bit(k);
            return code;
        }

        auto decode(int n, std::uint64_t code) -> Graph
        {
            Graph g(n);
            int k = 0;
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v, ++k)
                    if ((code >> k) & 1U)
                        g.add_edge(u, v);
            return g;
        }

        // Children of parent accepted by canonical augmentation.
        template <typename Visit>
        void augment(const Graph & parent, const GenerateOptions & options, Visit && visit)
        {
            int m = parent.order();
            std::unordered_set<std::string> seen;
            for (std::uint64_t s = 0; s < bit(m); ++s) {
                Graph child = parent;
                int v = child.add_vertex();
                child.set_neighbours(v, s);
                if (options.reject && options.reject(child))
                    continue;
                auto labeling = canonical_labeling(child);
                int last = labeling.order.back();
                if (last != v && ! same_orbit(child, last, v))
                    continue;
                if (seen.insert(labeling.certificate).second)
                    visit(child);
            }
        }
    }

    void for_each_nonisomorphic(int n, const std::function<void(const Graph &, int)> & visit,
                                const GenerateOptions & options)
    {
        if (n < 0)
            throw std::invalid_argument("vertex count must be non-negative");
        if (n > options.max_n || n > 11)
            throw GuardError("canonical generation limited to n <= " + std::to_string(std::min(options.max_n, 11)) +
                             ", got " + std::to_string(n));

        Graph start(0);
        if (n == 0) {
            if (! options.reject || ! options.reject(start))
                visit(start, 0);
            return;
        }
        if (options.reject && options.reject(start))
            return;

        std::vector<std::uint64_t> level{0};
        for (int order = 0; order + 1 < n; ++order) {
            std::vector<std::uint64_t> next;
            for (auto code : level)
                augment(decode(order, code), options, [&](const Graph & child) { next.push_back(encode(child)); });
            level = std::move(next);
        }

        int parents_order = n - 1;
        int jobs = std::max(1, std::min<int>(options.jobs, static_cast<int>(level.size())));
        if (jobs == 1) {
            for (auto code : level)
                augment(decode(parents_order, code), options, [&](const Graph & child) { visit(child, 0); });
            return;
        }

        std::vector<std::thread> workers;
        std::exception_ptr failure;
        std::mutex failure_mutex;
        for (int w = 0; w < jobs; ++w)
            workers.emplace_back([&, w] {
                try {
                    for (std::size_t i = w; i < level.size(); i += jobs)
                        augment(decode(parents_order, level[i]), options,
                                [&](const Graph & child) { visit(child, w); });
                }
                catch (...) {
                    std::lock_guard lock(failure_mutex);
                    if (! failure)
                        failure = std::current_exception();
                }
            });
        for (auto & t : workers)
            t.join();
        if (failure)
            std::rethrow_exception(failure);
    }

    auto nonisomorphic_graphs(int n, const GenerateOptions & options) -> std::vector<Graph>
    {
        GenerateOptions sequential = options;
        sequential.jobs = 1;
        std::vector<Graph> result;
        for_each_nonisomorphic(n, [&](const Graph & g, int) { result.push_back(g); }, sequential);
        return result;
    }

    void for_each_labeled(int n, const std::function<void(const Graph &)> & visit, int max_n)
    {
        if (n < 0)
            throw std::invalid_argument("vertex count must be non-negative");
        if (n > max_n || n > 11)
            throw GuardError("labeled enumeration limited to n <= " + std::to_string(std::min(max_n, 11)) +
                             ", got " + std::to_string(n));
        int pairs = n * (n - 1) / 2;
        for (std::uint64_t code = 0; code < bit(pairs); ++code)
            visit(decode(n, code));
    }

    auto mode_value(const Pattern & h, const Pattern & f, const Graph & g, SearchMode mode) -> std::optional<Count>
    {
        switch (mode) {
            case SearchMode::nice: return nice_count(h, f, g).nice_copies;
            case SearchMode::classic:
                if (contains_copy(f, g))
                    return std::nullopt;
                return count_copies(h, g);
            case SearchMode::strong: return strongly_nice_count(h, f, g);
        }
        return std::nullopt;
    }

    namespace
    {
        struct Best
        {
            std::optional<Count> value;
            std::set<std::string> witnesses;
            bool truncated = false;
            Count examined = 0;

            void offer(Count v, const Graph & g, std::size_t cap)
            {
                if (value && v < *value)
                    return;
                if (! value || v > *value) {
                    value = v;
                    witnesses.clear();
                    truncated = false;
                }
                keep(canonical_form(g), cap);
            }

            void keep(std::string w, std::size_t cap)
            {
                witnesses.insert(std::move(w));
                if (witnesses.size() > cap) {
                    witnesses.erase(std::prev(witnesses.end()));
                    truncated = true;
                }
            }

            void merge(const Best & other, std::size_t cap)
            {
                examined = checked_add(examined, other.examined);
                if (! other.value)
                    return;
                if (! value || *other.value > *value) {
                    value = other.value;
                    witnesses = other.witnesses;
                    truncated = other.truncated;
                }
                else if (*other.value == *value) {
                    truncated = truncated || other.truncated;
                    for (const auto & w : other.witnesses)
                        keep(w, cap);
                }
            }
        };

        void check_strong(const Pattern & h, const Pattern & f, SearchMode mode)
        {
            if (mode == SearchMode::strong && h.order() > f.order())
                throw std::invalid_argument("strong mode needs |V(H)| <= |V(F)|");
        }

        auto finish(int n, const Pattern & h, const Pattern & f, SearchMode mode, GeneratorKind generator,
                    const Best & best) -> SearchRecord
        {
            if (! best.value)
                throw GuardError("no admissible graph on " + std::to_string(n) + " vertices (every graph contains F)");
            SearchRecord record;
            record.n = n;
            record.h = to_graph6(h.graph());
            record.f = to_graph6(f.graph());
            record.mode = mode;
            record.value = *best.value;
            record.witnesses.assign(best.witnesses.begin(), best.witnesses.end());
            record.witnesses_truncated = best.truncated;
            record.graphs_examined = best.examined;
            record.generator = generator;
            return record;
        }
    }

    auto exhaustive_max(int n, const Pattern & h, const Pattern & f, SearchMode mode, GeneratorKind generator,
                        const SearchOptions & options) -> SearchRecord
    {
        if (generator == GeneratorKind::labeled)
            return labeled_oracle_max(n, h, f, mode, options);
        check_strong(h, f, mode);

        GenerateOptions generate;
        generate.jobs = std::max(1, options.jobs);
        generate.max_n = options.limits.max_canonical_n;
        if (mode == SearchMode::classic)
            generate.reject = [&f](const Graph & g) { return contains_copy(f, g); };

        std::vector<Best> partial(generate.jobs);
        for_each_nonisomorphic(
            n,
            [&](const Graph & g, int worker) {
                auto & best = partial[worker];
                best.examined = checked_add(best.examined, 1);
                if (auto v = mode_value(h, f, g, mode))
                    best.offer(*v, g, options.witness_cap);
            },
            generate);

        Best total;
        for (const auto & p : partial)
            total.merge(p, options.witness_cap);
        return finish(n, h, f, mode, GeneratorKind::canonical, total);
    }

    auto labeled_oracle_max(int n, const Pattern & h, const Pattern & f, SearchMode mode,
                            const SearchOptions & options) -> SearchRecord
    {
        check_strong(h, f, mode);
        Best best;
        for_each_labeled(
            n,
            [&](const Graph & g) {
                best.examined = checked_add(best.examined, 1);
                if (auto v = mode_value(h, f, g, mode))
                    best.offer(*v, g, options.witness_cap);
            },
            options.limits.max_labeled_n);
        return finish(n, h, f, mode, GeneratorKind::labeled, best);
    }
}
