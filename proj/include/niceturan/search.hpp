#ifndef NICETURAN_SEARCH_HPP
#define NICETURAN_SEARCH_HPP

#include "niceturan/graph.hpp"
#include "niceturan/pattern.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace niceturan
{
    enum class SearchMode
    {
        nice,    // max N_re(H, F, G) over all G
        classic, // max N(H, G) over F-free G
        strong   // max strongly nice count over all G
    };

    enum class GeneratorKind
    {
        canonical,
        labeled
    };

    auto to_string(SearchMode mode) -> std::string;
    auto to_string(GeneratorKind kind) -> std::string;
    auto parse_search_mode(const std::string & text) -> SearchMode;
    auto parse_generator(const std::string & text) -> GeneratorKind;

    struct SearchLimits
    {
        int max_canonical_n = 10;
        int max_labeled_n = 6;
    };

    struct GenerateOptions
    {
        int jobs = 1;
        int max_n = 10;
        // Hereditary rejection: a rejected graph is neither visited nor extended.
        std::function<bool(const Graph &)> reject;
    };

    /// One graph per isomorphism class on n vertices, by canonical
    /// augmentation: a child is accepted only when its new vertex lies in the
    /// orbit of the vertex placed last by the canonical labelling, and
    /// isomorphic children of the same parent are merged. With jobs > 1 the
    /// parents of the last level are split between threads and visit is
    /// called concurrently; the second argument is the worker index.
    void for_each_nonisomorphic(int n, const std::function<void(const Graph &, int)> & visit,
                                const GenerateOptions & options = {});

    auto nonisomorphic_graphs(int n, const GenerateOptions & options = {}) -> std::vector<Graph>;

    // Every labelled graph on n vertices, ordered by edge bitmask.
    void for_each_labeled(int n, const std::function<void(const Graph &)> & visit, int max_n = 6);

    struct SearchRecord
    {
        int n = 0;
        std::string h;  // graph6
        std::string f;  // graph6
        SearchMode mode = SearchMode::nice;
        Count value = 0;
        std::vector<std::string> witnesses; // canonical graph6, sorted
        bool witnesses_truncated = false;
        Count graphs_examined = 0;
        GeneratorKind generator = GeneratorKind::canonical;
    };

    struct SearchOptions
    {
        SearchLimits limits;
        std::size_t witness_cap = 100;
        int jobs = 1;
    };

    // The quantity maximised by a search mode, or nullopt when g is not
    // admissible (contains F in classic mode).
    auto mode_value(const Pattern & h, const Pattern & f, const Graph & g, SearchMode mode) -> std::optional<Count>;

    /// Exact maximum over all n-vertex graphs, with every optimal isomorphism
    /// class as witness (up to witness_cap, smallest canonical forms kept).
    /// Throws GuardError past the generator's vertex limit.
    auto exhaustive_max(int n, const Pattern & h, const Pattern & f, SearchMode mode,
                        GeneratorKind generator = GeneratorKind::canonical, const SearchOptions & options = {})
        -> SearchRecord;

    auto labeled_oracle_max(int n, const Pattern & h, const Pattern & f, SearchMode mode,
                            const SearchOptions & options = {}) -> SearchRecord;
}

#endif
