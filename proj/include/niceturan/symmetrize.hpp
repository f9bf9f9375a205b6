#ifndef NICETURAN_SYMMETRIZE_HPP
#define NICETURAN_SYMMETRIZE_HPP

#include "niceturan/graph.hpp"
#include "niceturan/pattern.hpp"
#include "niceturan/search.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace niceturan
{
    using Rational = boost::multiprecision::cpp_rational;

    // Always "p/q", e.g. "3/1", "-1/2".
    auto to_string(const Rational & r) -> std::string;
    // Accepts "p", "p/q" and finite decimals such as "0.25".
    auto parse_rational(const std::string & text) -> Rational;

    /// Weighted sum of nice counts (with respect to cliques) and plain counts
    /// of complete multipartite patterns.
    class Objective
    {
    public:
        struct NiceTerm
        {
            Rational weight;
            Pattern pattern;
            int clique_order;   // copies aligning with a K_{clique_order+1} are not counted
            Pattern clique;     // K_{clique_order+1}
        };

        struct PlainTerm
        {
            Rational weight;
            Pattern pattern;
        };

        // Throw std::invalid_argument on negative weights, k < 1, or a
        // pattern that is not complete multipartite.
        void add_nice(Rational weight, Pattern pattern, int clique_order);
        void add_plain(Rational weight, Pattern pattern);

        auto nice_terms() const -> const std::vector<NiceTerm> & { return nice_; }
        auto plain_terms() const -> const std::vector<PlainTerm> & { return plain_; }
        auto empty() const -> bool { return nice_.empty() && plain_.empty(); }
        auto describe() const -> std::string;

    private:
        std::vector<NiceTerm> nice_;
        std::vector<PlainTerm> plain_;
    };

    /// x(G) together with the weighted copy degrees d*(v) and d*(u, v).
    struct ObjectiveProfile
    {
        int n = 0;
        Rational total;
        std::vector<Rational> per_vertex;
        std::vector<Rational> per_pair; // n * n, symmetric, zero diagonal

        auto pair(int u, int v) const -> const Rational & { return per_pair[u * n + v]; }
    };

    auto evaluate_objective(const Graph & g, const Objective & objective) -> ObjectiveProfile;

    auto objective_value(const Graph & g, const Objective & objective) -> Rational;
    auto d_star(int v, const Graph & g, const Objective & objective) -> Rational;
    auto d_star_pair(int u, int v, const Graph & g, const Objective & objective) -> Rational;

    // Gives u the neighbourhood of v. u and v must be distinct and non-adjacent.
    auto symmetrize_step(const Graph & g, int u, int v) -> Graph;

    enum class StepRule
    {
        value,    // d*(u) < d*(v)
        tiebreak  // d* equal, decided by the smallest indices of the neighbourhood classes
    };

    auto to_string(StepRule rule) -> std::string;

    struct SymmetrizationStep
    {
        int u = 0;  // vertex whose neighbourhood was replaced
        int v = 0;
        Rational d_star_u, d_star_v;
        Rational x_before, x_after;
        Rational pair_before, pair_after; // d*(u, v) before and after
        StepRule rule = StepRule::value;
    };

    struct SymmetrizationTrace
    {
        std::vector<SymmetrizationStep> steps;
        Graph initial_graph;
        Graph final_graph;
        std::vector<int> final_parts;
    };

    // 2^n * n * 10, saturating.
    auto default_step_cap(int n) -> std::uint64_t;

    /// Repeated Zykov symmetrisation. Pairs are scanned in lexicographic
    /// order; the first non-adjacent pair with different neighbourhoods is
    /// symmetrised from the smaller d* to the larger. On a d* tie the vertex
    /// whose neighbourhood class has the larger smallest index moves. Throws
    /// InternalError if step_cap steps are exceeded.
    auto run_zykov(const Graph & g, const Objective & objective, std::optional<std::uint64_t> step_cap = std::nullopt)
        -> SymmetrizationTrace;

    /// Part sizes of a complete multipartite graph, non-increasing.
    class PartitionProfile
    {
    public:
        PartitionProfile() = default;
        explicit PartitionProfile(std::vector<int> parts);

        auto parts() const -> const std::vector<int> & { return parts_; }
        auto order() const -> int;
        auto size() const -> int { return static_cast<int>(parts_.size()); }
        auto operator<=>(const PartitionProfile &) const = default;

    private:
        std::vector<int> parts_;
    };

    // All partitions of n, in reverse lexicographic order starting from (n).
    auto integer_partitions(int n) -> std::vector<PartitionProfile>;

    struct ProfileOptimum
    {
        PartitionProfile profile;
        Rational value;
        Graph graph;
    };

    /// Maximises the objective over complete multipartite graphs on n vertices.
    /// Ties go to the lexicographically largest part list. Needs 1 <= n <= 40.
    auto profile_optimize(int n, const Objective & objective) -> ProfileOptimum;

    struct ObjectiveMaximum
    {
        Rational value;
        std::vector<std::string> witnesses; // canonical graph6
        Count graphs_examined = 0;
    };

    // Maximum of the objective over every n-vertex graph (isomorph-free generation).
    auto exhaustive_objective_max(int n, const Objective & objective, const SearchLimits & limits = {})
        -> ObjectiveMaximum;

    // Copies of K_{a,b} in K_{s,t}; needs 1 <= a <= b.
    auto count_kab_in_kst(int a, int b, int s, int t) -> Count;

    // argmax over 0 <= t <= n/2 of copies of K_{a,b} in K_{t,n-t}, ties to
    // smaller t. Needs n >= a + b.
    auto best_bipartite_split(int n, int a, int b) -> std::pair<int, Count>;

    // Copies of K_k aligning with no K_{k+1} in the complete multipartite
    // graph with these parts: the product of the parts when there are exactly
    // k of them, zero otherwise.
    auto nice_kk_in_multipartite(const PartitionProfile & parts, int k) -> Count;
}

#endif
