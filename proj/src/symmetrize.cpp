#include "niceturan/symmetrize.hpp"
#include "niceturan/alignment.hpp"
#include "niceturan/canonical.hpp"
#include "niceturan/copies.hpp"
#include "niceturan/errors.hpp"
#include "niceturan/families.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <set>
#include <stdexcept>
#include <tuple>

namespace niceturan
{
    auto to_string(const Rational & r) -> std::string
    {
        return boost::multiprecision::numerator(r).str() + "/" + boost::multiprecision::denominator(r).str();
    }

    auto parse_rational(const std::string & raw) -> Rational
    {
        std::string text;
        for (char c : raw)
            if (! std::isspace(static_cast<unsigned char>(c)))
                text.push_back(c);
        auto is_integer = [](const std::string & s) {
            std::size_t i = (! s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
            return i < s.size() && std::all_of(s.begin() + static_cast<long>(i), s.end(),
                                               [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
        };
        using boost::multiprecision::cpp_int;
        auto to_int = [](const std::string & s) { return cpp_int(s[0] == '+' ? s.substr(1) : s); };

        if (auto slash = text.find('/'); slash != std::string::npos) {
            auto p = text.substr(0, slash), q = text.substr(slash + 1);
            if (! is_integer(p) || ! is_integer(q))
                throw ParseError("bad rational '" + raw + "'");
            auto denominator = to_int(q);
            if (denominator == 0)
                throw ParseError("zero denominator in '" + raw + "'");
            return Rational(to_int(p), denominator);
        }
        if (auto dot = text.find('.'); dot != std::string::npos) {
            auto whole = text.substr(0, dot), frac = text.substr(dot + 1);
            bool negative = ! whole.empty() && whole[0] == '-';
            if (whole.empty() || whole == "-" || whole == "+")
                whole += "0";
            if (! is_integer(whole) || frac.empty() || ! is_integer(frac) || frac[0] == '-' || frac[0] == '+')
                throw ParseError("bad rational '" + raw + "'");
            cpp_int scale = 1;
            for (std::size_t i = 0; i < frac.size(); ++i)
                scale *= 10;
            cpp_int magnitude = boost::multiprecision::abs(to_int(whole)) * scale + cpp_int(frac);
            return Rational(negative ? cpp_int(-magnitude) : magnitude, scale);
        }
        if (! is_integer(text))
            throw ParseError("bad rational '" + raw + "'");
        return Rational(to_int(text));
    }

    void Objective::add_nice(Rational weight, Pattern pattern, int clique_order)
    {
        if (weight < 0)
            throw std::invalid_argument("objective weights must be non-negative");
        if (clique_order < 1)
            throw std::invalid_argument("clique order k must be at least 1");
        if (! is_complete_multipartite(pattern.graph()))
            throw std::invalid_argument("pattern " + pattern.name() + " is not complete multipartite");
        Pattern clique(complete_graph(clique_order + 1), "K" + std::to_string(clique_order + 1));
        nice_.push_back({std::move(weight), std::move(pattern), clique_order, std::move(clique)});
    }

    void Objective::add_plain(Rational weight, Pattern pattern)
    {
        if (weight < 0)
            throw std::invalid_argument("objective weights must be non-negative");
        if (! is_complete_multipartite(pattern.graph()))
            throw std::invalid_argument("pattern " + pattern.name() + " is not complete multipartite");
        plain_.push_back({std::move(weight), std::move(pattern)});
    }

    auto Objective::describe() const -> std::string
    {
        std::string out;
        auto sep = [&] {
            if (! out.empty())
                out += " + ";
        };
        for (const auto & t : nice_) {
            sep();
            out += to_string(t.weight) + " * nice(" + t.pattern.name() + "; k=" + std::to_string(t.clique_order) + ")";
        }
        for (const auto & t : plain_) {
            sep();
            out += to_string(t.weight) + " * plain(" + t.pattern.name() + ")";
        }
        return out.empty() ? "0" : out;
    }

    namespace
    {
        struct TermCounts
        {
            Count total = 0;
            std::vector<Count> per_vertex;
            std::vector<Count> per_pair;
        };

        void add_set(TermCounts & counts, int n, std::uint64_t set, Count copies, bool with_degrees)
        {
            counts.total = checked_add(counts.total, copies);
            if (! with_degrees)
                return;
            for (auto a = set; a; a &= a - 1) {
                int u = std::countr_zero(a);
                counts.per_vertex[u] = checked_add(counts.per_vertex[u], copies);
                for (auto b = a & (a - 1); b; b &= b - 1) {
                    int v = std::countr_zero(b);
                    counts.per_pair[u * n + v] = checked_add(counts.per_pair[u * n + v], copies);
                    counts.per_pair[v * n + u] = counts.per_pair[u * n + v];
                }
            }
        }

        auto evaluate(const Graph & g, const Objective & objective, bool with_degrees) -> ObjectiveProfile
        {
            int n = g.order();
            ObjectiveProfile profile;
            profile.n = n;
            if (with_degrees) {
                profile.per_vertex.assign(n, Rational(0));
                profile.per_pair.assign(static_cast<std::size_t>(n) * n, Rational(0));
            }

            auto accumulate = [&](const Rational & weight, const TermCounts & counts) {
                profile.total += weight * Rational(counts.total);
                if (! with_degrees)
                    return;
                for (int v = 0; v < n; ++v)
                    if (counts.per_vertex[v])
                        profile.per_vertex[v] += weight * Rational(counts.per_vertex[v]);
                for (std::size_t i = 0; i < counts.per_pair.size(); ++i)
                    if (counts.per_pair[i])
                        profile.per_pair[i] += weight * Rational(counts.per_pair[i]);
            };

            auto fresh = [&] {
                TermCounts c;
                if (with_degrees) {
                    c.per_vertex.assign(n, 0);
                    c.per_pair.assign(static_cast<std::size_t>(n) * n, 0);
                }
                return c;
            };

            for (const auto & term : objective.nice_terms()) {
                auto family = enumerate_copy_sets(term.pattern, g);
                auto report = classify_family(family, term.pattern.order(), term.clique, g);
                auto counts = fresh();
                for (auto s : report.nice_sets)
                    add_set(counts, n, s.bits(), *family.find(s), with_degrees);
                accumulate(term.weight, counts);
            }
            for (const auto & term : objective.plain_terms()) {
                auto counts = fresh();
                for (const auto & [s, copies] : enumerate_copy_sets(term.pattern, g))
                    add_set(counts, n, s.bits(), copies, with_degrees);
                accumulate(term.weight, counts);
            }
            return profile;
        }
    }

    auto evaluate_objective(const Graph & g, const Objective & objective) -> ObjectiveProfile
    {
        return evaluate(g, objective, true);
    }

    auto objective_value(const Graph & g, const Objective & objective) -> Rational
    {
        return evaluate(g, objective, false).total;
    }

    auto d_star(int v, const Graph & g, const Objective & objective) -> Rational
    {
        if (v < 0 || v >= g.order())
            throw std::out_of_range("vertex out of range");
        return evaluate(g, objective, true).per_vertex[v];
    }

    auto d_star_pair(int u, int v, const Graph & g, const Objective & objective) -> Rational
    {
        if (u == v)
            throw std::invalid_argument("d*(u, v) needs distinct vertices");
        if (u < 0 || v < 0 || u >= g.order() || v >= g.order())
            throw std::out_of_range("vertex out of range");
        return evaluate(g, objective, true).pair(u, v);
    }

    auto symmetrize_step(const Graph & g, int u, int v) -> Graph
    {
        if (u == v)
            throw std::invalid_argument("cannot symmetrize a vertex to itself");
        if (g.adjacent(u, v))
            throw std::invalid_argument("symmetrization needs non-adjacent vertices");
        Graph result = g;
        result.set_neighbours(u, g.neighbours(v));
        return result;
    }

    auto to_string(StepRule rule) -> std::string
    {
        return rule == StepRule::value ? "value" : "tiebreak";
    }

    auto default_step_cap(int n) -> std::uint64_t
    {
        if (n >= 56)
            return UINT64_MAX;
        auto cap = static_cast<unsigned __int128>(bit(n)) * static_cast<unsigned>(std::max(n, 1)) * 10U;
        return cap > UINT64_MAX ? UINT64_MAX : static_cast<std::uint64_t>(cap);
    }

    namespace
    {
        auto class_representative(const Graph & g, int v) -> int
        {
            for (int w = 0; w < g.order(); ++w)
                if (g.neighbours(w) == g.neighbours(v))
                    return w;
            return v;
        }

        auto eligible_pair(const Graph & g) -> std::optional<std::pair<int, int>>
        {
            for (int i = 0; i < g.order(); ++i)
                for (int j = i + 1; j < g.order(); ++j)
                    if (! g.adjacent(i, j) && g.neighbours(i) != g.neighbours(j))
                        return std::pair{i, j};
            return std::nullopt;
        }
    }

    auto run_zykov(const Graph & g, const Objective & objective, std::optional<std::uint64_t> step_cap)
        -> SymmetrizationTrace
    {
        std::uint64_t cap = step_cap.value_or(default_step_cap(g.order()));
        if (cap < 1)
            throw std::invalid_argument("step cap must be at least 1");

        SymmetrizationTrace trace;
        trace.initial_graph = g;
        Graph current = g;
        auto profile = evaluate_objective(current, objective);

        while (auto pair = eligible_pair(current)) {
            if (trace.steps.size() >= cap)
                throw InternalError("symmetrization exceeded the step cap of " + std::to_string(cap));
            auto [i, j] = *pair;
            const auto & di = profile.per_vertex[i];
            const auto & dj = profile.per_vertex[j];

            SymmetrizationStep step;
            if (di != dj) {
                step.rule = StepRule::value;
                std::tie(step.u, step.v) = di < dj ? std::pair{i, j} : std::pair{j, i};
            }
            else {
                step.rule = StepRule::tiebreak;
                int ri = class_representative(current, i);
                int rj = class_representative(current, j);
                if (ri == rj)
                    throw InternalError("tie-break classes coincide for vertices with different neighbourhoods");
                std::tie(step.u, step.v) = ri > rj ? std::pair{i, j} : std::pair{j, i};
            }

            step.d_star_u = profile.per_vertex[step.u];
            step.d_star_v = profile.per_vertex[step.v];
            step.x_before = profile.total;
            step.pair_before = profile.pair(step.u, step.v);

            current = symmetrize_step(current, step.u, step.v);
            profile = evaluate_objective(current, objective);
            step.x_after = profile.total;
            step.pair_after = profile.pair(step.u, step.v);
            trace.steps.push_back(std::move(step));
        }

        trace.final_graph = current;
        trace.final_parts = multipartite_parts(current);
        return trace;
    }

    PartitionProfile::PartitionProfile(std::vector<int> parts) : parts_(std::move(parts))
    {
        for (int p : parts_)
            if (p < 1)
                throw std::invalid_argument("part sizes must be positive");
        std::sort(parts_.begin(), parts_.end(), std::greater<>());
    }

    auto PartitionProfile::order() const -> int
    {
        int n = 0;
        for (int p : parts_)
            n += p;
        return n;
    }

    auto integer_partitions(int n) -> std::vector<PartitionProfile>
    {
        if (n < 0)
            throw std::invalid_argument("cannot partition a negative number");
        std::vector<PartitionProfile> result;
        std::vector<int> current;
        std::function<void(int, int)> build = [&](int remaining, int largest) {
            if (remaining == 0) {
                result.emplace_back(current);
                return;
            }
            for (int p = std::min(remaining, largest); p >= 1; --p) {
                current.push_back(p);
                build(remaining - p, p);
                current.pop_back();
            }
        };
        build(n, n);
        return result;
    }

    auto profile_optimize(int n, const Objective & objective) -> ProfileOptimum
    {
        if (n < 1 || n > 40)
            throw GuardError("profile search needs 1 <= n <= 40, got " + std::to_string(n));
        std::optional<ProfileOptimum> best;
        for (auto & profile : integer_partitions(n)) {
            auto graph = complete_multipartite(profile.parts());
            auto value = objective_value(graph, objective);
            if (! best || value > best->value || (value == best->value && profile.parts() > best->profile.parts()))
                best = ProfileOptimum{profile, value, graph};
        }
        return *best;
    }

    auto exhaustive_objective_max(int n, const Objective & objective, const SearchLimits & limits)
        -> ObjectiveMaximum
    {
        GenerateOptions options;
        options.max_n = limits.max_canonical_n;
        std::optional<Rational> best;
        std::set<std::string> witnesses;
        Count examined = 0;
        for_each_nonisomorphic(
            n,
            [&](const Graph & g, int) {
                ++examined;
                auto value = objective_value(g, objective);
                if (! best || value > *best) {
                    best = value;
                    witnesses.clear();
                }
                if (value == *best)
                    witnesses.insert(canonical_form(g));
            },
            options);
        return {best.value_or(Rational(0)), {witnesses.begin(), witnesses.end()}, examined};
    }

    auto count_kab_in_kst(int a, int b, int s, int t) -> Count
    {
        if (a < 1 || b < a)
            throw std::invalid_argument("count_kab_in_kst needs 1 <= a <= b");
        if (s < 0 || t < 0)
            throw std::invalid_argument("part sizes must be non-negative");
        if (a == b)
            return checked_mul(checked_binomial(s, a), checked_binomial(t, a));
        return checked_add(checked_mul(checked_binomial(s, a), checked_binomial(t, b)),
                           checked_mul(checked_binomial(s, b), checked_binomial(t, a)));
    }

    auto best_bipartite_split(int n, int a, int b) -> std::pair<int, Count>
    {
        if (n < a + b)
            throw std::invalid_argument("best_bipartite_split needs n >= a + b");
        std::pair<int, Count> best{0, count_kab_in_kst(a, b, 0, n)};
        for (int t = 1; t <= n / 2; ++t) {
            auto value = count_kab_in_kst(a, b, t, n - t);
            if (value > best.second)
                best = {t, value};
        }
        return best;
    }

    auto nice_kk_in_multipartite(const PartitionProfile & parts, int k) -> Count
    {
        if (k < 1)
            throw std::invalid_argument("clique order must be at least 1");
        if (parts.size() != k)
            return 0;
        Count product = 1;
        for (int p : parts.parts())
            product = checked_mul(product, static_cast<Count>(p));
        return product;
    }
}
