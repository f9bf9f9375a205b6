#include "niceturan/claims.hpp"
#include "niceturan/alignment.hpp"
#include "niceturan/copies.hpp"
#include "niceturan/errors.hpp"
#include "niceturan/families.hpp"
#include "niceturan/graph6.hpp"
#include "niceturan/random_graph.hpp"
#include "niceturan/search.hpp"
#include "niceturan/symmetrize.hpp"

#include <functional>
#include <map>

namespace niceturan
{
    namespace
    {
        using Json = nlohmann::json;

        struct Battery
        {
            std::string h, f;
            Pattern hp, fp;
        };

        auto battery_entry(const std::string & h_name, Graph h, const std::string & f_name, Graph f) -> Battery
        {
            return {h_name, f_name, Pattern(std::move(h), h_name), Pattern(std::move(f), f_name)};
        }

        // Records the first failing instance of a sampled or exhaustive check.
        struct Tally
        {
            std::size_t checked = 0;
            bool passed = true;
            Json counterexample;

            void observe(bool ok, const std::function<Json()> & describe)
            {
                ++checked;
                if (! ok && passed) {
                    passed = false;
                    counterexample = describe();
                }
            }

            auto finish(const std::string & id, Json details) const -> ClaimResult
            {
                details["checked"] = checked;
                if (! passed)
                    details["counterexample"] = counterexample;
                return {id, passed, std::move(details)};
            }
        };

        void for_each_small_graph(int max_n, const std::function<void(const Graph &)> & visit)
        {
            GenerateOptions options;
            options.max_n = std::max(max_n, 1);
            for (int n = 1; n <= max_n; ++n)
                for_each_nonisomorphic(n, [&](const Graph & g, int) { visit(g); }, options);
        }

        void for_each_random_graph(const ClaimOptions & options, int min_n, int max_n,
                                   const std::function<void(const Graph &)> & visit)
        {
            Rng rng(options.seed);
            for (int i = 0; i < options.samples; ++i)
                visit(random_graph_between(min_n, max_n, rng));
        }

        auto search_options(const ClaimOptions & options) -> SearchOptions
        {
            SearchOptions search;
            search.jobs = options.jobs;
            search.limits.max_canonical_n = std::max(search.limits.max_canonical_n, options.max_n);
            return search;
        }

        auto triangle_identity(const ClaimOptions & options) -> ClaimResult
        {
            Pattern k3(complete_graph(3), "K3"), c4(cycle_graph(4), "C4"), b2(book_graph(2), "B2");
            auto search = search_options(options);
            Json rows = Json::array();
            bool passed = true;
            for (int n = 1; n <= options.max_n; ++n) {
                auto a = exhaustive_max(n, k3, c4, SearchMode::nice, GeneratorKind::canonical, search).value;
                auto b = exhaustive_max(n, k3, b2, SearchMode::nice, GeneratorKind::canonical, search).value;
                auto c = exhaustive_max(n, k3, b2, SearchMode::classic, GeneratorKind::canonical, search).value;
                bool ok = a == b && b == c;
                passed = passed && ok;
                rows.push_back({{"n", n}, {"ex_re_K3_C4", a}, {"ex_re_K3_B2", b}, {"ex_K3_B2", c}, {"equal", ok}});
            }
            return {"triangle-c4-b2-identity", passed, {{"rows", rows}}};
        }

        auto edge_bound(const ClaimOptions & options) -> ClaimResult
        {
            std::vector<Pattern> cycles;
            for (int l = 4; l <= 8; ++l)
                cycles.emplace_back(cycle_graph(l), "C" + std::to_string(l));
            Pattern k3(complete_graph(3), "K3");
            Tally tally;
            auto check = [&](const Graph & g) {
                for (int l = 4; l <= 8; ++l) {
                    auto nice = nice_count(k3, cycles[l - 4], g).nice_copies;
                    // nice <= (l - 3) |E| / 3, compared without division
                    tally.observe(checked_mul(3, nice) <= checked_mul(l - 3, g.edge_count()), [&] {
                        return Json{{"graph", to_graph6(g)}, {"l", l}, {"nice", nice}, {"edges", g.edge_count()}};
                    });
                }
            };
            for_each_small_graph(options.max_n, check);
            for_each_random_graph(options, 3, 12, check);
            return tally.finish("nice-triangle-edge-bound",
                                {{"l", {4, 5, 6, 7, 8}}, {"exhaustive_max_n", options.max_n},
                                 {"samples", options.samples}, {"seed", options.seed}});
        }

        auto c4_b2_equivalence(const ClaimOptions & options) -> ClaimResult
        {
            Pattern k3(complete_graph(3), "K3"), c4(cycle_graph(4), "C4"), b2(book_graph(2), "B2");
            Tally tally;
            for_each_small_graph(options.max_n, [&](const Graph & g) {
                auto a = nice_count(k3, c4, g).nice_sets;
                auto b = nice_count(k3, b2, g).nice_sets;
                tally.observe(a == b, [&] { return Json{{"graph", to_graph6(g)}}; });
            });
            return tally.finish("c4-b2-alignment-equivalence", {{"max_n", options.max_n}});
        }

        auto clique_turan(const ClaimOptions & options) -> ClaimResult
        {
            auto search = search_options(options);
            Json rows = Json::array();
            bool passed = true;
            for (int k = 2; k <= 3; ++k) {
                Pattern kk(complete_graph(k)), kk1(complete_graph(k + 1));
                for (int n = 1; n <= options.max_n; ++n) {
                    auto found = exhaustive_max(n, kk, kk1, SearchMode::nice, GeneratorKind::canonical, search).value;
                    auto expected = nice_kk_in_multipartite(PartitionProfile(turan_profile(n, k)), k);
                    passed = passed && found == expected;
                    rows.push_back({{"k", k}, {"n", n}, {"ex_re", found}, {"turan", expected}});
                }
            }
            return {"maximal-clique-turan", passed, {{"rows", rows}}};
        }

        auto bipartite_split(const ClaimOptions & options) -> ClaimResult
        {
            Pattern k22(complete_multipartite({2, 2}), "K(2,2)"), k3(complete_graph(3), "K3");
            auto search = search_options(options);
            Json rows = Json::array();
            bool passed = true;
            for (int n = 1; n <= options.max_n; ++n) {
                auto nice = exhaustive_max(n, k22, k3, SearchMode::nice, GeneratorKind::canonical, search).value;
                auto classic = exhaustive_max(n, k22, k3, SearchMode::classic, GeneratorKind::canonical, search).value;
                Count split = 0;
                int t = 0;
                if (n >= 4)
                    std::tie(t, split) = best_bipartite_split(n, 2, 2);
                bool ok = nice == split && classic == split;
                passed = passed && ok;
                rows.push_back({{"n", n}, {"ex_re", nice}, {"ex", classic}, {"split_t", t}, {"split_value", split}});
            }
            return {"k22-bipartite-split", passed, {{"rows", rows}}};
        }

        auto induced_bound(const ClaimOptions & options) -> ClaimResult
        {
            // |V(H)| >= |V(F)| and H contains no copy of F
            std::vector<Battery> battery{
                battery_entry("C4", cycle_graph(4), "K3", complete_graph(3)),
                battery_entry("P4", path_graph(4), "K3", complete_graph(3)),
                battery_entry("C5", cycle_graph(5), "K3", complete_graph(3)),
                battery_entry("K(2,3)", complete_multipartite({2, 3}), "K3", complete_graph(3)),
                battery_entry("K(1,3)", star_graph(3), "P4", path_graph(4)),
                battery_entry("C4", cycle_graph(4), "K(1,3)", star_graph(3)),
                battery_entry("C5", cycle_graph(5), "C4", cycle_graph(4)),
            };
            Tally tally;
            for_each_random_graph(options, 4, 10, [&](const Graph & g) {
                for (const auto & b : battery) {
                    auto nice = nice_count(b.hp, b.fp, g).nice_copies;
                    auto induced = count_induced(b.hp, g);
                    tally.observe(nice >= induced, [&] {
                        return Json{{"graph", to_graph6(g)}, {"h", b.h}, {"f", b.f}, {"nice", nice}, {"induced", induced}};
                    });
                }
            });
            return tally.finish("induced-lower-bound", {{"samples", options.samples}, {"seed", options.seed}});
        }

        auto k2t_collapse(const ClaimOptions & options) -> ClaimResult
        {
            const std::vector<std::pair<int, int>> pairs{{3, 4}, {3, 5}, {4, 5}};
            Tally tally;
            for_each_random_graph(options, 4, 10, [&](const Graph & g) {
                for (auto [t, t2] : pairs) {
                    Pattern big(complete_multipartite({2, t2}));
                    for (int u = 0; u < g.order(); ++u)
                        for (int v = u + 1; v < g.order(); ++v) {
                            auto common = g.neighbours(u) & g.neighbours(v);
                            if (std::popcount(common) < t2)
                                continue;
                            // every t-subset of the common neighbourhood with {u, v} carries a K_{2,t}
                            auto members = VertexSet{common}.members();
                            std::vector<int> pick(t);
                            std::function<void(int, int)> choose = [&](int depth, int from) {
                                if (depth == t) {
                                    std::uint64_t s = bit(u) | bit(v);
                                    for (int i : pick)
                                        s |= bit(members[i]);
                                    bool nice = is_nice(VertexSet{s}, big, g).nice;
                                    tally.observe(! nice, [&] {
                                        return Json{{"graph", to_graph6(g)}, {"t", t}, {"t_prime", t2},
                                                    {"set", VertexSet{s}.to_hex()}};
                                    });
                                    return;
                                }
                                for (int i = from; i < static_cast<int>(members.size()); ++i) {
                                    pick[depth] = i;
                                    choose(depth + 1, i + 1);
                                }
                            };
                            choose(0, 0);
                        }
                }
            });
            return tally.finish("k2t-collapse", {{"pairs", pairs}, {"samples", options.samples}, {"seed", options.seed}});
        }

        auto self_align(const ClaimOptions & options) -> ClaimResult
        {
            std::vector<std::pair<std::string, Pattern>> patterns{
                {"K2", Pattern(complete_graph(2))},     {"K3", Pattern(complete_graph(3))},
                {"P4", Pattern(path_graph(4))},         {"C4", Pattern(cycle_graph(4))},
                {"B2", Pattern(book_graph(2))},         {"K(1,3)", Pattern(star_graph(3))},
            };
            Tally tally;
            for_each_random_graph(options, 4, 10, [&](const Graph & g) {
                for (const auto & [name, h] : patterns) {
                    if (! contains_copy(h, g))
                        continue;
                    auto nice = nice_count(h, h, g).nice_copies;
                    tally.observe(nice == 0, [&] { return Json{{"graph", to_graph6(g)}, {"h", name}, {"nice", nice}}; });
                }
            });
            return tally.finish("selfalign-zero", {{"samples", options.samples}, {"seed", options.seed}});
        }

        auto mixed_battery() -> std::vector<Battery>
        {
            return {
                battery_entry("K3", complete_graph(3), "C4", cycle_graph(4)),
                battery_entry("K3", complete_graph(3), "B2", book_graph(2)),
                battery_entry("K2", complete_graph(2), "K3", complete_graph(3)),
                battery_entry("K(1,2)", star_graph(2), "K3", complete_graph(3)),
                battery_entry("P4", path_graph(4), "P5", path_graph(5)),
                battery_entry("K3", complete_graph(3), "K4", complete_graph(4)),
                battery_entry("C4", cycle_graph(4), "K3", complete_graph(3)),
            };
        }

        auto f_free_collapse(const ClaimOptions & options) -> ClaimResult
        {
            auto battery = mixed_battery();
            Tally tally;
            for_each_random_graph(options, 4, 10, [&](const Graph & g) {
                for (const auto & b : battery) {
                    if (contains_copy(b.fp, g))
                        continue;
                    auto nice = nice_count(b.hp, b.fp, g).nice_copies;
                    auto total = count_copies(b.hp, g);
                    tally.observe(nice == total, [&] {
                        return Json{{"graph", to_graph6(g)}, {"h", b.h}, {"f", b.f}, {"nice", nice}, {"total", total}};
                    });
                }
            });
            return tally.finish("f-free-collapse", {{"samples", options.samples}, {"seed", options.seed}});
        }

        auto strong_vs_weak(const ClaimOptions & options) -> ClaimResult
        {
            auto battery = mixed_battery();
            Tally tally;
            for_each_random_graph(options, 4, 10, [&](const Graph & g) {
                for (const auto & b : battery) {
                    if (b.hp.order() > b.fp.order())
                        continue;
                    auto nice = nice_count(b.hp, b.fp, g).nice_copies;
                    auto strong = strongly_nice_count(b.hp, b.fp, g);
                    tally.observe(strong >= nice, [&] {
                        return Json{{"graph", to_graph6(g)}, {"h", b.h}, {"f", b.f}, {"nice", nice}, {"strong", strong}};
                    });
                }
            });
            return tally.finish("strong-vs-weak", {{"samples", options.samples}, {"seed", options.seed}});
        }

        struct Registered
        {
            std::string description;
            std::function<ClaimResult(const ClaimOptions &)> run;
        };

        auto registry() -> const std::map<std::string, Registered> &
        {
            static const std::map<std::string, Registered> claims{
                {"triangle-c4-b2-identity",
                 {"ex_re(n,K3,C4) = ex_re(n,K3,B2) = ex(n,K3,B2) for every n <= max_n", triangle_identity}},
                {"nice-triangle-edge-bound",
                 {"nice triangles w.r.t. C_l are at most (l-3)|E|/3, l in 4..8", edge_bound}},
                {"c4-b2-alignment-equivalence",
                 {"a triangle aligns with a C4 iff it aligns with a B2, all graphs on <= max_n vertices",
                  c4_b2_equivalence}},
                {"maximal-clique-turan",
                 {"ex_re(n,K_k,K_{k+1}) is attained by the Turan graph, k in {2,3}", clique_turan}},
                {"k22-bipartite-split",
                 {"ex_re(n,K(2,2),K3) = ex(n,K(2,2),K3) = best split K_{t,n-t}", bipartite_split}},
                {"induced-lower-bound",
                 {"nice copies >= induced copies when |V(H)| >= |V(F)| and H is F-free", induced_bound}},
                {"k2t-collapse",
                 {"a K_{2,t} whose small side has >= t' common neighbours is never nice", k2t_collapse}},
                {"selfalign-zero", {"no copy of H is nice with respect to H itself", self_align}},
                {"f-free-collapse", {"in an F-free graph every copy of H is nice", f_free_collapse}},
                {"strong-vs-weak", {"strongly nice count >= nice count when |V(H)| <= |V(F)|", strong_vs_weak}},
            };
            return claims;
        }
    }

    auto claim_registry() -> std::vector<ClaimInfo>
    {
        std::vector<ClaimInfo> out;
        for (const auto & [id, entry] : registry())
            out.push_back({id, entry.description});
        return out;
    }

    auto verify_claim(const std::string & id, const ClaimOptions & options) -> ClaimResult
    {
        auto it = registry().find(id);
        if (it == registry().end())
            throw ParseError("unknown claim '" + id + "'");
        auto result = it->second.run(options);
        result.details["description"] = it->second.description;
        return result;
    }
}
