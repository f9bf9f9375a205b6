// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails.

#include "niceturan/alignment.hpp"
#include "niceturan/canonical.hpp"
#include "niceturan/constructions.hpp"
#include "niceturan/copies.hpp"
#include "niceturan/families.hpp"
#include "niceturan/graph6.hpp"
#include "niceturan/random_graph.hpp"
#include "niceturan/search.hpp"
#include "niceturan/symmetrize.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

using namespace niceturan;

namespace
{
    struct Outcome
    {
        bool passed = true;
        std::string detail;
    };

    // Collects the first failure and a running count of checks.
    struct Checker
    {
        std::size_t checks = 0;
        bool passed = true;
        std::string first_failure;

        void expect(bool ok, const std::function<std::string()> & describe)
        {
            ++checks;
            if (! ok && passed) {
                passed = false;
                first_failure = describe();
            }
        }

        auto outcome(const std::string & summary) const -> Outcome
        {
            std::ostringstream out;
            out << checks << " checks";
            if (! summary.empty())
                out << ", " << summary;
            if (! passed)
                out << "; first failure: " << first_failure;
            return {passed, out.str()};
        }
    };

    auto k(int n) -> Pattern
    {
        return Pattern(complete_graph(n), "K" + std::to_string(n));
    }

    auto all_graphs_up_to(int max_n) -> std::vector<Graph>
    {
        std::vector<Graph> out;
        for (int n = 1; n <= max_n; ++n)
            for (auto & g : nonisomorphic_graphs(n))
                out.push_back(std::move(g));
        return out;
    }

    auto oracle_equivalence() -> Outcome
    {
        std::vector<std::pair<Pattern, Pattern>> battery{
            {k(3), Pattern(cycle_graph(4), "C4")},         {k(2), k(3)},
            {Pattern(star_graph(2), "K(1,2)"), k(3)},      {k(3), Pattern(book_graph(2), "B2")},
            {k(3), k(3)}};
        Checker c;
        for (int n = 1; n <= 5; ++n)
            for (const auto & [h, f] : battery)
                for (auto mode : {SearchMode::nice, SearchMode::classic}) {
                    auto a = exhaustive_max(n, h, f, mode, GeneratorKind::canonical);
                    auto b = exhaustive_max(n, h, f, mode, GeneratorKind::labeled);
                    c.expect(a.value == b.value && a.witnesses == b.witnesses, [&] {
                        return "n=" + std::to_string(n) + " " + h.name() + "/" + f.name() + " " + to_string(mode) +
                               ": " + std::to_string(a.value) + " vs " + std::to_string(b.value);
                    });
                }
        return c.outcome("n <= 5, 5 pairs, nice and classic");
    }

    auto triangle_identity() -> Outcome
    {
        Pattern c4(cycle_graph(4), "C4"), b2(book_graph(2), "B2");
        Checker c;
        std::string values;
        for (int n = 1; n <= 7; ++n) {
            auto a = exhaustive_max(n, k(3), c4, SearchMode::nice).value;
            auto b = exhaustive_max(n, k(3), b2, SearchMode::nice).value;
            auto e = exhaustive_max(n, k(3), b2, SearchMode::classic).value;
            c.expect(a == b && b == e, [&] {
                return "n=" + std::to_string(n) + ": " + std::to_string(a) + ", " + std::to_string(b) + ", " +
                       std::to_string(e);
            });
            values += (n > 1 ? "," : "") + std::to_string(a);
        }
        return c.outcome("values n=1..7: " + values);
    }

    auto c4_b2_equivalence() -> Outcome
    {
        Pattern c4(cycle_graph(4)), b2(book_graph(2));
        Checker c;
        for (const auto & g : all_graphs_up_to(6))
            c.expect(nice_count(k(3), c4, g).nice_sets == nice_count(k(3), b2, g).nice_sets,
                     [&] { return to_graph6(g); });
        return c.outcome("all graphs on <= 6 vertices");
    }

    auto edge_bound() -> Outcome
    {
        std::vector<Pattern> cycles;
        for (int l = 4; l <= 8; ++l)
            cycles.emplace_back(cycle_graph(l));
        Checker c;
        auto check = [&](const Graph & g) {
            for (int l = 4; l <= 8; ++l) {
                auto nice = nice_count(k(3), cycles[l - 4], g).nice_copies;
                c.expect(3 * nice <= static_cast<Count>((l - 3) * g.edge_count()), [&] {
                    return to_graph6(g) + " l=" + std::to_string(l) + " nice=" + std::to_string(nice);
                });
            }
        };
        for (const auto & g : all_graphs_up_to(6))
            check(g);
        Rng rng(20240501);
        for (int i = 0; i < 500; ++i)
            check(random_graph_between(3, 12, rng));
        return c.outcome("l in 4..8, all graphs <= 6 vertices plus 500 random graphs n <= 12");
    }

    auto random_objective(Rng & rng) -> Objective
    {
        static const std::vector<std::vector<int>> shapes{{1, 1}, {1, 1, 1}, {1, 2}, {2, 2}, {1, 1, 2}, {1, 3}};
        Objective o;
        int terms = 1 + static_cast<int>(rng() % 2);
        for (int t = 0; t < terms; ++t) {
            Pattern p(complete_multipartite(shapes[rng() % shapes.size()]));
            Rational w(1 + static_cast<int>(rng() % 6), 1 + static_cast<int>(rng() % 4));
            if (rng() % 2)
                o.add_nice(w, p, 1 + static_cast<int>(rng() % 3));
            else
                o.add_plain(w, p);
        }
        return o;
    }

    auto symmetrization_soundness() -> Outcome
    {
        Rng rng(1006);
        Checker c;
        std::size_t steps = 0, strict = 0;
        for (int i = 0; i < 1000; ++i) {
            auto g = random_graph_between(2, 9, rng);
            auto o = random_objective(rng);
            auto describe = [&] { return to_graph6(g) + " " + o.describe(); };
            SymmetrizationTrace trace;
            try {
                trace = run_zykov(g, o);
            }
            catch (const std::exception & e) {
                c.expect(false, [&] { return describe() + ": " + e.what(); });
                continue;
            }
            Graph current = g;
            for (const auto & s : trace.steps) {
                ++steps;
                auto before = objective_value(current, o);
                auto pair_before = d_star_pair(s.u, s.v, current, o);
                auto du = d_star(s.u, current, o), dv = d_star(s.v, current, o);
                auto next = symmetrize_step(current, s.u, s.v);
                auto after = objective_value(next, o);
                auto pair_after = d_star_pair(s.u, s.v, next, o);
                c.expect(before == s.x_before && after == s.x_after, [&] { return describe() + ": trace values"; });
                c.expect(du <= dv, [&] { return describe() + ": moved the larger d*"; });
                c.expect(after >= before, [&] { return describe() + ": x decreased"; });
                if (du < dv) {
                    ++strict;
                    c.expect(after > before, [&] { return describe() + ": strict step did not increase x"; });
                }
                c.expect(pair_after >= pair_before, [&] { return describe() + ": d*(u,v) decreased"; });
                current = next;
            }
            c.expect(current == trace.final_graph && is_complete_multipartite(current),
                     [&] { return describe() + ": final graph not complete multipartite"; });
        }
        return c.outcome("1000 runs, " + std::to_string(steps) + " steps (" + std::to_string(strict) + " strict)");
    }

    auto profile_optimality() -> Outcome
    {
        std::vector<std::pair<std::string, Objective>> objectives(5);
        objectives[0].first = "nice K3 wrt K4";
        objectives[0].second.add_nice(1, k(3), 3);
        objectives[1].first = "nice K2 wrt K3";
        objectives[1].second.add_nice(1, k(2), 2);
        objectives[2].first = "nice K(1,2) wrt K3";
        objectives[2].second.add_nice(1, Pattern(star_graph(2)), 2);
        objectives[3].first = "plain K(1,1,1)";
        objectives[3].second.add_plain(1, k(3));
        objectives[4].first = "nice K(1,2) k=2 + plain K2";
        objectives[4].second.add_nice(1, Pattern(star_graph(2)), 2);
        objectives[4].second.add_plain(1, k(2));
        Checker c;
        for (const auto & [name, o] : objectives)
            for (int n = 1; n <= 6; ++n) {
                auto profile = profile_optimize(n, o).value;
                auto exhaustive = exhaustive_objective_max(n, o).value;
                c.expect(profile == exhaustive, [&] {
                    return name + " n=" + std::to_string(n) + ": " + to_string(profile) + " vs " + to_string(exhaustive);
                });
            }
        return c.outcome("5 objectives, n <= 6");
    }

    auto clique_turan() -> Outcome
    {
        Checker c;
        for (int r = 2; r <= 3; ++r)
            for (int n = 1; n <= 7; ++n) {
                auto found = exhaustive_max(n, k(r), k(r + 1), SearchMode::nice).value;
                auto expected = nice_kk_in_multipartite(PartitionProfile(turan_profile(n, r)), r);
                c.expect(found == expected, [&] {
                    return "k=" + std::to_string(r) + " n=" + std::to_string(n) + ": " + std::to_string(found) +
                           " vs " + std::to_string(expected);
                });
            }
        return c.outcome("k in {2,3}, n <= 7");
    }

    auto bipartite_split() -> Outcome
    {
        Pattern k22(complete_multipartite({2, 2}));
        Checker c;
        std::string values;
        for (int n = 1; n <= 7; ++n) {
            Count split = n >= 4 ? best_bipartite_split(n, 2, 2).second : 0;
            auto nice = exhaustive_max(n, k22, k(3), SearchMode::nice).value;
            auto classic = exhaustive_max(n, k22, k(3), SearchMode::classic).value;
            c.expect(nice == split && classic == split, [&] {
                return "n=" + std::to_string(n) + ": " + std::to_string(nice) + ", " + std::to_string(classic) +
                       " vs " + std::to_string(split);
            });
            values += (n > 1 ? "," : "") + std::to_string(split);
        }
        return c.outcome("values n=1..7: " + values);
    }

    auto construction_certificates() -> Outcome
    {
        Checker c;
        for (int kk = 4; kk <= 5; ++kk)
            for (int m = 1; m <= 3; ++m)
                for (int d : {1, 3}) {
                    auto r = path_blowup(kk, m);
                    auto report = certify(r, Pattern(path_graph(kk)), Pattern(path_graph(kk + d)));
                    auto promised = static_cast<std::size_t>(std::llround(std::pow(m, kk - 2)));
                    c.expect(report.passed && r.designated_sets.size() == promised, [&] {
                        return "path_blowup(" + std::to_string(kk) + "," + std::to_string(m) + ") vs P" +
                               std::to_string(kk + d) + ": " + report.reason;
                    });
                }
        for (int kk = 3; kk <= 5; ++kk) {
            std::uint64_t side = 0;
            for (int v = 0; v < 2 * kk; v += 2)
                side |= bit(v);
            auto cycle = cycle_graph(2 * kk);
            auto r = double_one_side(cycle, VertexSet{side});
            auto report = certify(r, k(3), Pattern(cycle_graph(2 * kk)));
            c.expect(report.passed && r.designated_sets.size() == static_cast<std::size_t>(cycle.edge_count()),
                     [&] { return "double_one_side(C" + std::to_string(2 * kk) + "): " + report.reason; });
        }
        return c.outcome("path blow-ups k in {4,5}, m <= 3; doubled C6, C8, C10");
    }

    auto invariant_suite() -> Outcome
    {
        struct Pair
        {
            Pattern h, f;
        };
        std::vector<Pair> mixed{{k(3), Pattern(cycle_graph(4), "C4")},
                                {k(3), Pattern(book_graph(2), "B2")},
                                {k(2), k(3)},
                                {Pattern(star_graph(2), "K(1,2)"), k(3)},
                                {Pattern(path_graph(4), "P4"), Pattern(path_graph(5), "P5")},
                                {Pattern(cycle_graph(4), "C4"), k(3)},
                                {k(3), k(4)}};
        // |V(H)| >= |V(F)| and H contains no F
        std::vector<Pair> induced{{Pattern(cycle_graph(4), "C4"), k(3)},
                                  {Pattern(path_graph(4), "P4"), k(3)},
                                  {Pattern(cycle_graph(5), "C5"), Pattern(cycle_graph(4), "C4")},
                                  {Pattern(complete_multipartite({2, 3}), "K(2,3)"), k(3)},
                                  {Pattern(star_graph(3), "K(1,3)"), Pattern(path_graph(4), "P4")}};
        const std::vector<std::pair<int, int>> collapse{{3, 4}, {3, 5}, {4, 5}};

        Checker c;
        Rng rng(777);
        for (int i = 0; i < 200; ++i) {
            auto g = random_graph_between(4, 10, rng);
            auto where = [&](const Pair & p, const std::string & what) {
                return what + " " + p.h.name() + "/" + p.f.name() + " on " + to_graph6(g);
            };
            for (const auto & p : mixed) {
                auto nice = nice_count(p.h, p.f, g).nice_copies;
                if (! contains_copy(p.f, g))
                    c.expect(nice == count_copies(p.h, g), [&] { return where(p, "F-free collapse"); });
                if (p.h.order() <= p.f.order())
                    c.expect(strongly_nice_count(p.h, p.f, g) >= nice, [&] { return where(p, "strong >= weak"); });
                if (contains_copy(p.h, g))
                    c.expect(nice_count(p.h, p.h, g).nice_copies == 0,
                             [&] { return where(p, "self-alignment"); });
            }
            for (const auto & p : induced)
                c.expect(nice_count(p.h, p.f, g).nice_copies >= count_induced(p.h, g),
                         [&] { return where(p, "induced lower bound"); });
            for (auto [t, t2] : collapse) {
                Pattern small(complete_multipartite({2, t})), big(complete_multipartite({2, t2}));
                for (auto s : nice_count(small, big, g).nice_sets) {
                    // every split of s into a pair and a t-set that carries a K_{2,t}
                    auto members = s.members();
                    for (std::size_t a = 0; a < members.size(); ++a)
                        for (std::size_t b = a + 1; b < members.size(); ++b) {
                            int u = members[a], v = members[b];
                            auto rest = s.bits() & ~(bit(u) | bit(v));
                            auto common = g.neighbours(u) & g.neighbours(v);
                            if ((rest & ~common) != 0)
                                continue;
                            c.expect(std::popcount(common) < t2, [&] {
                                return "K(2," + std::to_string(t) + ") collapse vs t'=" + std::to_string(t2) + " on " +
                                       to_graph6(g);
                            });
                        }
                }
            }
        }
        return c.outcome("200 random graphs");
    }

    auto graph6_round_trip() -> Outcome
    {
        Checker c;
        Rng rng(60);
        for (int i = 0; i < 10000; ++i) {
            auto g = random_graph(static_cast<int>(rng() % 9), unit_draw(rng), rng);
            auto text = to_graph6(g);
            c.expect(from_graph6(text) == g && to_graph6(from_graph6(text)) == text, [&] { return text; });
        }
        Graph petersen(10);
        for (int i = 0; i < 5; ++i) {
            petersen.add_edge(i, (i + 1) % 5);
            petersen.add_edge(i, i + 5);
            petersen.add_edge(5 + i, 5 + (i + 2) % 5);
        }
        const std::vector<std::pair<std::string, Graph>> fixtures{
            {"C~", complete_graph(4)}, {"Dhc", cycle_graph(5)}, {"IheA@GUAo", petersen}};
        for (const auto & [text, graph] : fixtures) {
            c.expect(from_graph6(text) == graph, [&] { return "decode " + text; });
            c.expect(to_graph6(graph) == text, [&] { return "encode " + text; });
        }
        return c.outcome("10^4 random graphs on <= 8 vertices, fixtures K4, C5, Petersen");
    }
}

int main()
{
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"oracle-equivalence", oracle_equivalence},
        {"triangle-c4-b2-identity", triangle_identity},
        {"c4-b2-alignment-equivalence", c4_b2_equivalence},
        {"nice-triangle-edge-bound", edge_bound},
        {"symmetrization-soundness", symmetrization_soundness},
        {"profile-optimality", profile_optimality},
        {"maximal-clique-turan", clique_turan},
        {"k22-bipartite-split", bipartite_split},
        {"construction-certificates", construction_certificates},
        {"invariant-suite", invariant_suite},
        {"graph6-round-trip", graph6_round_trip},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        auto start = std::chrono::steady_clock::now();
        Outcome outcome;
        try {
            outcome = criteria[i].second();
        }
        catch (const std::exception & e) {
            outcome = {false, std::string("exception: ") + e.what()};
        }
        double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        failures += ! outcome.passed;
        std::printf("%s %2zu %-28s %8.2fs  %s\n", outcome.passed ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                    seconds, outcome.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
