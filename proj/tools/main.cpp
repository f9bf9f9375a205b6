#include "niceturan/alignment.hpp"
#include "niceturan/catalog.hpp"
#include "niceturan/claims.hpp"
#include "niceturan/constructions.hpp"
#include "niceturan/copies.hpp"
#include "niceturan/errors.hpp"
#include "niceturan/graph6.hpp"
#include "niceturan/notation.hpp"
#include "niceturan/report_json.hpp"
#include "niceturan/search.hpp"
#include "niceturan/symmetrize.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>

using namespace niceturan;

namespace
{
    enum Exit
    {
        exit_ok = 0,
        exit_refuted = 1,
        exit_usage = 2,
        exit_resource = 3
    };

    bool pretty = false;

    void emit(const Json & json)
    {
        std::cout << (pretty ? json.dump(2) : json.dump()) << "\n";
    }

    void fail(const std::string & kind, const std::string & message)
    {
        std::cerr << Json{{"error", kind}, {"message", message}}.dump() << "\n";
    }

    // graph6 from the argument, or the first non-empty stdin line for "-"
    auto read_graph(const std::string & text) -> Graph
    {
        if (text != "-")
            return from_graph6(text);
        std::string line;
        while (std::getline(std::cin, line))
            if (line.find_first_not_of(" \t\r") != std::string::npos)
                return from_graph6(line);
        throw ParseError("no graph6 on standard input");
    }

    auto catalog_path(const std::string & flag) -> std::string
    {
        if (! flag.empty())
            return flag;
        const char * env = std::getenv("NICETURAN_CATALOG");
        return env ? env : "";
    }

    struct CountArgs
    {
        std::string graph, h, f;
        bool nice = false, strong = false, induced = false, sets = false;
    };

    auto run_count(const CountArgs & a) -> int
    {
        auto g = read_graph(a.graph);
        auto h = parse_pattern(a.h);
        if ((a.nice || a.strong) && a.f.empty())
            throw ParseError("--nice and --strong need a pattern F");
        Json out = {{"total", count_copies(h, g)}};
        if (a.nice || a.sets) {
            if (a.f.empty())
                throw ParseError("--sets needs a pattern F");
            auto f = parse_pattern(a.f);
            auto report = nice_count(h, f, g);
            if (a.sets)
                out = niceness_json(report, h, f, g);
            else
                out["nice"] = report.nice_copies;
        }
        if (a.strong)
            out["strong"] = strongly_nice_count(h, parse_pattern(a.f), g);
        if (a.induced)
            out["induced"] = count_induced(h, g);
        emit(out);
        return exit_ok;
    }

    struct SearchArgs
    {
        int n = 0;
        std::string h, f, mode = "nice", catalog;
        bool oracle = false;
        int jobs = 1;
        std::size_t witness_cap = 100;
        int max_n = 10;
    };

    auto run_search(const SearchArgs & a) -> int
    {
        auto h = parse_pattern(a.h);
        auto f = parse_pattern(a.f);
        SearchOptions options;
        options.jobs = a.jobs;
        options.witness_cap = a.witness_cap;
        options.limits.max_canonical_n = a.max_n;
        auto record = exhaustive_max(a.n, h, f, parse_search_mode(a.mode),
                                     a.oracle ? GeneratorKind::labeled : GeneratorKind::canonical, options);
        auto json = search_record_json(record);
        auto path = catalog_path(a.catalog);
        if (! path.empty()) {
            auto catalog = Catalog::load(path);
            if (auto discrepancy = catalog.record(record)) {
                emit(json);
                fail("catalog-discrepancy", *discrepancy);
                return exit_refuted;
            }
            catalog.save(path);
            json["catalog"] = path;
        }
        emit(json);
        return exit_ok;
    }

    struct VerifyArgs
    {
        std::string claim;
        bool list = false;
        ClaimOptions options;
    };

    auto run_verify(const VerifyArgs & a) -> int
    {
        if (a.list || a.claim.empty()) {
            Json list = Json::array();
            for (const auto & info : claim_registry())
                list.push_back({{"id", info.id}, {"description", info.description}});
            emit(list);
            return a.list ? exit_ok : exit_usage;
        }
        auto result = verify_claim(a.claim, a.options);
        emit({{"claim", result.id}, {"passed", result.passed}, {"details", result.details}});
        return result.passed ? exit_ok : exit_refuted;
    }

    struct ConstructArgs
    {
        std::string name, graph, side, h, f, sidecar;
        int k = 4, m = 1;
    };

    auto run_construct(const ConstructArgs & a) -> int
    {
        ConstructionResult result;
        if (a.name == "path-blowup")
            result = path_blowup(a.k, a.m);
        else if (a.name == "double-one-side") {
            if (a.graph.empty() || a.side.empty())
                throw ParseError("double-one-side needs --graph and --side");
            result = double_one_side(read_graph(a.graph), VertexSet::from_hex(a.side));
        }
        else
            throw ParseError("unknown construction '" + a.name + "'");

        auto json = construction_json(result);
        bool passed = true;
        if (! a.h.empty() || ! a.f.empty()) {
            if (a.h.empty() || a.f.empty())
                throw ParseError("certification needs both --certify-h and --certify-f");
            auto report = certify(result, parse_pattern(a.h), parse_pattern(a.f));
            json["certification"] = certification_json(report);
            passed = report.passed;
        }
        if (a.sidecar.empty())
            emit(json);
        else {
            std::ofstream out(a.sidecar);
            if (! out)
                throw std::runtime_error("cannot write " + a.sidecar);
            out << json.dump(2) << "\n";
            std::cout << to_graph6(result.graph) << "\n";
        }
        return passed ? exit_ok : exit_refuted;
    }

    struct SymmetrizeArgs
    {
        std::string graph, objective;
        bool trace = false;
        std::uint64_t cap = 0;
    };

    auto run_symmetrize(const SymmetrizeArgs & a) -> int
    {
        auto g = read_graph(a.graph);
        auto objective = parse_objective(a.objective);
        auto trace = run_zykov(g, objective, a.cap ? std::optional<std::uint64_t>(a.cap) : std::nullopt);
        auto json = trace_json(trace, a.trace);
        json["objective"] = objective.describe();
        json["x_final"] = to_string(objective_value(trace.final_graph, objective));
        emit(json);
        return exit_ok;
    }

    auto run_profile(int n, const std::string & text) -> int
    {
        auto objective = parse_objective(text);
        auto best = profile_optimize(n, objective);
        emit({{"n", n},
              {"objective", objective.describe()},
              {"parts", best.profile.parts()},
              {"value", to_string(best.value)},
              {"graph6", to_graph6(best.graph)}});
        return exit_ok;
    }

    auto run_split(int n, int a, int b) -> int
    {
        auto [t, value] = best_bipartite_split(n, a, b);
        emit({{"n", n}, {"a", a}, {"b", b}, {"t", t}, {"value", value}});
        return exit_ok;
    }
}

int main(int argc, char ** argv)
{
    CLI::App app{"Counting, search and symmetrisation for nice copies of graphs"};
    app.set_version_flag("--version", tool_version());
    app.add_flag("--pretty", pretty, "Indent JSON output");
    app.require_subcommand(1);
    app.fallthrough();

    CountArgs count;
    auto * count_cmd = app.add_subcommand("count", "Count copies of H in a graph");
    count_cmd->add_option("graph", count.graph, "Host graph in graph6, or - for stdin")->required();
    count_cmd->add_option("H", count.h, "Pattern H")->required();
    count_cmd->add_option("F", count.f, "Pattern F");
    count_cmd->add_flag("--nice", count.nice, "Copies of H aligning with no copy of F");
    count_cmd->add_flag("--strong", count.strong, "Copies of H strongly aligning with no copy of F");
    count_cmd->add_flag("--induced", count.induced, "Induced copies of H");
    count_cmd->add_flag("--sets", count.sets, "Full report with nice and aligned vertex sets");

    SearchArgs search;
    auto * search_cmd = app.add_subcommand("search", "Exact maximum over all n-vertex graphs");
    search_cmd->add_option("n", search.n, "Number of vertices")->required();
    search_cmd->add_option("H", search.h, "Pattern H")->required();
    search_cmd->add_option("F", search.f, "Pattern F")->required();
    search_cmd->add_option("--mode", search.mode, "nice, classic or strong")
        ->check(CLI::IsMember({"nice", "classic", "strong"}));
    search_cmd->add_flag("--oracle", search.oracle, "Use labelled enumeration instead of canonical generation");
    search_cmd->add_option("--jobs", search.jobs, "Worker threads")->check(CLI::PositiveNumber);
    search_cmd->add_option("--witness-cap", search.witness_cap, "Maximum number of stored witnesses");
    search_cmd->add_option("--max-n", search.max_n, "Vertex limit for canonical generation")->check(CLI::Range(1, 11));
    search_cmd->add_option("--catalog", search.catalog, "Results catalog (default $NICETURAN_CATALOG)");

    VerifyArgs verify;
    auto * verify_cmd = app.add_subcommand("verify", "Check a registered claim");
    verify_cmd->add_option("claim", verify.claim, "Claim id");
    verify_cmd->add_flag("--list", verify.list, "List registered claims");
    verify_cmd->add_option("--max-n", verify.options.max_n, "Largest n for exhaustive checks")
        ->check(CLI::Range(1, 10));
    verify_cmd->add_option("--samples", verify.options.samples, "Random graphs for sampled checks")
        ->check(CLI::NonNegativeNumber);
    verify_cmd->add_option("--seed", verify.options.seed, "Seed for sampled checks");
    verify_cmd->add_option("--jobs", verify.options.jobs, "Worker threads")->check(CLI::PositiveNumber);

    ConstructArgs construct;
    auto * construct_cmd = app.add_subcommand("construct", "Build a construction and list its designated sets");
    construct_cmd->add_option("name", construct.name, "path-blowup or double-one-side")->required();
    construct_cmd->add_option("--k", construct.k, "Path length for path-blowup");
    construct_cmd->add_option("--m", construct.m, "Clones per blown class for path-blowup");
    construct_cmd->add_option("--graph", construct.graph, "Bipartite graph6 for double-one-side");
    construct_cmd->add_option("--side", construct.side, "Doubled side as a hex vertex mask");
    construct_cmd->add_option("--certify-h", construct.h, "Pattern carried by each designated set");
    construct_cmd->add_option("--certify-f", construct.f, "Pattern the designated sets must not align with");
    construct_cmd->add_option("--sidecar", construct.sidecar, "Write JSON here and print only graph6");

    SymmetrizeArgs symmetrize;
    auto * symmetrize_cmd = app.add_subcommand("symmetrize", "Run Zykov symmetrisation for an objective");
    symmetrize_cmd->add_option("graph", symmetrize.graph, "Start graph in graph6, or - for stdin")->required();
    symmetrize_cmd->add_option("objective", symmetrize.objective, "Objective, e.g. \"nice(K3;k=3) + 1/2*plain(K2)\"")
        ->required();
    symmetrize_cmd->add_flag("--trace", symmetrize.trace, "Include every step");
    symmetrize_cmd->add_option("--cap", symmetrize.cap, "Step cap (default 2^n * n * 10)");

    int profile_n = 0;
    std::string profile_objective;
    auto * profile_cmd = app.add_subcommand("profile", "Best complete multipartite graph for an objective");
    profile_cmd->add_option("n", profile_n, "Number of vertices")->required();
    profile_cmd->add_option("objective", profile_objective, "Objective")->required();

    int split_n = 0, split_a = 0, split_b = 0;
    auto * split_cmd = app.add_subcommand("split", "Best K_{t,n-t} for copies of K_{a,b}");
    split_cmd->add_option("n", split_n)->required();
    split_cmd->add_option("a", split_a)->required();
    split_cmd->add_option("b", split_b)->required();

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError & e) {
        int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (*count_cmd)
            return run_count(count);
        if (*search_cmd)
            return run_search(search);
        if (*verify_cmd)
            return run_verify(verify);
        if (*construct_cmd)
            return run_construct(construct);
        if (*symmetrize_cmd)
            return run_symmetrize(symmetrize);
        if (*profile_cmd)
            return run_profile(profile_n, profile_objective);
        if (*split_cmd)
            return run_split(split_n, split_a, split_b);
    }
    catch (const ParseError & e) {
        fail("parse", e.what());
        return exit_usage;
    }
    catch (const CatalogMismatch & e) {
        fail("catalog-discrepancy", e.what());
        return exit_refuted;
    }
    catch (const GuardError & e) {
        fail("guard", e.what());
        return exit_resource;
    }
    catch (const OverflowError & e) {
        fail("overflow", e.what());
        return exit_resource;
    }
    catch (const InternalError & e) {
        fail("internal", e.what());
        return exit_refuted;
    }
    catch (const std::invalid_argument & e) {
        fail("usage", e.what());
        return exit_usage;
    }
    catch (const std::exception & e) {
        fail("error", e.what());
        return exit_resource;
    }
    return exit_usage;
}
