#include "niceturan/report_json.hpp"
#include "niceturan/errors.hpp"
#include "niceturan/graph6.hpp"

namespace niceturan
{
    auto niceness_json(const NicenessReport & report, const Pattern & h, const Pattern & f, const Graph & g) -> Json
    {
        Json sets = Json::array();
        for (auto s : report.nice_sets)
            sets.push_back(s.to_hex());
        Json witnesses = Json::array();
        for (auto [s, t] : report.aligned_sets)
            witnesses.push_back({s.to_hex(), t.to_hex()});
        return {{"h", to_graph6(h.graph())}, {"f", to_graph6(f.graph())}, {"g", to_graph6(g)},
                {"total", report.total_copies}, {"nice", report.nice_copies},
                {"nice_sets", sets},   {"witnesses", witnesses}};
    }

    auto search_record_json(const SearchRecord & record) -> Json
    {
        return {{"n", record.n},
                {"h", record.h},
                {"f", record.f},
                {"mode", to_string(record.mode)},
                {"value", record.value},
                {"witnesses", record.witnesses},
                {"witnesses_truncated", record.witnesses_truncated},
                {"graphs_examined", record.graphs_examined},
                {"generator", to_string(record.generator)}};
    }

    auto search_record_from_json(const Json & json) -> SearchRecord
    {
        try {
            SearchRecord record;
            record.n = json.at("n").get<int>();
            record.h = json.at("h").get<std::string>();
            record.f = json.at("f").get<std::string>();
            record.mode = parse_search_mode(json.at("mode").get<std::string>());
            record.value = json.at("value").get<Count>();
            record.witnesses = json.at("witnesses").get<std::vector<std::string>>();
            record.witnesses_truncated = json.value("witnesses_truncated", false);
            record.graphs_examined = json.at("graphs_examined").get<Count>();
            record.generator = parse_generator(json.at("generator").get<std::string>());
            return record;
        }
        catch (const nlohmann::json::exception & e) {
            throw ParseError(std::string("malformed search record: ") + e.what());
        }
    }

    auto trace_json(const SymmetrizationTrace & trace, bool with_steps) -> Json
    {
        Json out = {{"initial_graph", to_graph6(trace.initial_graph)},
                    {"final_graph", to_graph6(trace.final_graph)},
                    {"final_parts", trace.final_parts},
                    {"step_count", trace.steps.size()}};
        if (! trace.steps.empty()) {
            out["x_initial"] = to_string(trace.steps.front().x_before);
            out["x_final"] = to_string(trace.steps.back().x_after);
        }
        if (with_steps) {
            Json steps = Json::array();
            for (const auto & s : trace.steps)
                steps.push_back({{"u", s.u},
                                 {"v", s.v},
                                 {"d_star_u", to_string(s.d_star_u)},
                                 {"d_star_v", to_string(s.d_star_v)},
                                 {"x_before", to_string(s.x_before)},
                                 {"x_after", to_string(s.x_after)},
                                 {"pair_before", to_string(s.pair_before)},
                                 {"pair_after", to_string(s.pair_after)},
                                 {"rule", to_string(s.rule)}});
            out["steps"] = steps;
        }
        return out;
    }

    auto construction_json(const ConstructionResult & result) -> Json
    {
        Json sets = Json::array();
        for (auto s : result.designated_sets)
            sets.push_back(s.to_hex());
        Json out = {{"graph6", to_graph6(result.graph)},
                    {"n", result.graph.order()},
                    {"edges", result.graph.edge_count()},
                    {"claim", result.claim},
                    {"designated_sets", sets}};
        if (! result.note.empty())
            out["note"] = result.note;
        return out;
    }

    auto certification_json(const CertificationReport & report) -> Json
    {
        Json out = {{"passed", report.passed}, {"checked", report.checked}, {"claim", report.claim}};
        if (! report.note.empty())
            out["note"] = report.note;
        if (report.failing_set) {
            out["failing_set"] = report.failing_set->to_hex();
            out["reason"] = report.reason;
        }
        if (report.witness)
            out["witness"] = report.witness->to_hex();
        return out;
    }
}
