#ifndef NICETURAN_REPORT_JSON_HPP
#define NICETURAN_REPORT_JSON_HPP

#include "niceturan/alignment.hpp"
#include "niceturan/constructions.hpp"
#include "niceturan/search.hpp"
#include "niceturan/symmetrize.hpp"

#include "json.hpp"

namespace niceturan
{
    using Json = nlohmann::json;

    // {h, f, g, total, nice, nice_sets: [hex], witnesses: [[set, fset]]}
    auto niceness_json(const NicenessReport & report, const Pattern & h, const Pattern & f, const Graph & g) -> Json;

    auto search_record_json(const SearchRecord & record) -> Json;
    // Throws ParseError on missing or mistyped fields.
    auto search_record_from_json(const Json & json) -> SearchRecord;

    // Rationals become "p/q" strings. Without steps only the summary is emitted.
    auto trace_json(const SymmetrizationTrace & trace, bool with_steps = true) -> Json;

    auto construction_json(const ConstructionResult & result) -> Json;
    auto certification_json(const CertificationReport & report) -> Json;
}

#endif
