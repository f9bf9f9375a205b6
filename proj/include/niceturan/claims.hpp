#ifndef NICETURAN_CLAIMS_HPP
#define NICETURAN_CLAIMS_HPP

#include "json.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace niceturan
{
    struct ClaimOptions
    {
        int max_n = 6;            // exhaustive checks run over every n <= max_n
        int samples = 500;        // random graphs for the sampled checks
        std::uint64_t seed = 1;
        int jobs = 1;
    };

    struct ClaimResult
    {
        std::string id;
        bool passed = true;
        nlohmann::json details;
    };

    struct ClaimInfo
    {
        std::string id;
        std::string description;
    };

    auto claim_registry() -> std::vector<ClaimInfo>;

    /// Runs the test plan of one registered claim. Throws ParseError for an
    /// unknown id. A failed claim carries the offending instance in details.
    auto verify_claim(const std::string & id, const ClaimOptions & options = {}) -> ClaimResult;
}

#endif
