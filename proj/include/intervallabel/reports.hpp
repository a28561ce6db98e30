#pragma once

#include <string>
#include <vector>

#include "intervallabel/graph.hpp"
#include "intervallabel/verification.hpp"

namespace intervallabel {

// JSON renderings of verification results. Key order is fixed (sorted), so
// equal inputs render to identical bytes.
std::string stats_json(const GraphStats& stats);
std::string bound_report_json(const BoundReport& report);
std::string violations_json(const std::vector<Violation>& violations);
std::string claim_check_json(Claim claim, const ClaimCheck& check);

}  // namespace intervallabel
