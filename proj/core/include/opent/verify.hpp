#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace opent {

struct CriterionResult {
    std::string name;
    bool pass = false;
    double worst = 0.0;       // worst observed deviation / margin, criterion-specific
    std::string detail;
};

/// Run the full verification battery with a fixed seed. Deterministic:
/// identical seed gives identical results and identical rendered lines.
std::vector<CriterionResult> run_verification(std::uint64_t seed);

/// One fixed-format line per criterion ("PASS name ..." / "FAIL name ...").
std::string render_verification(const std::vector<CriterionResult>& results);

}  // namespace opent
