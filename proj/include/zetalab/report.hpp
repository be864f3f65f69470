#pragma once

#include <string>
#include <vector>

namespace zetalab {

/// Outcome of one verification claim. `inconclusive` marks a check that could not be
/// evaluated (non-convergence, undefined statistic); it is never set together with a
/// definite pass.
struct Report {
    std::string claim_id;
    bool passed = false;
    bool inconclusive = false;
    std::vector<double> measured;
    double tolerance = 0.0;
    std::string notes;
    double runtime_s = 0.0;
};

}  // namespace zetalab
